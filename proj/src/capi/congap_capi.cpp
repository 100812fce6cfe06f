#include "congap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/certifier.hpp"
#include "core/error.hpp"
#include "core/intpoly.hpp"
#include "core/report_json.hpp"
#include "core/witness.hpp"

struct congap_poly {
    congap::IntPoly value;
};

struct congap_split_set {
    congap::SplitPrimeSet value;
};

struct congap_witness_list {
    congap::WitnessSearchResult value;
};

struct congap_certify_outcome {
    congap::CertifyOutcome value;
};

struct congap_certificate {
    congap::Certificate value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

congap_status map_code(congap::errc code) {
    switch (code) {
        case congap::errc::argument: return CONGAP_ERR_ARGUMENT;
        case congap::errc::parse: return CONGAP_ERR_PARSE;
        case congap::errc::domain: return CONGAP_ERR_DOMAIN;
        case congap::errc::square_discriminant: return CONGAP_ERR_SQUARE_DISC;
        case congap::errc::too_large: return CONGAP_ERR_TOO_LARGE;
        case congap::errc::reducible: return CONGAP_ERR_REDUCIBLE;
        case congap::errc::unknown_irreducible: return CONGAP_ERR_UNKNOWN_IRREDUCIBLE;
    }
    return CONGAP_ERR_INTERNAL;
}

template <typename Fn>
congap_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return CONGAP_OK;
    } catch (const congap::error& e) {
        set_error(e.what());
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return CONGAP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CONGAP_ERR_INTERNAL;
    }
}

congap_status fail_argument(const char* message) {
    set_error(message);
    return CONGAP_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mpz_class parse_decimal(const char* text) {
    try {
        return mpz_class(std::string(text));
    } catch (const std::invalid_argument&) {
        throw congap::error(congap::errc::parse, "not a decimal integer");
    }
}

congap_witness_report to_c_report(const congap::WitnessReport& r) {
    congap_witness_report out;
    out.n = r.n;
    out.bound = r.bound;
    out.subgroup_order = r.subgroup.generated_order;
    out.phi = r.subgroup.phi;
    out.index = r.subgroup.index;
    out.uncovered_class = r.uncovered_class;
    out.proved = r.status == congap::WitnessStatus::proved_quadratic ? 1 : 0;
    out.shared_factor = r.shared_factor;
    out.sample_count = r.sample_count;
    return out;
}

congap::SearchMode to_mode(congap_search_mode mode) {
    return mode == CONGAP_MODE_FULL_SCAN ? congap::SearchMode::full_scan
                                         : congap::SearchMode::divisors;
}

}  // namespace

extern "C" {

const char* congap_last_error(void) { return g_last_error.c_str(); }

void congap_string_free(char* s) { std::free(s); }

congap_status congap_poly_parse(const char* text, congap_poly** out) {
    if (!text || !out) return fail_argument("null argument");
    return wrap([&] { *out = new congap_poly{congap::parse_poly(text)}; });
}

void congap_poly_free(congap_poly* p) { delete p; }

congap_status congap_poly_format(const congap_poly* p, char** out) {
    if (!p || !out) return fail_argument("null argument");
    return wrap([&] { *out = dup_string(congap::format_poly(p->value)); });
}

congap_status congap_poly_degree(const congap_poly* p, int* out) {
    if (!p || !out) return fail_argument("null argument");
    *out = p->value.degree();
    return CONGAP_OK;
}

congap_status congap_poly_is_monic(const congap_poly* p, int* out) {
    if (!p || !out) return fail_argument("null argument");
    *out = p->value.is_monic() ? 1 : 0;
    return CONGAP_OK;
}

congap_status congap_poly_derivative(const congap_poly* p, congap_poly** out) {
    if (!p || !out) return fail_argument("null argument");
    return wrap([&] { *out = new congap_poly{congap::derivative(p->value)}; });
}

congap_status congap_poly_eval(const congap_poly* p, const char* x_decimal, char** out_decimal) {
    if (!p || !x_decimal || !out_decimal) return fail_argument("null argument");
    return wrap([&] {
        *out_decimal = dup_string(congap::eval_at(p->value, parse_decimal(x_decimal)).get_str());
    });
}

congap_status congap_poly_resultant(const congap_poly* p, const congap_poly* q,
                                    char** out_decimal) {
    if (!p || !q || !out_decimal) return fail_argument("null argument");
    return wrap(
        [&] { *out_decimal = dup_string(congap::resultant(p->value, q->value).get_str()); });
}

congap_status congap_poly_discriminant(const congap_poly* p, char** out_decimal) {
    if (!p || !out_decimal) return fail_argument("null argument");
    return wrap([&] { *out_decimal = dup_string(congap::discriminant(p->value).get_str()); });
}

congap_status congap_disc_report_json(const congap_poly* p, char** out_json) {
    if (!p || !out_json) return fail_argument("null argument");
    return wrap([&] { *out_json = dup_string(congap::disc_report_json(p->value).dump()); });
}

congap_status congap_split_primes(const congap_poly* h, uint64_t bound, unsigned workers,
                                  congap_split_set** out) {
    if (!h || !out) return fail_argument("null argument");
    return wrap([&] {
        *out = new congap_split_set{congap::split_primes(h->value, bound, workers ? workers : 1)};
    });
}

congap_status congap_semi_split_primes(const congap_poly* g, uint64_t bound,
                                       congap_split_set** out) {
    if (!g || !out) return fail_argument("null argument");
    return wrap([&] {
        congap::SplitPrimeSet set;
        set.h = g->value;
        set.bound = bound;
        set.primes = congap::semi_split_primes(g->value, bound);
        *out = new congap_split_set{std::move(set)};
    });
}

void congap_split_set_free(congap_split_set* s) { delete s; }

congap_status congap_split_set_size(const congap_split_set* s, size_t* out) {
    if (!s || !out) return fail_argument("null argument");
    *out = s->value.primes.size();
    return CONGAP_OK;
}

congap_status congap_split_set_prime(const congap_split_set* s, size_t index, uint64_t* out) {
    if (!s || !out) return fail_argument("null argument");
    if (index >= s->value.primes.size()) return fail_argument("index out of range");
    *out = s->value.primes[index];
    return CONGAP_OK;
}

congap_status congap_split_set_json(const congap_split_set* s, uint64_t modulus,
                                    char** out_json) {
    if (!s || !out_json) return fail_argument("null argument");
    return wrap(
        [&] { *out_json = dup_string(congap::split_set_json(s->value, modulus).dump()); });
}

congap_status congap_density_estimate(const congap_poly* h, uint64_t bound, unsigned workers,
                                      congap_density* out) {
    if (!h || !out) return fail_argument("null argument");
    return wrap([&] {
        congap::DensityEstimate est =
            congap::density_estimate(h->value, bound, workers ? workers : 1);
        out->bound = est.bound;
        out->split_count = est.split_count;
        out->prime_count = est.prime_count;
        out->ratio = est.ratio;
    });
}

congap_status congap_density_json(const congap_poly* h, uint64_t bound, uint64_t expected_order,
                                  unsigned workers, char** out_json) {
    if (!h || !out_json) return fail_argument("null argument");
    return wrap([&] {
        congap::DensityEstimate est =
            congap::density_estimate(h->value, bound, workers ? workers : 1);
        *out_json = dup_string(congap::density_json(h->value, est, expected_order).dump());
    });
}

congap_status congap_witness_search(const congap_poly* h, uint64_t bound, uint64_t n_max,
                                    congap_search_mode mode, uint64_t min_sample,
                                    unsigned workers, congap_witness_list** out) {
    if (!h || !out) return fail_argument("null argument");
    return wrap([&] {
        *out = new congap_witness_list{congap::witness_search(
            h->value, bound, n_max, to_mode(mode), min_sample, workers ? workers : 1)};
    });
}

void congap_witness_list_free(congap_witness_list* w) { delete w; }

congap_status congap_witness_list_size(const congap_witness_list* w, size_t* out) {
    if (!w || !out) return fail_argument("null argument");
    *out = w->value.reports.size();
    return CONGAP_OK;
}

congap_status congap_witness_list_report(const congap_witness_list* w, size_t index,
                                         congap_witness_report* out) {
    if (!w || !out) return fail_argument("null argument");
    if (index >= w->value.reports.size()) return fail_argument("index out of range");
    *out = to_c_report(w->value.reports[index]);
    return CONGAP_OK;
}

congap_status congap_witness_list_notes_size(const congap_witness_list* w, size_t* out) {
    if (!w || !out) return fail_argument("null argument");
    *out = w->value.notes.size();
    return CONGAP_OK;
}

congap_status congap_witness_list_note(const congap_witness_list* w, size_t index, char** out) {
    if (!w || !out) return fail_argument("null argument");
    if (index >= w->value.notes.size()) return fail_argument("index out of range");
    return wrap([&] { *out = dup_string(w->value.notes[index]); });
}

congap_status congap_witness_list_json(const congap_witness_list* w, char** out_json) {
    if (!w || !out_json) return fail_argument("null argument");
    return wrap([&] { *out_json = dup_string(congap::witness_result_json(w->value).dump()); });
}

congap_status congap_quadratic_witness(const congap_poly* h, congap_witness_report* out) {
    if (!h || !out) return fail_argument("null argument");
    return wrap([&] { *out = to_c_report(congap::quadratic_witness(h->value)); });
}

congap_status congap_quadratic_witness_json(const congap_poly* h, char** out_json) {
    if (!h || !out_json) return fail_argument("null argument");
    return wrap([&] {
        *out_json =
            dup_string(congap::witness_report_json(congap::quadratic_witness(h->value)).dump());
    });
}

congap_status congap_certify(const congap_poly* g, uint64_t n, uint64_t prime_bound,
                             int assume_irreducible, congap_certify_outcome** out) {
    if (!g || !out) return fail_argument("null argument");
    return wrap([&] {
        *out = new congap_certify_outcome{
            congap::certify_cyclotomic(g->value, n, prime_bound, assume_irreducible != 0)};
    });
}

void congap_certify_outcome_free(congap_certify_outcome* o) { delete o; }

congap_status congap_certify_outcome_complete(const congap_certify_outcome* o, int* out) {
    if (!o || !out) return fail_argument("null argument");
    *out = o->value.certificate.has_value() ? 1 : 0;
    return CONGAP_OK;
}

congap_status congap_certify_outcome_json(const congap_certify_outcome* o, char** out_json) {
    if (!o || !out_json) return fail_argument("null argument");
    return wrap([&] { *out_json = dup_string(congap::certify_outcome_json(o->value).dump()); });
}

congap_status congap_certify_outcome_certificate_json(const congap_certify_outcome* o,
                                                      char** out_json) {
    if (!o || !out_json) return fail_argument("null argument");
    if (!o->value.certificate)
        return wrap([] {
            throw congap::error(congap::errc::domain, "outcome is inconclusive: no certificate");
        });
    return wrap([&] {
        *out_json = dup_string(congap::certificate_json(*o->value.certificate).dump());
    });
}

congap_status congap_certificate_parse_json(const char* json_text, congap_certificate** out) {
    if (!json_text || !out) return fail_argument("null argument");
    return wrap([&] {
        congap::ordered_json j =
            congap::ordered_json::parse(json_text, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded())
            throw congap::error(congap::errc::parse, "certificate is not valid JSON");
        *out = new congap_certificate{congap::certificate_from_json(j)};
    });
}

void congap_certificate_free(congap_certificate* c) { delete c; }

congap_status congap_certificate_json(const congap_certificate* c, char** out_json) {
    if (!c || !out_json) return fail_argument("null argument");
    return wrap([&] { *out_json = dup_string(congap::certificate_json(c->value).dump()); });
}

congap_status congap_certificate_verify(const congap_certificate* c, int* valid,
                                        char** report_json) {
    if (!c || !valid || !report_json) return fail_argument("null argument");
    return wrap([&] {
        std::vector<congap::CheckResult> checks = congap::verify_certificate(c->value);
        *valid = congap::certificate_valid(checks) ? 1 : 0;
        *report_json = dup_string(congap::verify_report_json(checks).dump());
    });
}

}  // extern "C"
