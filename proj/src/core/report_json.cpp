#include "core/report_json.hpp"

#include <numeric>

#include "core/error.hpp"
#include "core/primes.hpp"

namespace congap {

namespace {

const char* status_name(WitnessStatus s) {
    return s == WitnessStatus::proved_quadratic ? "proved_quadratic" : "candidate";
}

struct FactorReport {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    mpz_class cofactor = 1;
};

FactorReport factor_abs(mpz_class m) {
    FactorReport report;
    if (m <= 1) return report;
    for (std::uint64_t p : primes_up_to(100000)) {
        if (m == 1) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) report.factors.emplace_back(p, e);
    }
    if (m > 1) {
        if (m.fits_ulong_p()) {
            for (auto [p, e] : factorize64(m.get_ui())) report.factors.emplace_back(p, e);
        } else {
            report.cofactor = m;  // beyond the machine-word factorizer
        }
    }
    return report;
}

std::uint64_t require_u64(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw error(errc::parse, std::string("certificate field '") + key +
                                     "' missing or not an unsigned integer");
    return j[key].get<std::uint64_t>();
}

}  // namespace

ordered_json witness_report_json(const WitnessReport& report) {
    return ordered_json{{"n", report.n},
                        {"bound", report.bound},
                        {"subgroup_order", report.subgroup.generated_order},
                        {"phi", report.subgroup.phi},
                        {"index", report.subgroup.index},
                        {"uncovered_class", report.uncovered_class},
                        {"status", status_name(report.status)},
                        {"shared_factor", report.shared_factor}};
}

ordered_json witness_result_json(const WitnessSearchResult& result) {
    ordered_json reports = ordered_json::array();
    for (const WitnessReport& r : result.reports) reports.push_back(witness_report_json(r));
    return ordered_json{
        {"reports", std::move(reports)}, {"suppressed", result.suppressed}, {"notes", result.notes}};
}

ordered_json split_set_json(const SplitPrimeSet& set, std::uint64_t modulus) {
    ordered_json j{{"poly", format_poly(set.h)},
                   {"bound", set.bound},
                   {"count", set.primes.size()},
                   {"primes", set.primes}};
    if (modulus >= 1) {
        std::vector<std::uint64_t> classes;
        for (std::uint64_t c = 0; c < modulus; ++c)
            if (std::gcd(c, modulus) == 1) classes.push_back(c);
        std::uint64_t noncoprime = 0;
        std::vector<std::uint64_t> counts(modulus, 0);
        for (std::uint64_t p : set.primes) {
            std::uint64_t r = p % modulus;
            if (std::gcd(r, modulus) == 1)
                ++counts[r];
            else
                ++noncoprime;
        }
        ordered_json histogram = ordered_json::array();
        for (std::uint64_t c : classes)
            histogram.push_back(ordered_json{{"class", c}, {"count", counts[c]}});
        j["modulus"] = modulus;
        j["histogram"] = std::move(histogram);
        j["noncoprime"] = noncoprime;
    }
    return j;
}

ordered_json density_json(const IntPoly& h, const DensityEstimate& est,
                          std::uint64_t expected_order) {
    ordered_json j{{"poly", format_poly(h)},
                   {"bound", est.bound},
                   {"split_count", est.split_count},
                   {"prime_count", est.prime_count},
                   {"ratio", est.ratio}};
    if (expected_order >= 1) {
        double expected = 1.0 / static_cast<double>(expected_order);
        j["expected"] = expected;
        j["relative_error"] = (est.ratio - expected) / expected;
    }
    return j;
}

ordered_json disc_report_json(const IntPoly& p) {
    mpz_class disc = discriminant(p);
    FactorReport factored = factor_abs(abs(disc));
    ordered_json factors = ordered_json::array();
    for (auto [q, e] : factored.factors)
        factors.push_back(ordered_json{{"prime", q}, {"exponent", e}});
    return ordered_json{{"poly", format_poly(p)},
                        {"disc", disc.get_str()},
                        {"factors", std::move(factors)},
                        {"cofactor", factored.cofactor.get_str()},
                        {"square", mpz_perfect_square_p(disc.get_mpz_t()) != 0}};
}

ordered_json certificate_json(const Certificate& cert) {
    ordered_json assignments = ordered_json::array();
    for (const Assignment& a : cert.assignments)
        assignments.push_back(ordered_json{{"class", a.cls}, {"prime", a.prime}});
    return ordered_json{{"g", format_poly(cert.g)},
                        {"n", cert.n},
                        {"disc_g", cert.disc_g.get_str()},
                        {"assignments", std::move(assignments)},
                        {"prime_bound", cert.prime_bound}};
}

Certificate certificate_from_json(const ordered_json& j) {
    if (!j.is_object()) throw error(errc::parse, "certificate must be a JSON object");
    Certificate cert;
    if (!j.contains("g") || !j["g"].is_string())
        throw error(errc::parse, "certificate field 'g' missing or not a string");
    cert.g = parse_poly(j["g"].get<std::string>());
    cert.n = require_u64(j, "n");
    if (!j.contains("disc_g"))
        throw error(errc::parse, "certificate field 'disc_g' missing");
    if (j["disc_g"].is_string()) {
        try {
            cert.disc_g = mpz_class(j["disc_g"].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw error(errc::parse, "certificate field 'disc_g' is not a decimal integer");
        }
    } else if (j["disc_g"].is_number_integer()) {
        cert.disc_g = mpz_class(j["disc_g"].get<long>());
    } else {
        throw error(errc::parse, "certificate field 'disc_g' must be a decimal string");
    }
    if (!j.contains("assignments") || !j["assignments"].is_array())
        throw error(errc::parse, "certificate field 'assignments' missing or not an array");
    for (const auto& entry : j["assignments"]) {
        if (!entry.is_object()) throw error(errc::parse, "assignment entries must be objects");
        cert.assignments.push_back({require_u64(entry, "class"), require_u64(entry, "prime")});
    }
    cert.prime_bound = require_u64(j, "prime_bound");
    return cert;
}

ordered_json certify_outcome_json(const CertifyOutcome& outcome) {
    ordered_json assignments = ordered_json::array();
    for (const Assignment& a : outcome.partial)
        assignments.push_back(ordered_json{{"class", a.cls}, {"prime", a.prime}});
    ordered_json missing = ordered_json::array();
    for (const ClassScan& scan : outcome.missing)
        missing.push_back(ordered_json{{"class", scan.cls},
                                       {"primes_tried", scan.primes_tried},
                                       {"last_prime", scan.last_prime}});
    return ordered_json{{"complete", outcome.certificate.has_value()},
                        {"g", format_poly(outcome.g)},
                        {"n", outcome.n},
                        {"prime_bound", outcome.prime_bound},
                        {"assignments", std::move(assignments)},
                        {"missing", std::move(missing)}};
}

ordered_json verify_report_json(const std::vector<CheckResult>& checks) {
    ordered_json rows = ordered_json::array();
    for (const CheckResult& c : checks)
        rows.push_back(ordered_json{{"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
    return ordered_json{{"valid", certificate_valid(checks)}, {"checks", std::move(rows)}};
}

}  // namespace congap
