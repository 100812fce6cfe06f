#ifndef CONGAP_CORE_REPORT_JSON_HPP
#define CONGAP_CORE_REPORT_JSON_HPP

#include <cstdint>

#include <json.hpp>

#include "core/certifier.hpp"
#include "core/witness.hpp"

namespace congap {

using ordered_json = nlohmann::ordered_json;

// Field names and order are part of the output contract; do not reorder.

// {"n","bound","subgroup_order","phi","index","uncovered_class","status","shared_factor"}
ordered_json witness_report_json(const WitnessReport& report);

// {"reports":[...],"suppressed":[...],"notes":[...]}
ordered_json witness_result_json(const WitnessSearchResult& result);

// {"poly","bound","count","primes"} plus {"modulus","histogram","noncoprime"}
// when modulus >= 1; histogram rows are {"class","count"} over coprime
// classes ascending, zero counts included.
ordered_json split_set_json(const SplitPrimeSet& set, std::uint64_t modulus = 0);

// {"poly","bound","split_count","prime_count","ratio"} plus
// {"expected","relative_error"} when expected_order >= 1.
ordered_json density_json(const IntPoly& h, const DensityEstimate& est,
                          std::uint64_t expected_order = 0);

// {"poly","disc","factors":[{"prime","exponent"}],"cofactor","square"}.
// disc and cofactor are decimal strings; factors cover the machine-word
// factorable part of |disc| and cofactor is "1" when that is everything.
ordered_json disc_report_json(const IntPoly& p);

// {"g","n","disc_g","assignments":[{"class","prime"}],"prime_bound"};
// disc_g is a decimal string.
ordered_json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const ordered_json& j);   // errc::parse on bad shape

// {"complete","g","n","prime_bound","assignments","missing"}; missing rows
// are {"class","primes_tried","last_prime"}.
ordered_json certify_outcome_json(const CertifyOutcome& outcome);

// {"valid","checks":[{"check","ok","detail"}]}
ordered_json verify_report_json(const std::vector<CheckResult>& checks);

}  // namespace congap

#endif
