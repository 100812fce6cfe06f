#ifndef CONGAP_CORE_WITNESS_HPP
#define CONGAP_CORE_WITNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/intpoly.hpp"
#include "core/unitgroup.hpp"

namespace congap {

// The truncated set P: primes p <= bound where h splits into distinct linear
// factors mod p. No member divides disc(h).
struct SplitPrimeSet {
    IntPoly h;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> primes;
};

// Exact truncation of P at bound. h monic, deg h >= 1, disc(h) != 0,
// bound >= 2. The per-prime filter runs on `workers` threads; the result is
// identical for every worker count.
SplitPrimeSet split_primes(const IntPoly& h, std::uint64_t bound, unsigned workers = 1);

struct DensityEstimate {
    std::uint64_t bound = 0;
    std::uint64_t split_count = 0;
    std::uint64_t prime_count = 0;
    double ratio = 0;  // split_count / prime_count; Chebotarev predicts 1/[K:Q]
};

DensityEstimate density_estimate(const IntPoly& h, std::uint64_t bound, unsigned workers = 1);

enum class SearchMode { divisors, full_scan };

// Moduli worth testing, ascending. divisors: divisors n of |disc| with
// 3 <= n <= n_max, plus |fundamental_discriminant(disc)| when disc is not a
// square and fits a machine word. full_scan: all 3 <= n <= n_max with
// gcd(n, disc) > 1. disc must be nonzero.
std::vector<std::uint64_t> candidate_moduli(const mpz_class& disc, std::uint64_t n_max,
                                            SearchMode mode);

enum class WitnessStatus { candidate, proved_quadratic };

struct WitnessReport {
    std::uint64_t n = 0;
    std::uint64_t bound = 0;  // 0 for bound-free (quadratic) reports
    SubgroupReport subgroup;
    std::uint64_t uncovered_class = 0;
    WitnessStatus status = WitnessStatus::candidate;
    std::uint64_t shared_factor = 0;  // gcd(n, disc h) > 1
    std::uint64_t sample_count = 0;   // split primes coprime to n that fed S
};

struct WitnessSearchResult {
    std::vector<WitnessReport> reports;      // ordered by n
    std::vector<std::uint64_t> suppressed;   // proper but under the sample floor
    std::vector<std::string> notes;
};

// For each candidate modulus n, closes S = {p mod n : p in P, gcd(p, n) = 1}
// and reports every n where the closure is proper. A report at
// n = |fundamental_discriminant(disc h)| is upgraded to proved_quadratic with
// the least class c where kronecker(d, c) = -1; all other reports are
// finite-bound evidence only. Candidates with fewer than min_sample
// contributing primes are suppressed (listed, not reported).
WitnessSearchResult witness_search(const IntPoly& h, std::uint64_t bound, std::uint64_t n_max,
                                   SearchMode mode, std::uint64_t min_sample = 10,
                                   unsigned workers = 1);

// The unconditional witness from the quadratic subfield Q(sqrt(disc h)):
// n = |d| for d = fundamental_discriminant(disc h). Every p in P satisfies
// kronecker(d, p) = 1, so the kernel of the character bounds every closure
// and any class with kronecker(d, c) = -1 contains no member of P at all.
// Errors when disc(h) is zero or a perfect square (no quadratic subfield).
WitnessReport quadratic_witness(const IntPoly& h);

}  // namespace congap

#endif
