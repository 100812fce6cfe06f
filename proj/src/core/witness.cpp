#include "core/witness.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "core/error.hpp"
#include "core/modpoly.hpp"
#include "core/primes.hpp"

namespace congap {

namespace {

mpz_class checked_discriminant(const IntPoly& h) {
    if (!h.is_monic() || h.degree() < 1)
        throw error(errc::domain, "expected a monic polynomial of degree >= 1");
    mpz_class disc = discriminant(h);
    if (disc == 0)
        throw error(errc::domain, "discriminant is zero (repeated root): the split set is empty");
    return disc;
}

bool fits_int64(const mpz_class& v) { return v.fits_slong_p(); }

// |d| of the fundamental discriminant, when disc is not a square and fits a
// machine word; 0 otherwise (note_out explains).
std::uint64_t fundamental_modulus(const mpz_class& disc, std::int64_t* d_out,
                                  std::string* note_out) {
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        if (note_out)
            *note_out = "discriminant is a perfect square: no quadratic subfield to prove with";
        return 0;
    }
    if (!fits_int64(disc)) {
        if (note_out) *note_out = "discriminant exceeds the machine-word range for the quadratic shortcut";
        return 0;
    }
    std::int64_t d = fundamental_discriminant(disc.get_si());
    if (d_out) *d_out = d;
    return d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
}

std::uint64_t least_nonresidue_class(std::int64_t d, std::uint64_t n) {
    for (std::uint64_t c = 2; c < n; ++c)
        if (std::gcd(c, n) == 1 && kronecker(d, static_cast<std::int64_t>(c)) == -1) return c;
    throw error(errc::domain, "no class with character -1 (character not primitive?)");
}

std::uint64_t shared_factor_with(const mpz_class& disc, std::uint64_t n) {
    return mpz_gcd_ui(nullptr, disc.get_mpz_t(), n);
}

}  // namespace

SplitPrimeSet split_primes(const IntPoly& h, std::uint64_t bound, unsigned workers) {
    checked_discriminant(h);
    if (bound < 2) throw error(errc::argument, "bound must be at least 2");

    SplitPrimeSet out;
    out.h = h;
    out.bound = bound;
    std::vector<std::uint64_t> primes = primes_up_to(bound);

    // Fixed-size blocks claimed off an atomic counter; merging in block order
    // keeps the result independent of scheduling and worker count.
    constexpr std::size_t kBlock = 4096;
    std::size_t blocks = (primes.size() + kBlock - 1) / kBlock;
    std::vector<std::vector<std::uint64_t>> accepted(blocks);
    std::atomic<std::size_t> next_block{0};

    auto run = [&]() {
        for (;;) {
            std::size_t b = next_block.fetch_add(1);
            if (b >= blocks) return;
            std::size_t lo = b * kBlock, hi = std::min(primes.size(), lo + kBlock);
            auto& slot = accepted[b];
            for (std::size_t i = lo; i < hi; ++i)
                if (splits_completely(h, primes[i])) slot.push_back(primes[i]);
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    for (const auto& slot : accepted) out.primes.insert(out.primes.end(), slot.begin(), slot.end());
    return out;
}

DensityEstimate density_estimate(const IntPoly& h, std::uint64_t bound, unsigned workers) {
    SplitPrimeSet set = split_primes(h, bound, workers);
    DensityEstimate est;
    est.bound = bound;
    est.split_count = set.primes.size();
    est.prime_count = primes_up_to(bound).size();
    est.ratio = static_cast<double>(est.split_count) / static_cast<double>(est.prime_count);
    return est;
}

std::vector<std::uint64_t> candidate_moduli(const mpz_class& disc, std::uint64_t n_max,
                                            SearchMode mode) {
    if (disc == 0) throw error(errc::domain, "discriminant is zero");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        bool keep = mode == SearchMode::divisors
                        ? mpz_divisible_ui_p(disc.get_mpz_t(), n) != 0
                        : mpz_gcd_ui(nullptr, disc.get_mpz_t(), n) > 1;
        if (keep) out.push_back(n);
    }
    if (mode == SearchMode::divisors) {
        // The quadratic conductor belongs in the list even when it is not a
        // divisor of disc or lies beyond n_max: it is the one modulus with an
        // unconditional proof attached.
        std::uint64_t nfd = fundamental_modulus(disc, nullptr, nullptr);
        if (nfd >= 3 && std::find(out.begin(), out.end(), nfd) == out.end()) out.push_back(nfd);
        std::sort(out.begin(), out.end());
    }
    return out;
}

WitnessSearchResult witness_search(const IntPoly& h, std::uint64_t bound, std::uint64_t n_max,
                                   SearchMode mode, std::uint64_t min_sample, unsigned workers) {
    mpz_class disc = checked_discriminant(h);
    SplitPrimeSet set = split_primes(h, bound, workers);

    WitnessSearchResult result;
    std::string fd_note;
    std::int64_t d = 0;
    std::uint64_t nfd = fundamental_modulus(disc, &d, &fd_note);
    if (!fd_note.empty()) result.notes.push_back(fd_note);

    std::vector<std::uint64_t> candidates = candidate_moduli(disc, n_max, mode);
    if (candidates.empty()) {
        result.notes.push_back("no admissible moduli share a factor with the discriminant");
        return result;
    }

    for (std::uint64_t n : candidates) {
        std::vector<std::uint64_t> residues;
        std::uint64_t sample = 0;
        for (std::uint64_t p : set.primes) {
            std::uint64_t r = p % n;
            if (std::gcd(r, n) != 1) continue;
            ++sample;
            residues.push_back(r);
        }
        SubgroupReport closure;
        try {
            closure = subgroup_closure(n, residues);
        } catch (const error& e) {
            if (e.code() == errc::too_large) {
                result.notes.push_back("modulus " + std::to_string(n) +
                                       " exceeds the closure cap; use the quadratic witness");
                continue;
            }
            throw;
        }
        if (closure.index < 2) continue;

        WitnessReport report;
        report.n = n;
        report.bound = bound;
        report.subgroup = closure;
        report.uncovered_class = *closure.uncovered_class;
        report.status = WitnessStatus::candidate;
        report.shared_factor = shared_factor_with(disc, n);
        report.sample_count = sample;
        if (nfd != 0 && n == nfd) {
            // Unconditional: every p in P has kronecker(d, p) = 1, so any
            // class with character -1 stays uncovered at every bound.
            report.status = WitnessStatus::proved_quadratic;
            report.uncovered_class = least_nonresidue_class(d, n);
        } else if (sample < min_sample) {
            result.suppressed.push_back(n);
            result.notes.push_back("modulus " + std::to_string(n) + " suppressed: only " +
                                   std::to_string(sample) + " contributing primes (floor " +
                                   std::to_string(min_sample) + ")");
            continue;
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

WitnessReport quadratic_witness(const IntPoly& h) {
    mpz_class disc = checked_discriminant(h);
    if (mpz_perfect_square_p(disc.get_mpz_t()))
        throw error(errc::square_discriminant,
                    "discriminant is a perfect square: no quadratic subfield");
    if (!fits_int64(disc))
        throw error(errc::too_large, "discriminant exceeds the machine-word range");

    std::int64_t d = fundamental_discriminant(disc.get_si());
    std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);

    WitnessReport report;
    report.n = n;
    report.bound = 0;
    report.status = WitnessStatus::proved_quadratic;
    report.shared_factor = shared_factor_with(disc, n);
    report.uncovered_class = least_nonresidue_class(d, n);

    // The subgroup is the kernel of the character: it contains every class a
    // split prime can land in, at any bound.
    SubgroupReport& sub = report.subgroup;
    sub.n = n;
    sub.phi = euler_phi(n);
    sub.generated_order = sub.phi / 2;
    sub.index = 2;
    sub.uncovered_class = report.uncovered_class;
    if (n <= kDefaultModulusCap) {
        sub.membership.assign(n, false);
        for (std::uint64_t r = 1; r < n; ++r)
            if (std::gcd(r, n) == 1 && kronecker(d, static_cast<std::int64_t>(r)) == 1)
                sub.membership[r] = true;
    }
    return report;
}

}  // namespace congap
