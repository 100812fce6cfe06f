#ifndef CONGAP_CORE_CERTIFIER_HPP
#define CONGAP_CORE_CERTIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/intpoly.hpp"

namespace congap {

enum class Irreducibility { definitely_irreducible, definitely_reducible, unknown };

// Cheap one-sided tests: an integer root among divisors of the constant term
// or a vanishing discriminant proves reducibility; irreducibility mod some
// prime p < 100 with p not dividing disc(g) proves irreducibility over Q.
// Everything else is unknown (x^4 + 1 is the classic case).
Irreducibility check_irreducible_heuristic(const IntPoly& g);

// Rabin's test: g is irreducible mod p iff x^(p^d) = x mod (g, p) and
// gcd(x^(p^(d/q)) - x, g) is constant for every prime q | d. g monic,
// deg g >= 1, p prime.
bool irreducible_mod(const IntPoly& g, std::uint64_t p);

struct Assignment {
    std::uint64_t cls;    // canonical generator class of (Z/nZ)^x
    std::uint64_t prime;  // prime = cls (mod n), coprime to n*disc(g), g has a root mod prime
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Proof object: one semi-split prime per canonical generator class shows the
// n-th cyclotomic polynomial is irreducible over Q[x]/(g).
struct Certificate {
    IntPoly g;
    std::uint64_t n = 0;
    mpz_class disc_g;
    std::vector<Assignment> assignments;
    std::uint64_t prime_bound = 0;
};

// Scan statistics for a class that exhausted the prime bound.
struct ClassScan {
    std::uint64_t cls = 0;
    std::uint64_t primes_tried = 0;
    std::uint64_t last_prime = 0;  // 0 when the class held no prime at all
};

// Inconclusive unless `certificate` is set: the proposition is sufficient,
// not necessary.
struct CertifyOutcome {
    IntPoly g;
    std::uint64_t n = 0;
    std::uint64_t prime_bound = 0;
    std::optional<Certificate> certificate;
    std::vector<Assignment> partial;  // assignments found; equals the certificate's on success
    std::vector<ClassScan> missing;
};

// For each canonical generator class a of (Z/nZ)^x, searches primes
// p = a (mod n), p <= prime_bound, skipping p | n*disc(g), and takes the
// first with a root of g mod p. g must be monic with deg g >= 1 and n >= 3.
// Unless assume_irreducible is set, g must pass the irreducibility heuristic
// (errc::reducible / errc::unknown_irreducible otherwise).
CertifyOutcome certify_cyclotomic(const IntPoly& g, std::uint64_t n, std::uint64_t prime_bound,
                                  bool assume_irreducible = false);

// All primes p <= bound with p not dividing disc(g) and g having a root mod
// p: the semi-split primes of Q[x]/(g), up to finitely many exceptions at
// the discriminant. g monic, deg g >= 1, disc(g) != 0.
std::vector<std::uint64_t> semi_split_primes(const IntPoly& g, std::uint64_t bound);

struct CheckResult {
    std::string check;
    bool ok = false;
    std::string detail;
};

// Independent re-validation of a certificate; never consults the search
// path. Passes iff every returned entry has ok set.
std::vector<CheckResult> verify_certificate(const Certificate& cert);

bool certificate_valid(const std::vector<CheckResult>& checks);

}  // namespace congap

#endif
