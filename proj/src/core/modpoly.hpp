#ifndef CONGAP_CORE_MODPOLY_HPP
#define CONGAP_CORE_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "core/intpoly.hpp"

namespace congap {

// Polynomial over F_p, p an odd-or-even prime < 2^63. Coefficients ascending,
// normalized: entries in [0, p), top entry nonzero, zero poly is empty.
struct ModPoly {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

// f mod p. Validates p prime and p < 2^63 (errc::argument).
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);

// Remainder of a by b, b nonzero. Inverts lc(b) via Fermat.
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);

// Monic gcd; gcd(0, 0) = 0.
ModPoly gcd_mod(const ModPoly& a, const ModPoly& b);

// base^exp mod m, square-and-multiply over F_p[x]. m nonconstant.
ModPoly mod_pow(const ModPoly& base, std::uint64_t exp, const ModPoly& m);

// x^p mod h(x), the Frobenius image of x. h monic of degree >= 1.
ModPoly powmod_frobenius(const ModPoly& h);

// h splits into distinct linear factors mod p, i.e. h | x^p - x.
// h monic with deg h >= 1; requires p prime.
bool splits_completely(const IntPoly& h, std::uint64_t p);

// deg gcd(x^p - x, g mod p): the number of distinct roots of g in F_p.
// g monic with deg g >= 1; requires p prime.
int count_distinct_roots_mod(const IntPoly& g, std::uint64_t p);

bool has_root_mod(const IntPoly& g, std::uint64_t p);

}  // namespace congap

#endif
