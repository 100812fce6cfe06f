#ifndef CONGAP_CORE_INTPOLY_HPP
#define CONGAP_CORE_INTPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace congap {

// Univariate polynomial over Z with arbitrary-precision coefficients.
// Invariant: coeffs are stored in ascending degree and the top entry is
// nonzero; the zero polynomial is the empty vector, degree() == -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    static IntPoly constant(mpz_class c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of x^i; zero beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly&) const;
    IntPoly operator-(const IntPoly&) const;
    IntPoly operator*(const IntPoly&) const;

  private:
    std::vector<mpz_class> coeffs_;
};

// Text grammar (whitespace allowed between tokens):
//   poly := ['+'|'-'] term (('+'|'-') term)* | "coeffs:" int (',' int)*
//   term := int '*'? var | int | var
//   var  := 'x' ('^' uint)?
//   int  := ['-'] digit+
// The "coeffs:" form lists coefficients in descending degree order.
// Like terms are combined. Throws parse_error with the byte offset on
// malformed input.
IntPoly parse_poly(std::string_view text);

// Canonical descending-degree rendering; parse_poly(format_poly(p)) == p.
std::string format_poly(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

// Horner evaluation, exact.
mpz_class eval_at(const IntPoly& p, const mpz_class& x);

// Res(p, q) via the subresultant polynomial remainder sequence (integer
// arithmetic throughout, no rational coefficients). Equals the Sylvester
// determinant. Throws errc::domain if either input is zero.
mpz_class resultant(const IntPoly& p, const IntPoly& q);

// disc(p) = (-1)^(d(d-1)/2) * Res(p, p') for monic p of degree d >= 1.
// Zero exactly when p has a repeated root.
mpz_class discriminant(const IntPoly& p);

}  // namespace congap

#endif
