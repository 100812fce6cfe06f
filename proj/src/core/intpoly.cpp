#include "core/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <utility>

namespace congap {

namespace {

void strip_leading_zeros(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    strip_leading_zeros(coeffs_);
}

IntPoly IntPoly::constant(mpz_class c) {
    std::vector<mpz_class> v;
    if (c != 0) v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) throw error(errc::domain, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr std::size_t kMaxDegree = 1u << 20;  // memory guard for "x^<huge>"

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        skip_ws();
        if (text_.substr(pos_).starts_with("coeffs:")) {
            pos_ += 7;
            return parse_coeff_list();
        }
        return parse_term_form();
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(pos_, what); }

    mpz_class read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    mpz_class read_int() {
        bool neg = accept('-');
        mpz_class v = read_digits();
        return neg ? mpz_class(-v) : v;
    }

    std::size_t read_exponent() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("exponent must be nonnegative");
        mpz_class e = read_digits();
        if (e > kMaxDegree) fail("exponent too large");
        return e.get_ui();
    }

    // var := 'x' ('^' uint)?   (caller has seen the 'x')
    std::size_t read_var_power() {
        ++pos_;  // consume 'x'
        if (accept('^')) return read_exponent();
        return 1;
    }

    void add_term(std::vector<mpz_class>& acc, const mpz_class& coef, std::size_t deg) {
        if (acc.size() <= deg) acc.resize(deg + 1, 0);
        acc[deg] += coef;
    }

    // term := int '*'? var | int | var   with int carrying its own sign.
    void parse_term(std::vector<mpz_class>& acc, int sign) {
        char c = peek();
        if (c == 'x') {
            add_term(acc, sign, read_var_power());
            return;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class coef = read_int();
            if (sign < 0) coef = -coef;
            skip_ws();
            if (accept('*')) {
                if (peek() != 'x') fail("expected 'x' after '*'");
                add_term(acc, coef, read_var_power());
            } else if (peek() == 'x') {
                add_term(acc, coef, read_var_power());
            } else {
                add_term(acc, coef, 0);
            }
            return;
        }
        fail("expected a term");
    }

    IntPoly parse_term_form() {
        std::vector<mpz_class> acc;
        // A single sign is allowed before the first term so canonical output
        // like "-x^3 + 2" reads back.
        int sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        parse_term(acc, sign);
        while (!eof()) {
            if (accept('+'))
                sign = 1;
            else if (accept('-'))
                sign = -1;
            else
                fail("expected '+' or '-' between terms");
            parse_term(acc, sign);
        }
        return IntPoly(std::move(acc));
    }

    // "coeffs:" int (',' int)*  -- descending degree order.
    IntPoly parse_coeff_list() {
        std::vector<mpz_class> descending;
        descending.push_back(read_int());
        while (!eof()) {
            if (!accept(',')) fail("expected ',' in coefficient list");
            descending.push_back(read_int());
        }
        std::reverse(descending.begin(), descending.end());
        return IntPoly(std::move(descending));
    }
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
    Parser p(text);
    return p.parse();
}

std::string format_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const mpz_class& c = p.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << '*';
            out << 'x';
            if (d > 1) out << '^' << d;
        }
    }
    return out.str();
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly{};
    std::vector<mpz_class> c(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i + 1) * static_cast<unsigned long>(i + 1);
    return IntPoly(std::move(c));
}

mpz_class eval_at(const IntPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(static_cast<std::size_t>(i));
    return acc;
}

// ---------------------------------------------------------------------------
// Subresultant resultant (Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 3.3.7). Works on bare coefficient vectors.

namespace {

using Coeffs = std::vector<mpz_class>;

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

mpz_class content(const Coeffs& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void divexact_scalar(Coeffs& a, const mpz_class& d) {
    assert(d != 0);
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// r <- lc(b)^(deg a - deg b + 1) * a  mod b, by repeated leading-term
// cancellation; only the remainder is needed.
Coeffs pseudo_remainder(Coeffs r, const Coeffs& b) {
    const mpz_class& d = b.back();
    int e = deg(r) - deg(b) + 1;
    while (deg(r) >= deg(b)) {
        mpz_class top = r.back();
        std::size_t shift = static_cast<std::size_t>(deg(r) - deg(b));
        for (auto& c : r) c *= d;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= top * b[i];
        strip_leading_zeros(r);
        --e;
        if (r.empty()) break;
    }
    if (e > 0 && !r.empty()) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= scale;
    }
    return r;
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw error(errc::domain, "resultant of the zero polynomial");

    Coeffs a = p.coeffs();
    Coeffs b = q.coeffs();
    if (deg(a) == 0) return pow_mpz(a[0], static_cast<unsigned long>(deg(b)));
    if (deg(b) == 0) return pow_mpz(b[0], static_cast<unsigned long>(deg(a)));

    int sign = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
    }

    mpz_class ca = content(a), cb = content(b);
    divexact_scalar(a, ca);
    divexact_scalar(b, cb);
    mpz_class t = pow_mpz(ca, static_cast<unsigned long>(deg(b))) *
                  pow_mpz(cb, static_cast<unsigned long>(deg(a)));

    mpz_class g = 1, h = 1;
    while (deg(b) > 0) {
        int d = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
        Coeffs r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) return 0;  // common factor
        divexact_scalar(r, g * pow_mpz(h, static_cast<unsigned long>(d)));
        b = std::move(r);
        g = a.back();
        if (d > 0) {
            // h <- g^d / h^(d-1), exact by the subresultant theory.
            mpz_class num = pow_mpz(g, static_cast<unsigned long>(d));
            mpz_class den = pow_mpz(h, static_cast<unsigned long>(d - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }

    // deg b == 0: finish with h <- b0^(deg a) / h^(deg a - 1).
    mpz_class num = pow_mpz(b[0], static_cast<unsigned long>(deg(a)));
    mpz_class den = pow_mpz(h, static_cast<unsigned long>(deg(a) - 1));
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * t * res;
}

mpz_class discriminant(const IntPoly& p) {
    if (!p.is_monic()) throw error(errc::domain, "discriminant requires a monic polynomial");
    int d = p.degree();
    if (d < 1) throw error(errc::domain, "discriminant requires degree >= 1");
    if (d == 1) return 1;  // Res(x + a, 1) = 1
    mpz_class r = resultant(p, derivative(p));
    return (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? r : mpz_class(-r);
}

}  // namespace congap
