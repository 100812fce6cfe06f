#include "core/modpoly.hpp"

#include <utility>

#include "core/error.hpp"
#include "core/primes.hpp"

namespace congap {

namespace {

void normalize(ModPoly& f) {
    while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

void check_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (a.modulus != b.modulus) throw error(errc::argument, "modulus mismatch");
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // a, b < p < 2^63, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

// x reduced mod m (degree drop only matters for linear m).
ModPoly x_mod(const ModPoly& m) {
    ModPoly x{m.modulus, {0, 1 % m.modulus}};
    normalize(x);
    return mod_rem(x, m);
}

}  // namespace

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
    if (p >= (1ull << 63)) throw error(errc::argument, "modulus must be below 2^63");
    if (!is_prime(p)) throw error(errc::argument, "modulus must be prime");
    ModPoly out{p, {}};
    out.coeffs.reserve(f.coeffs().size());
    for (const mpz_class& c : f.coeffs()) out.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    normalize(out);
    return out;
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    ModPoly out{a.modulus, a.coeffs};
    if (out.coeffs.size() < b.coeffs.size()) out.coeffs.resize(b.coeffs.size(), 0);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        out.coeffs[i] = addmod(out.coeffs[i], b.coeffs[i], a.modulus);
    normalize(out);
    return out;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    ModPoly out{a.modulus, a.coeffs};
    if (out.coeffs.size() < b.coeffs.size()) out.coeffs.resize(b.coeffs.size(), 0);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        out.coeffs[i] = submod(out.coeffs[i], b.coeffs[i], a.modulus);
    normalize(out);
    return out;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly{a.modulus, {}};
    ModPoly out{a.modulus, std::vector<std::uint64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        __uint128_t acc = 0;
        std::size_t lo = k >= b.coeffs.size() ? k - b.coeffs.size() + 1 : 0;
        std::size_t hi = std::min(k, a.coeffs.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) {
            acc += static_cast<__uint128_t>(a.coeffs[i]) * b.coeffs[k - i];
            acc %= a.modulus;
        }
        out.coeffs[k] = static_cast<std::uint64_t>(acc);
    }
    normalize(out);
    return out;
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    if (b.is_zero()) throw error(errc::domain, "division by the zero polynomial");
    const std::uint64_t p = a.modulus;
    ModPoly r = a;
    std::uint64_t inv = powmod(b.coeffs.back(), p - 2, p);
    while (r.degree() >= b.degree()) {
        std::uint64_t factor = mulmod(r.coeffs.back(), inv, p);
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            r.coeffs[i + shift] = submod(r.coeffs[i + shift], mulmod(factor, b.coeffs[i], p), p);
        normalize(r);
    }
    return r;
}

ModPoly gcd_mod(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    ModPoly u = a, v = b;
    while (!v.is_zero()) {
        ModPoly r = mod_rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (!u.is_zero() && u.coeffs.back() != 1) {
        std::uint64_t inv = powmod(u.coeffs.back(), u.modulus - 2, u.modulus);
        for (auto& c : u.coeffs) c = mulmod(c, inv, u.modulus);
    }
    return u;
}

ModPoly mod_pow(const ModPoly& base, std::uint64_t exp, const ModPoly& m) {
    check_same_modulus(base, m);
    if (m.degree() < 1) throw error(errc::domain, "power modulus must be nonconstant");
    ModPoly result{m.modulus, {1 % m.modulus}};
    normalize(result);
    ModPoly b = mod_rem(base, m);
    while (exp) {
        if (exp & 1) result = mod_rem(mod_mul(result, b), m);
        exp >>= 1;
        if (exp) b = mod_rem(mod_mul(b, b), m);
    }
    return result;
}

ModPoly powmod_frobenius(const ModPoly& h) {
    if (h.degree() < 1 || h.coeffs.back() != 1)
        throw error(errc::domain, "Frobenius modulus must be monic of degree >= 1");
    return mod_pow(x_mod(h), h.modulus, h);
}

bool splits_completely(const IntPoly& h, std::uint64_t p) {
    if (!h.is_monic() || h.degree() < 1)
        throw error(errc::domain, "splitting test requires a monic polynomial of degree >= 1");
    ModPoly hp = reduce_mod(h, p);
    // h | x^p - x  iff  x^p = x in F_p[x]/(h).
    return powmod_frobenius(hp) == x_mod(hp);
}

int count_distinct_roots_mod(const IntPoly& g, std::uint64_t p) {
    if (!g.is_monic() || g.degree() < 1)
        throw error(errc::domain, "root count requires a monic polynomial of degree >= 1");
    ModPoly gp = reduce_mod(g, p);  // full degree: g is monic
    ModPoly x = x_mod(gp);
    ModPoly t = mod_sub(mod_pow(x, p, gp), x);
    return gcd_mod(t, gp).degree();  // gcd(x^p - x, g) collects the distinct roots
}

bool has_root_mod(const IntPoly& g, std::uint64_t p) { return count_distinct_roots_mod(g, p) >= 1; }

}  // namespace congap
