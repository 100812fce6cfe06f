#include "core/certifier.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/modpoly.hpp"
#include "core/primes.hpp"
#include "core/unitgroup.hpp"

namespace congap {

namespace {

void check_monic_nonconstant(const IntPoly& g) {
    if (!g.is_monic() || g.degree() < 1)
        throw error(errc::domain, "expected a monic polynomial of degree >= 1");
}

std::vector<std::uint64_t> divisors_of(std::uint64_t v) {
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : factorize64(v)) {
        std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

bool has_integer_root(const IntPoly& g) {
    const mpz_class& c0 = g.coeff(0);
    if (c0 == 0) return true;  // x divides
    mpz_class mag = abs(c0);
    if (!mag.fits_ulong_p()) return false;  // constant term too large to factor; inconclusive
    for (std::uint64_t v : mag == 1 ? std::vector<std::uint64_t>{1} : divisors_of(mag.get_ui())) {
        if (eval_at(g, mpz_class(v)) == 0) return true;
        if (eval_at(g, -mpz_class(v)) == 0) return true;
    }
    return false;
}

}  // namespace

bool irreducible_mod(const IntPoly& g, std::uint64_t p) {
    check_monic_nonconstant(g);
    ModPoly gp = reduce_mod(g, p);
    int d = gp.degree();
    if (d == 1) return true;
    std::vector<int> checkpoints;
    for (auto [q, e] : factorize64(static_cast<std::uint64_t>(d)))
        checkpoints.push_back(d / static_cast<int>(q));
    ModPoly x{p, {0, 1 % p}};
    x = mod_rem(x, gp);
    ModPoly t = x;
    for (int i = 1; i <= d; ++i) {
        t = mod_pow(t, p, gp);  // t = x^(p^i)
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (gcd_mod(mod_sub(t, x), gp).degree() > 0) return false;
        }
    }
    return t == x;
}

Irreducibility check_irreducible_heuristic(const IntPoly& g) {
    check_monic_nonconstant(g);
    if (g.degree() == 1) return Irreducibility::definitely_irreducible;
    if (has_integer_root(g)) return Irreducibility::definitely_reducible;
    mpz_class disc = discriminant(g);
    if (disc == 0) return Irreducibility::definitely_reducible;  // repeated factor
    for (std::uint64_t p : primes_up_to(99)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        if (irreducible_mod(g, p)) return Irreducibility::definitely_irreducible;
    }
    return Irreducibility::unknown;
}

CertifyOutcome certify_cyclotomic(const IntPoly& g, std::uint64_t n, std::uint64_t prime_bound,
                                  bool assume_irreducible) {
    check_monic_nonconstant(g);
    if (n < 3) throw error(errc::argument, "modulus must be at least 3");
    if (prime_bound < 2) throw error(errc::argument, "prime bound must be at least 2");

    Irreducibility irr = check_irreducible_heuristic(g);
    if (irr == Irreducibility::definitely_reducible)
        throw error(errc::reducible, "g is reducible over the rationals");
    if (irr == Irreducibility::unknown && !assume_irreducible)
        throw error(errc::unknown_irreducible,
                    "irreducibility of g is undecided; pass assume-irreducible to proceed");

    mpz_class disc = discriminant(g);
    mpz_class ndisc = abs(disc * static_cast<unsigned long>(n));
    UnitGroup group = unit_group(n);

    CertifyOutcome outcome;
    outcome.g = g;
    outcome.n = n;
    outcome.prime_bound = prime_bound;
    for (const Generator& gen : group.generators) {
        std::uint64_t a = gen.residue;
        std::uint64_t tried = 0, last = 0;
        std::optional<std::uint64_t> found;
        std::uint64_t start = 2;
        while (true) {
            std::optional<std::uint64_t> p = next_prime_in_class(a, n, start, prime_bound);
            if (!p) break;
            ++tried;
            last = *p;
            if (!mpz_divisible_ui_p(ndisc.get_mpz_t(), *p) && has_root_mod(g, *p)) {
                found = *p;
                break;
            }
            if (*p == prime_bound) break;
            start = *p + 1;
        }
        if (found)
            outcome.partial.push_back({a, *found});
        else
            outcome.missing.push_back({a, tried, last});
    }

    if (outcome.missing.empty()) {
        Certificate cert;
        cert.g = g;
        cert.n = n;
        cert.disc_g = disc;
        cert.assignments = outcome.partial;
        cert.prime_bound = prime_bound;
        outcome.certificate = std::move(cert);
    }
    return outcome;
}

std::vector<std::uint64_t> semi_split_primes(const IntPoly& g, std::uint64_t bound) {
    check_monic_nonconstant(g);
    if (discriminant(g) == 0) throw error(errc::domain, "discriminant is zero");
    if (bound < 2) throw error(errc::argument, "bound must be at least 2");
    mpz_class disc = abs(discriminant(g));
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes_up_to(bound))
        if (!mpz_divisible_ui_p(disc.get_mpz_t(), p) && has_root_mod(g, p)) out.push_back(p);
    return out;
}

std::vector<CheckResult> verify_certificate(const Certificate& cert) {
    std::vector<CheckResult> checks;
    auto add = [&checks](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
    };

    bool g_usable = cert.g.is_monic() && cert.g.degree() >= 1;
    add("polynomial", g_usable, g_usable ? "monic, degree >= 1" : "not monic of degree >= 1");
    add("modulus", cert.n >= 3, "n = " + std::to_string(cert.n));

    mpz_class disc = 0;
    if (g_usable) {
        disc = discriminant(cert.g);
        add("discriminant", disc == cert.disc_g,
            "recomputed " + disc.get_str() + ", stored " + cert.disc_g.get_str());
    } else {
        add("discriminant", false, "skipped: polynomial unusable");
    }

    bool generate = false;
    std::string gen_detail;
    if (cert.n >= 3) {
        std::vector<std::uint64_t> classes;
        for (const Assignment& a : cert.assignments) classes.push_back(a.cls);
        try {
            SubgroupReport closure = subgroup_closure(cert.n, classes);
            generate = closure.index == 1;
            gen_detail = "closure order " + std::to_string(closure.generated_order) + " of phi " +
                         std::to_string(closure.phi);
        } catch (const error& e) {
            gen_detail = e.what();
        }
    } else {
        gen_detail = "skipped: bad modulus";
    }
    add("generators", generate, gen_detail);

    mpz_class ndisc = abs(disc * static_cast<unsigned long>(cert.n));
    for (const Assignment& a : cert.assignments) {
        std::string tag = "class " + std::to_string(a.cls) + " -> " + std::to_string(a.prime);
        add(tag + ": prime", is_prime(a.prime), "");
        add(tag + ": congruence", cert.n != 0 && a.prime % cert.n == a.cls % cert.n, "");
        add(tag + ": coprime", g_usable && mpz_divisible_ui_p(ndisc.get_mpz_t(), a.prime) == 0,
            "p must not divide n*disc(g)");
        bool root = false;
        if (g_usable && is_prime(a.prime)) root = has_root_mod(cert.g, a.prime);
        add(tag + ": root", root, "");
        add(tag + ": bound", a.prime <= cert.prime_bound, "");
    }
    return checks;
}

bool certificate_valid(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

}  // namespace congap
