#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/intpoly.hpp"
#include "core/modpoly.hpp"
#include "oracles.hpp"

using congap::errc;
using congap::IntPoly;
using congap::ModPoly;

namespace {

IntPoly random_monic(std::mt19937_64& rng, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(1, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    int d = deg_dist(rng);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) coeffs[static_cast<std::size_t>(i)] = coeff_dist(rng);
    coeffs[static_cast<std::size_t>(d)] = 1;
    return IntPoly(coeffs);
}

}  // namespace

TEST_CASE("reduce_mod examples") {
    ModPoly a = congap::reduce_mod(congap::parse_poly("x^2 + 1"), 5);
    CHECK(a.modulus == 5);
    CHECK(a.coeffs == std::vector<std::uint64_t>{1, 0, 1});
    ModPoly b = congap::reduce_mod(congap::parse_poly("5x^2 + 1"), 5);
    CHECK(b.coeffs == std::vector<std::uint64_t>{1});
    ModPoly c = congap::reduce_mod(congap::parse_poly("x^2 - 2x + 1"), 3);
    CHECK(c.coeffs == std::vector<std::uint64_t>{1, 1, 1});
    ModPoly z = congap::reduce_mod(congap::parse_poly("7"), 7);
    CHECK(z.coeffs.empty());
    ModPoly neg = congap::reduce_mod(congap::parse_poly("x - 9"), 7);
    CHECK(neg.coeffs == std::vector<std::uint64_t>{5, 1});
}

TEST_CASE("reduce_mod requires a prime modulus") {
    CHECK_THROWS_AS(congap::reduce_mod(congap::parse_poly("x"), 4), congap::error);
    CHECK_THROWS_AS(congap::reduce_mod(congap::parse_poly("x"), 1), congap::error);
    CHECK_THROWS_AS(congap::reduce_mod(congap::parse_poly("x"), 0), congap::error);
    try {
        congap::reduce_mod(congap::parse_poly("x"), 1024000000);
        FAIL_CHECK("expected error");
    } catch (const congap::error& e) {
        CHECK(e.code() == errc::argument);
    }
}

TEST_CASE("mod arithmetic commutes with integer arithmetic") {
    std::mt19937_64 rng(3);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 97ULL, 1000003ULL}) {
        for (int trial = 0; trial < 30; ++trial) {
            IntPoly a = random_monic(rng, 5, 50);
            IntPoly b = random_monic(rng, 5, 50);
            ModPoly ap = congap::reduce_mod(a, p);
            ModPoly bp = congap::reduce_mod(b, p);
            CHECK(congap::mod_mul(ap, bp).coeffs == congap::reduce_mod(a * b, p).coeffs);
            CHECK(congap::mod_add(ap, bp).coeffs == congap::reduce_mod(a + b, p).coeffs);
            CHECK(congap::mod_sub(ap, bp).coeffs == congap::reduce_mod(a - b, p).coeffs);
        }
    }
}

TEST_CASE("mod_rem matches polynomial division") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2ULL, 5ULL, 31ULL}) {
        for (int trial = 0; trial < 50; ++trial) {
            IntPoly q = random_monic(rng, 4, 20);
            IntPoly d = random_monic(rng, 3, 20);
            IntPoly r = random_monic(rng, 2, 20);
            ModPoly dp = congap::reduce_mod(d, p);
            if (dp.coeffs.size() < 2) continue;
            // (q*d + r) mod d == r mod d
            ModPoly lhs = congap::mod_rem(congap::reduce_mod(q * d + r, p), dp);
            ModPoly rhs = congap::mod_rem(congap::reduce_mod(r, p), dp);
            CHECK(lhs.coeffs == rhs.coeffs);
        }
    }
}

TEST_CASE("gcd_mod examples") {
    std::uint64_t p = 5;
    ModPoly a = congap::reduce_mod(congap::parse_poly("x^2 - 1"), p);
    ModPoly b = congap::reduce_mod(congap::parse_poly("x^2 - 2x + 1"), p);
    ModPoly g = congap::gcd_mod(a, b);
    CHECK(g.coeffs == std::vector<std::uint64_t>{4, 1});  // x - 1
    ModPoly coprime = congap::gcd_mod(congap::reduce_mod(congap::parse_poly("x"), p),
                                      congap::reduce_mod(congap::parse_poly("x + 1"), p));
    CHECK(coprime.coeffs == std::vector<std::uint64_t>{1});
    // gcd with zero returns the other argument made monic
    ModPoly z = congap::reduce_mod(IntPoly(), p);
    ModPoly dbl = congap::reduce_mod(congap::parse_poly("2x + 2"), p);
    CHECK(congap::gcd_mod(z, dbl).coeffs == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("gcd_mod divides both inputs and is monic") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {3ULL, 7ULL, 101ULL}) {
        for (int trial = 0; trial < 40; ++trial) {
            ModPoly a = congap::reduce_mod(random_monic(rng, 5, 30), p);
            ModPoly b = congap::reduce_mod(random_monic(rng, 5, 30), p);
            ModPoly g = congap::gcd_mod(a, b);
            REQUIRE_FALSE(g.coeffs.empty());
            CHECK(g.coeffs.back() == 1);
            CHECK(congap::mod_rem(a, g).coeffs.empty());
            CHECK(congap::mod_rem(b, g).coeffs.empty());
        }
    }
}

TEST_CASE("powmod_frobenius examples") {
    IntPoly h = congap::parse_poly("x^2 + 1");
    ModPoly f5 = congap::powmod_frobenius(congap::reduce_mod(h, 5));
    CHECK(f5.coeffs == std::vector<std::uint64_t>{0, 1});  // X^5 = X mod (h, 5)
    ModPoly f7 = congap::powmod_frobenius(congap::reduce_mod(h, 7));
    CHECK(f7.coeffs == std::vector<std::uint64_t>{0, 6});  // X^7 = -X mod (h, 7)
    ModPoly fx = congap::powmod_frobenius(congap::reduce_mod(congap::parse_poly("x"), 11));
    CHECK(fx.coeffs.empty());  // X^11 = 0 mod (X, 11)
}

TEST_CASE("powmod_frobenius matches naive exponentiation") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 31ULL}) {
        for (int trial = 0; trial < 25; ++trial) {
            ModPoly hp = congap::reduce_mod(random_monic(rng, 5, 30), p);
            if (hp.coeffs.size() < 2) continue;
            ModPoly x = congap::mod_rem(congap::reduce_mod(congap::parse_poly("x"), p), hp);
            ModPoly acc = congap::mod_rem(congap::reduce_mod(congap::parse_poly("1"), p), hp);
            for (std::uint64_t i = 0; i < p; ++i) acc = congap::mod_rem(congap::mod_mul(acc, x), hp);
            CHECK(congap::powmod_frobenius(hp).coeffs == acc.coeffs);
            CHECK(static_cast<int>(congap::powmod_frobenius(hp).coeffs.size()) <=
                  static_cast<int>(hp.coeffs.size()) - 1);
        }
    }
}

TEST_CASE("powmod_frobenius requires a monic nonconstant polynomial") {
    CHECK_THROWS_AS(congap::powmod_frobenius(congap::reduce_mod(congap::parse_poly("3"), 5)),
                    congap::error);
    CHECK_THROWS_AS(congap::powmod_frobenius(congap::reduce_mod(congap::parse_poly("2x + 1"), 5)),
                    congap::error);
}

TEST_CASE("splits_completely examples") {
    IntPoly h = congap::parse_poly("x^2 + 1");
    CHECK(congap::splits_completely(h, 5));   // (x-2)(x-3)
    CHECK_FALSE(congap::splits_completely(h, 7));
    CHECK_FALSE(congap::splits_completely(h, 2));  // x^2+1 = (x+1)^2 mod 2
    IntPoly g = congap::parse_poly("x^3 - 2");
    CHECK(congap::splits_completely(g, 31));
    CHECK_FALSE(congap::splits_completely(g, 5));
    CHECK_FALSE(congap::splits_completely(g, 3));  // 3 divides the discriminant
    IntPoly sq = congap::parse_poly("x^2 - 2x + 1");
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL})
        CHECK_FALSE(congap::splits_completely(sq, p));
    CHECK(congap::splits_completely(congap::parse_poly("x - 1"), 2));
    CHECK(congap::splits_completely(congap::parse_poly("x^2 + x"), 2));
    CHECK_FALSE(congap::splits_completely(congap::parse_poly("x^2 + x + 1"), 2));
    CHECK_FALSE(congap::splits_completely(congap::parse_poly("x^2 + 5x + 5"), 5));  // x^2 mod 5
}

TEST_CASE("splits_completely requires monic input") {
    CHECK_THROWS_AS(congap::splits_completely(congap::parse_poly("2x + 1"), 5), congap::error);
    CHECK_THROWS_AS(congap::splits_completely(congap::parse_poly("7"), 5), congap::error);
}

TEST_CASE("splits_completely agrees with brute-force root counting") {
    std::mt19937_64 rng(13);
    auto primes = oracles::simple_sieve(100);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly h = random_monic(rng, 5, 40);
        for (std::uint64_t p : primes)
            CHECK(congap::splits_completely(h, p) == oracles::brute_splits(h, p));
    }
}

TEST_CASE("count_distinct_roots_mod examples") {
    IntPoly g = congap::parse_poly("x^3 - 2");
    CHECK(congap::count_distinct_roots_mod(g, 31) == 3);
    CHECK(congap::count_distinct_roots_mod(g, 5) == 1);
    CHECK(congap::count_distinct_roots_mod(g, 7) == 0);
    CHECK(congap::count_distinct_roots_mod(congap::parse_poly("x^2 - 2x + 1"), 7) == 1);
    CHECK(congap::count_distinct_roots_mod(congap::parse_poly("x^2 + 1"), 2) == 1);
}

TEST_CASE("count_distinct_roots_mod agrees with enumeration") {
    std::mt19937_64 rng(17);
    auto primes = oracles::simple_sieve(60);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly h = random_monic(rng, 6, 25);
        for (std::uint64_t p : primes)
            CHECK(congap::count_distinct_roots_mod(h, p) == oracles::brute_roots(h, p).size());
    }
}

TEST_CASE("has_root_mod examples") {
    IntPoly g = congap::parse_poly("x^3 - 2");
    CHECK(congap::has_root_mod(g, 5));
    CHECK_FALSE(congap::has_root_mod(g, 7));
    CHECK(congap::has_root_mod(g, 31));
    CHECK(congap::has_root_mod(congap::parse_poly("x^4 + 1"), 17));
    CHECK_FALSE(congap::has_root_mod(congap::parse_poly("x^4 + 1"), 7));
}

TEST_CASE("splitting implies a root and p dividing disc blocks splitting") {
    std::mt19937_64 rng(19);
    auto primes = oracles::simple_sieve(80);
    for (int trial = 0; trial < 30; ++trial) {
        IntPoly h = random_monic(rng, 5, 30);
        mpz_class disc = congap::discriminant(h);
        for (std::uint64_t p : primes) {
            if (congap::splits_completely(h, p)) {
                CHECK(congap::has_root_mod(h, p));
                CHECK(disc % p != 0);
            }
            if (disc != 0 && mpz_divisible_ui_p(disc.get_mpz_t(), p))
                CHECK_FALSE(congap::splits_completely(h, p));
        }
    }
}
