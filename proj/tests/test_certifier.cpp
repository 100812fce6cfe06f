#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/certifier.hpp"
#include "core/error.hpp"
#include "core/modpoly.hpp"
#include "core/primes.hpp"
#include "core/witness.hpp"
#include "oracles.hpp"

using congap::errc;
using congap::IntPoly;
using congap::Irreducibility;

TEST_CASE("irreducibility heuristic examples") {
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^2 + 1")) ==
          Irreducibility::definitely_irreducible);
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^2 - 1")) ==
          Irreducibility::definitely_reducible);
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^2 - 2x + 1")) ==
          Irreducibility::definitely_reducible);
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x - 5")) ==
          Irreducibility::definitely_irreducible);
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^3 - 2")) ==
          Irreducibility::definitely_irreducible);
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^5 - x - 1")) ==
          Irreducibility::definitely_irreducible);
    // x^4 + 1 is irreducible over Q but reducible mod every prime
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^4 + 1")) ==
          Irreducibility::unknown);
    // products without rational roots and no good prime below the scan limit
    CHECK(congap::check_irreducible_heuristic(congap::parse_poly("x^4 + 2x^2 + 1")) !=
          Irreducibility::definitely_irreducible);
}

TEST_CASE("rabin test against the brute-force oracle") {
    std::vector<IntPoly> polys = {
        congap::parse_poly("x^2 + 1"),       congap::parse_poly("x^2 - 2"),
        congap::parse_poly("x^2 + x + 1"),   congap::parse_poly("x^3 - 2"),
        congap::parse_poly("x^3 + x + 1"),   congap::parse_poly("x^4 + 1"),
        congap::parse_poly("x^4 + x + 1"),   congap::parse_poly("x^4 - 2"),
        congap::parse_poly("x^2 - 1"),       congap::parse_poly("x^3 - x"),
        congap::parse_poly("x^4 + x^2 + 1"),
    };
    for (const IntPoly& g : polys) {
        mpz_class disc = congap::discriminant(g);
        for (std::uint64_t p : oracles::simple_sieve(19)) {
            if (disc != 0 && mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
            CHECK(congap::irreducible_mod(g, p) == oracles::brute_irreducible_mod(g, p));
        }
    }
}

TEST_CASE("semi_split_primes examples") {
    IntPoly g = congap::parse_poly("x^3 - 2");
    CHECK(congap::semi_split_primes(g, 20) == std::vector<std::uint64_t>{5, 11, 17});
    CHECK(congap::semi_split_primes(congap::parse_poly("x^2 + 1"), 30) ==
          std::vector<std::uint64_t>{5, 13, 17, 29});
    // degree 1 always has a root and disc = 1 excludes nothing
    CHECK(congap::semi_split_primes(congap::parse_poly("x - 5"), 10) ==
          std::vector<std::uint64_t>{2, 3, 5, 7});

    // for a quadratic, semi-split coincides with split
    IntPoly q = congap::parse_poly("x^2 + 1");
    CHECK(congap::semi_split_primes(q, 10000) == congap::split_primes(q, 10000).primes);
}

TEST_CASE("semi_split contains split and respects the discriminant filter") {
    IntPoly g = congap::parse_poly("x^3 - 2");
    auto semi = congap::semi_split_primes(g, 5000);
    auto split = congap::split_primes(g, 5000);
    CHECK(std::includes(semi.begin(), semi.end(), split.primes.begin(), split.primes.end()));
    mpz_class disc = congap::discriminant(g);
    for (std::uint64_t p : semi) {
        CHECK(congap::has_root_mod(g, p));
        CHECK_FALSE(mpz_divisible_ui_p(disc.get_mpz_t(), p));
    }
    // density check: semi-split for the cubic is 2/3 of primes, split is 1/3
    CHECK(semi.size() > 2 * split.primes.size());
}

TEST_CASE("certify x^2+1 at n=5") {
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 5, 100);
    REQUIRE(outcome.certificate.has_value());
    const auto& cert = *outcome.certificate;
    CHECK(cert.n == 5);
    CHECK(cert.disc_g == -4);
    CHECK(cert.prime_bound == 100);
    REQUIRE(cert.assignments.size() == 1);
    CHECK(cert.assignments[0].cls == 2);
    CHECK(cert.assignments[0].prime == 17);
    CHECK(outcome.partial == cert.assignments);
    CHECK(outcome.missing.empty());
}

TEST_CASE("certify the fifth cyclotomic field at n=3") {
    // 11 = 1 mod 5 splits completely in the field of Phi_5, hence semi-split;
    // the scan rejects 2 (no root) and skips 5 (divides n*disc)
    auto outcome =
        congap::certify_cyclotomic(congap::parse_poly("x^4 + x^3 + x^2 + x + 1"), 3, 100);
    REQUIRE(outcome.certificate.has_value());
    const auto& cert = *outcome.certificate;
    CHECK(cert.disc_g == 125);
    REQUIRE(cert.assignments.size() == 1);
    CHECK(cert.assignments[0].cls == 2);
    CHECK(cert.assignments[0].prime == 11);
}

TEST_CASE("certify comes up empty when no semi-split prime hits the class") {
    // Phi_4: need a prime = 3 mod 4 with a root of x^2+1, impossible
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 4, 10000);
    CHECK_FALSE(outcome.certificate.has_value());
    REQUIRE(outcome.missing.size() == 1);
    CHECK(outcome.missing[0].cls == 3);
    CHECK(outcome.missing[0].primes_tried > 100);
    CHECK(outcome.missing[0].last_prime <= 10000);
    CHECK(outcome.n == 4);
    CHECK(outcome.prime_bound == 10000);
}

TEST_CASE("certify with several generator classes") {
    // (Z/8)^x needs two generators; x^2+1 has roots mod p iff p = 1 mod 4,
    // so class 5 is coverable and classes 3, 7 are not
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 8, 10000);
    CHECK_FALSE(outcome.certificate.has_value());
    CHECK_FALSE(outcome.missing.empty());
    for (const auto& scan : outcome.missing) CHECK((scan.cls == 7 || scan.cls == 3));

    // x^3 - 2 is degree 3, coprime to phi(8): every class is coverable
    auto cubic = congap::certify_cyclotomic(congap::parse_poly("x^3 - 2"), 8, 10000);
    REQUIRE(cubic.certificate.has_value());
    CHECK(cubic.certificate->assignments.size() == 2);
    for (const auto& a : cubic.certificate->assignments) {
        CHECK(congap::is_prime(a.prime));
        CHECK(a.prime % 8 == a.cls);
        CHECK(congap::has_root_mod(congap::parse_poly("x^3 - 2"), a.prime));
    }
}

TEST_CASE("certify argument and domain errors") {
    CHECK_THROWS_AS(congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 2, 100),
                    congap::error);
    CHECK_THROWS_AS(congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 5, 1),
                    congap::error);
    CHECK_THROWS_AS(congap::certify_cyclotomic(congap::parse_poly("2x + 1"), 5, 100),
                    congap::error);
    try {
        congap::certify_cyclotomic(congap::parse_poly("x^2 - 1"), 5, 100);
        FAIL_CHECK("expected error");
    } catch (const congap::error& e) {
        CHECK(e.code() == errc::reducible);
    }
    // reducibility trumps the assume flag
    CHECK_THROWS_AS(congap::certify_cyclotomic(congap::parse_poly("x^2 - 2x + 1"), 5, 100, true),
                    congap::error);
    try {
        congap::certify_cyclotomic(congap::parse_poly("x^4 + 1"), 5, 100);
        FAIL_CHECK("expected error");
    } catch (const congap::error& e) {
        CHECK(e.code() == errc::unknown_irreducible);
    }
}

TEST_CASE("assume-irreducible unlocks heuristic-unknown inputs") {
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^4 + 1"), 5, 100, true);
    REQUIRE(outcome.certificate.has_value());
    REQUIRE(outcome.certificate->assignments.size() == 1);
    CHECK(outcome.certificate->assignments[0].cls == 2);
    CHECK(outcome.certificate->assignments[0].prime == 17);
}

TEST_CASE("certificates verify and tampering is caught") {
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 5, 100);
    REQUIRE(outcome.certificate.has_value());
    congap::Certificate cert = *outcome.certificate;

    auto checks = congap::verify_certificate(cert);
    CHECK(congap::certificate_valid(checks));
    for (const auto& c : checks) CHECK(c.ok);

    SUBCASE("wrong prime") {
        cert.assignments[0].prime = 13;  // 13 = 3 mod 5, and wrong class
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("composite prime") {
        cert.assignments[0].prime = 57;  // 57 = 2 mod 5 but composite
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("prime with no root") {
        cert.assignments[0].prime = 7;  // 7 = 2 mod 5 but x^2+1 has no root mod 7
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("prime above the bound") {
        cert.assignments[0].prime = 19937;  // 19937 = 2 mod 5, prime, has root, too big
        cert.assignments[0].cls = 2;
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("wrong discriminant") {
        cert.disc_g = -8;
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("classes that do not generate") {
        cert.n = 8;  // {2 mod 8} generates nothing coprime
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("dropped assignment") {
        cert.assignments.clear();
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
    SUBCASE("non-monic polynomial") {
        cert.g = congap::parse_poly("2x^2 + 1");
        CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(cert)));
    }
}

TEST_CASE("verified certificate for the cubic at n = 8") {
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^3 - 2"), 8, 10000);
    REQUIRE(outcome.certificate.has_value());
    auto checks = congap::verify_certificate(*outcome.certificate);
    CHECK(congap::certificate_valid(checks));

    congap::Certificate bad = *outcome.certificate;
    bad.assignments.pop_back();  // a generator class is no longer covered
    CHECK_FALSE(congap::certificate_valid(congap::verify_certificate(bad)));
}

TEST_CASE("certify respects the prime bound exactly") {
    // with bound 16 the only usable prime 17 for class 2 mod 5 is out of reach
    auto outcome = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 5, 16);
    CHECK_FALSE(outcome.certificate.has_value());
    REQUIRE(outcome.missing.size() == 1);
    CHECK(outcome.missing[0].cls == 2);
    // with bound 17 it is exactly reachable
    auto exact = congap::certify_cyclotomic(congap::parse_poly("x^2 + 1"), 5, 17);
    REQUIRE(exact.certificate.has_value());
    CHECK(exact.certificate->assignments[0].prime == 17);
}
