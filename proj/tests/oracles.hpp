#pragma once

// Slow reference implementations used only to cross-check the library.
// Everything here favors obviousness over speed.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "core/intpoly.hpp"

namespace oracles {

// Determinant of the Sylvester matrix of a and b, by fraction-free Bareiss
// elimination over the integers.
mpz_class sylvester_resultant(const congap::IntPoly& a, const congap::IntPoly& b);

// Roots of h mod p found by evaluating at every residue.
std::vector<std::uint64_t> brute_roots(const congap::IntPoly& h, std::uint64_t p);

// True when h factors into deg(h) distinct linear factors mod p.
bool brute_splits(const congap::IntPoly& h, std::uint64_t p);

// Eratosthenes with a plain bool array.
std::vector<std::uint64_t> simple_sieve(std::uint64_t bound);

bool trial_is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n);

// Whether d is a nonzero square mod the odd prime p, by enumerating squares.
bool brute_is_qr(std::int64_t d, std::uint64_t p);

// Evaluation via explicit powers, no Horner.
mpz_class naive_eval(const congap::IntPoly& h, const mpz_class& x);

// Irreducibility of monic h mod p for deg(h) <= 4, by scanning for roots and,
// for degree 4, for monic quadratic divisors.
bool brute_irreducible_mod(const congap::IntPoly& h, std::uint64_t p);

}  // namespace oracles
