#ifndef CONGAP_CORE_PRIMES_HPP
#define CONGAP_CORE_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace congap {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// All primes p <= bound, ascending. Segmented odd-only sieve; bound above
// 2^32 is rejected (errc::too_large) to keep memory bounded.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Smallest prime p with start <= p <= bound and p = a (mod n), or nullopt if
// the range holds none. Requires gcd(a, n) == 1 and start <= bound
// (errc::argument otherwise); n == 1 admits every prime.
std::optional<std::uint64_t> next_prime_in_class(std::uint64_t a, std::uint64_t n,
                                                 std::uint64_t start, std::uint64_t bound);

// Kronecker symbol (a|n), the Jacobi symbol extended to all integers.
int kronecker(std::int64_t a, std::int64_t n);

// Fundamental discriminant of Q(sqrt(d)): the discriminant of the quadratic
// field generated by a square root of d. Requires d nonzero and not a
// perfect square (errc::square_discriminant).
std::int64_t fundamental_discriminant(std::int64_t d);

// Prime factorization of n >= 2 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize64(std::uint64_t n);

// (a * b) mod m and (a ^ e) mod m without overflow, m > 0.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace congap

#endif
