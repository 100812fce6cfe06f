#include "core/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace congap {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

// One strong-pseudoprime round; n odd, n - 1 = d * 2^s.
bool sprp(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases decide primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!sprp(n, a, d, s)) return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    if (bound > (1ull << 32))
        throw error(errc::too_large, "prime bound exceeds 2^32");
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    primes.push_back(2);
    if (bound < 3) return primes;

    // Base odd primes up to sqrt(bound) by a plain sieve.
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound)));
    while (root * root > bound) --root;
    while ((root + 1) * (root + 1) <= bound) ++root;
    std::vector<bool> base(root + 1, true);
    std::vector<std::uint64_t> base_odd;
    for (std::uint64_t i = 3; i <= root; i += 2) {
        if (!base[i]) continue;
        base_odd.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += 2 * i) base[j] = false;
    }

    // Odd-only segments: segment[k] represents lo + 2k.
    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<bool> seg;
    for (std::uint64_t lo = 3; lo <= bound; lo += 2 * kSegment) {
        std::uint64_t hi = std::min(bound, lo + 2 * kSegment - 2);
        std::uint64_t len = (hi - lo) / 2 + 1;
        seg.assign(len, true);
        for (std::uint64_t p : base_odd) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;
            for (std::uint64_t j = start; j <= hi; j += 2 * p) seg[(j - lo) / 2] = false;
        }
        for (std::uint64_t k = 0; k < len; ++k)
            if (seg[k]) primes.push_back(lo + 2 * k);
    }
    return primes;
}

std::optional<std::uint64_t> next_prime_in_class(std::uint64_t a, std::uint64_t n,
                                                 std::uint64_t start, std::uint64_t bound) {
    if (n == 0) throw error(errc::argument, "modulus must be positive");
    if (start > bound) throw error(errc::argument, "empty search range");
    if (n == 1) {
        for (std::uint64_t p = start < 2 ? 2 : start; p <= bound; ++p)
            if (is_prime(p)) return p;
        return std::nullopt;
    }
    a %= n;
    if (std::gcd(a, n) != 1)
        throw error(errc::argument, "residue class shares a factor with the modulus");
    // First candidate >= start in the class (a > 0 since gcd(a, n) = 1, n > 1).
    std::uint64_t p;
    if (start <= a) {
        p = a;
    } else {
        p = start - (start % n) + a;
        if (p < start) p += n;
    }
    while (p <= bound) {
        if (is_prime(p)) return p;
        if (bound - p < n) break;  // next step would pass bound (or wrap)
        p += n;
    }
    return std::nullopt;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    std::uint64_t un;
    if (n < 0) {
        un = static_cast<std::uint64_t>(-(n + 1)) + 1;
        if (a < 0) result = -result;
    } else {
        un = static_cast<std::uint64_t>(n);
    }
    // Pull out the 2-part of n; (a|2) = 0 for even a, else +-1 by a mod 8.
    int n_twos = 0;
    while ((un & 1) == 0) {
        un >>= 1;
        ++n_twos;
    }
    if (n_twos) {
        if ((a & 1) == 0) return 0;
        std::int64_t am8 = ((a % 8) + 8) % 8;
        if ((n_twos & 1) && (am8 == 3 || am8 == 5)) result = -result;
    }
    // Now un is odd; negative a handled up front: (-1|n) = (-1)^((n-1)/2).
    std::uint64_t ua;
    if (a < 0) {
        if (((un - 1) / 2) & 1) result = -result;
        ua = static_cast<std::uint64_t>(-(a + 1)) + 1;  // |a| without INT64_MIN overflow
    } else {
        ua = static_cast<std::uint64_t>(a);
    }
    ua %= un;
    while (ua != 0) {
        while ((ua & 1) == 0) {
            ua >>= 1;
            std::uint64_t m8 = un & 7;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(ua, un);
        if ((ua & 3) == 3 && (un & 3) == 3) result = -result;
        ua %= un;
    }
    return un == 1 ? result : 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize64(std::uint64_t n) {
    if (n == 0) throw error(errc::argument, "cannot factor zero");
    if (n == 1) return {};
    std::vector<std::uint64_t> primes;

    // Trial division peels small factors; rho handles the 64-bit leftovers.
    auto trial = [&primes](std::uint64_t& m) {
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
            while (m % p == 0) {
                primes.push_back(p);
                m /= p;
            }
        }
        for (std::uint64_t p = 37; p < 100000 && p * p <= m; p += 2) {
            while (m % p == 0) {
                primes.push_back(p);
                m /= p;
            }
        }
    };

    // Brent's cycle-finding variant of Pollard rho.
    auto rho = [](std::uint64_t m) -> std::uint64_t {
        if ((m & 1) == 0) return 2;
        std::uint64_t c = 1;
        while (true) {
            std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
            auto f = [&](std::uint64_t v) { return (mulmod(v, v, m) + c) % m; };
            std::uint64_t r = 1;
            while (d == 1) {
                x = y;
                for (std::uint64_t i = 0; i < r; ++i) y = f(y);
                for (std::uint64_t k = 0; k < r && d == 1; k += 128) {
                    ys = y;
                    std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
                    for (std::uint64_t i = 0; i < lim; ++i) {
                        y = f(y);
                        q = mulmod(q, x > y ? x - y : y - x, m);
                    }
                    d = std::gcd(q, m);
                }
                r <<= 1;
            }
            if (d == m) {
                d = 1;
                while (d == 1) {
                    ys = f(ys);
                    d = std::gcd(x > ys ? x - ys : ys - x, m);
                }
            }
            if (d != m) return d;
            ++c;  // cycle degenerated; retry with a new increment
        }
    };

    std::uint64_t m = n;
    trial(m);
    std::vector<std::uint64_t> stack;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        std::uint64_t v = stack.back();
        stack.pop_back();
        if (is_prime(v)) {
            primes.push_back(v);
            continue;
        }
        std::uint64_t d = rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }

    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

std::int64_t fundamental_discriminant(std::int64_t d) {
    if (d == 0) throw error(errc::argument, "discriminant must be nonzero");

    // Squarefree kernel of |d| carries the sign.
    std::uint64_t mag = d > 0 ? static_cast<std::uint64_t>(d)
                              : static_cast<std::uint64_t>(-(d + 1)) + 1;
    std::int64_t kernel = 1;
    if (mag > 1) {
        for (auto [p, e] : factorize64(mag)) {
            if (e & 1) {
                if (kernel > static_cast<std::int64_t>((1ull << 62) / p))
                    throw error(errc::too_large, "squarefree part exceeds 2^62");
                kernel *= static_cast<std::int64_t>(p);
            }
        }
    }
    if (d < 0) kernel = -kernel;
    if (kernel == 1) throw error(errc::square_discriminant, "discriminant is a perfect square");

    std::int64_t mod4 = ((kernel % 4) + 4) % 4;
    if (mod4 == 1) return kernel;
    if (kernel > (1ll << 61) || kernel < -(1ll << 61))
        throw error(errc::too_large, "fundamental discriminant exceeds 2^63");
    return 4 * kernel;
}

}  // namespace congap
