#include "core/unitgroup.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "core/error.hpp"
#include "core/primes.hpp"

namespace congap {

namespace {

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw error(errc::argument, "not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// x = r (mod q), x = 1 (mod n/q); q a prime-power factor of n.
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t q, std::uint64_t n) {
    std::uint64_t m = n / q;
    if (m == 1) return r % n;
    std::uint64_t s = ((r + q - 1) % q) * invmod(m % q, q) % q;
    return (1 + m * s) % n;
}

std::uint64_t smallest_primitive_root(std::uint64_t q, std::uint64_t phi_q) {
    auto phi_factors = factorize64(phi_q);
    for (std::uint64_t g = 2;; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool primitive = true;
        for (auto [f, e] : phi_factors) {
            if (powmod(g, phi_q / f, q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

void check_cap(std::uint64_t n, std::uint64_t n_cap) {
    if (n == 0) throw error(errc::argument, "modulus must be positive");
    if (n > n_cap) throw error(errc::too_large, "modulus exceeds the configured cap");
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw error(errc::argument, "modulus must be positive");
    if (n == 1) return 1;
    std::uint64_t phi = 1;
    for (auto [p, e] : factorize64(n)) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

UnitGroup unit_group(std::uint64_t n, std::uint64_t n_cap) {
    check_cap(n, n_cap);
    UnitGroup group;
    group.n = n;
    if (n <= 2) return group;  // trivial

    for (auto [p, e] : factorize64(n)) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue;  // (Z/2)^x trivial
            if (e == 2) {
                group.generators.push_back({crt_lift(3, q, n), 2});
            } else {
                group.generators.push_back({crt_lift(q - 1, q, n), 2});
                group.generators.push_back({crt_lift(5, q, n), q / 4});
            }
        } else {
            std::uint64_t phi_q = q / p * (p - 1);
            group.generators.push_back({crt_lift(smallest_primitive_root(q, phi_q), q, n), phi_q});
        }
    }

    group.phi = euler_phi(n);
    std::vector<std::uint64_t> residues;
    for (const Generator& g : group.generators) residues.push_back(g.residue);
    if (subgroup_closure(n, residues, n_cap).generated_order != group.phi)
        throw error(errc::domain, "generator closure self-check failed");
    return group;
}

SubgroupReport subgroup_closure(std::uint64_t n, const std::vector<std::uint64_t>& S,
                                std::uint64_t n_cap) {
    check_cap(n, n_cap);
    std::vector<std::uint64_t> gens;
    for (std::uint64_t s : S) {
        std::uint64_t r = s % n;
        if (std::gcd(r, n) != 1) throw error(errc::argument, "element of S shares a factor with n");
        gens.push_back(r);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    SubgroupReport report;
    report.n = n;
    report.phi = euler_phi(n);
    report.membership.assign(n, false);
    std::vector<std::uint64_t> queue;
    report.membership[1 % n] = true;
    queue.push_back(1 % n);
    std::uint64_t order = 1;
    while (!queue.empty()) {
        std::uint64_t x = queue.back();
        queue.pop_back();
        for (std::uint64_t g : gens) {
            std::uint64_t y = x * g % n;  // n <= 10^6: no overflow
            if (!report.membership[y]) {
                report.membership[y] = true;
                queue.push_back(y);
                ++order;
            }
        }
    }
    report.generated_order = order;
    report.index = report.phi / order;
    if (report.index > 1) {
        for (std::uint64_t r = 2; r < n; ++r) {
            if (std::gcd(r, n) == 1 && !report.membership[r]) {
                report.uncovered_class = r;
                break;
            }
        }
    }
    return report;
}

std::vector<std::vector<std::uint64_t>> enumerate_generating_sets(std::uint64_t n,
                                                                  std::uint64_t max_size) {
    if (n == 0) throw error(errc::argument, "modulus must be positive");
    if (n > 30) throw error(errc::too_large, "enumeration oracle is capped at n = 30");

    std::vector<std::uint64_t> residues;
    for (std::uint64_t r = 1; r <= n; ++r)
        if (std::gcd(r % n, n) == 1) residues.push_back(r % n);
    std::uint64_t phi = residues.size();
    if (max_size > phi) max_size = phi;

    // Subset count guard: sum of C(phi, k) for k <= max_size.
    double work = 0, binom = 1;
    for (std::uint64_t k = 0; k <= max_size; ++k) {
        work += binom;
        binom = binom * static_cast<double>(phi - k) / static_cast<double>(k + 1);
    }
    if (work > static_cast<double>(1u << 20))
        throw error(errc::too_large, "enumeration exceeds the subset budget");

    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> current;

    // Preorder DFS over increasing residues emits sets lexicographically.
    // Closure is monotone, so once a set generates every superset does too.
    auto emit_supersets = [&](auto&& self, std::size_t next) -> void {
        out.push_back(current);
        if (current.size() == max_size) return;
        for (std::size_t i = next; i < residues.size(); ++i) {
            current.push_back(residues[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        if (subgroup_closure(n, current).generated_order == phi) {
            emit_supersets(emit_supersets, next);
            return;
        }
        if (current.size() == max_size) return;
        for (std::size_t i = next; i < residues.size(); ++i) {
            current.push_back(residues[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace congap
