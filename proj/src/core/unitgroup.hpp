#ifndef CONGAP_CORE_UNITGROUP_HPP
#define CONGAP_CORE_UNITGROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace congap {

// Moduli above this are rejected rather than silently degrading; the dense
// membership arrays stay at a few MB.
inline constexpr std::uint64_t kDefaultModulusCap = 1'000'000;

std::uint64_t euler_phi(std::uint64_t n);

struct Generator {
    std::uint64_t residue;
    std::uint64_t order;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Canonical generators of (Z/nZ)^x via CRT over the prime-power factors of
// n: factor 4 contributes the class 3; 2^k (k >= 3) contributes -1 and 5;
// each odd prime power contributes its smallest primitive root. Every
// generator is lifted to mod n with component 1 elsewhere. The closure of
// the listed generators is the full group (checked at construction).
struct UnitGroup {
    std::uint64_t n = 1;
    std::uint64_t phi = 1;
    std::vector<Generator> generators;
};

UnitGroup unit_group(std::uint64_t n, std::uint64_t n_cap = kDefaultModulusCap);

struct SubgroupReport {
    std::uint64_t n = 1;
    std::uint64_t phi = 1;
    std::uint64_t generated_order = 1;
    std::uint64_t index = 1;  // phi / generated_order
    // membership[r] for r in [0, n): r lies in the generated subgroup. May be
    // empty when the report was built without a dense pass (large n).
    std::vector<bool> membership;
    std::optional<std::uint64_t> uncovered_class;  // least coprime class outside, if proper
};

// Multiplicative closure of S united with {1} mod n, breadth-first. Every
// element of S must be coprime to n (errc::argument).
SubgroupReport subgroup_closure(std::uint64_t n, const std::vector<std::uint64_t>& S,
                                std::uint64_t n_cap = kDefaultModulusCap);

// Oracle: all subsets of the coprime residues mod n of size <= max_size whose
// closure is the full group, in lexicographic order. n is capped at 30; a
// request whose subset count exceeds a fixed work budget is rejected
// (errc::too_large).
std::vector<std::vector<std::uint64_t>> enumerate_generating_sets(std::uint64_t n,
                                                                  std::uint64_t max_size);

}  // namespace congap

#endif
