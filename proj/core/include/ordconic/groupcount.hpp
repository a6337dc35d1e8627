#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ordconic {

/// Exact ordinary-conic count of a cyclic construction, with the per-type
/// breakdown for the conic-with-line case.
struct CyclicCountReport {
    int n = 0;
    std::uint64_t count = 0;
    struct Breakdown {
        std::uint64_t type1 = 0;  // one line point (doubled) + four conic points
        std::uint64_t type2 = 0;  // two line points + tangent conic point (doubled) + two more
    };
    std::optional<Breakdown> breakdown;
};

/// Number of 5-subsets A of Z_n with (-sum A mod n) in A, by exhaustive
/// enumeration. These are exactly the ordinary conics of an n-element
/// cyclic subgroup of a one-component cubic. Requires n >= 5.
CyclicCountReport count_cyclic(int n, int threads = 1);

/// Ordinary-conic count of the conic-with-line construction on 2n points
/// (n per component), split by type:
///   type1: a in Z_n, {b,c,d,e} subset of Z_n, 2a + b+c+d+e = 0 (mod n)
///   type2: {a1,a2} subset of Z_n, r in Z_n, {s,t} subset of Z_n \ {r},
///          a1+a2 + 2r + s+t = 0 (mod n)
/// Requires n >= 3.
CyclicCountReport count_conic_line(int n, int threads = 1);

/// True iff the weighted index sum vanishes mod n: six curve points
/// (counted with multiplicity, tangency = multiplicity 2) are co-conic iff
/// their group indices sum to the identity. Total multiplicity must be 6.
bool coconic_predicate(const std::vector<std::pair<int, int>>& weighted_indices, int n);

} // namespace ordconic
