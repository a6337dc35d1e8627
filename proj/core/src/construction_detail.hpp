#pragma once

#include <cstdint>
#include <vector>

#include "ordconic/constructions.hpp"

namespace ordconic::detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

BigFloat to_bigfloat(const Rational& r);

bool expected_collinear(ConstructionKind kind, int n, const GroupIndex& a, const GroupIndex& b,
                        const GroupIndex& c);

/// Chart search shared by the generators: apply_chart candidates until the
/// images also satisfy the construction's index-collinearity law.
CyclicConstruction finalize_construction(ConstructionKind kind, int n,
                                         const std::vector<ProjectivePoint>& proj,
                                         std::vector<GroupIndex> indices, std::uint64_t chart_seed,
                                         unsigned precision_bits, const EpsilonPolicy& eps);

} // namespace ordconic::detail
