#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ordconic/conics.hpp"
#include "ordconic/points.hpp"
#include "ordconic/qlinalg.hpp"

namespace ordconic {

/// The Veronese map (x, y) -> (x, y, x^2, xy, y^2).
Point5 veronese(const Point2& p);

/// Projection data from a 2-flat P in R^5 to a complementary generic
/// 2-flat Q. alpha_points are the (collapsed) images of the three extended
/// triangle sides when the projection was built from a planar triple;
/// each carries the indices of the side's spanning pair.
struct Hyperprojection {
    Flat P;
    Flat Q;
    struct Alpha {
        std::array<int, 2> side;  // indices of the spanning pair in the source set
        Point2 image;             // in Q's coordinate chart
    };
    std::vector<Alpha> alpha_points;
};

/// Chooses a 2-flat Q with P and Q disjoint and, for every image point x,
/// span(P, x) meeting Q in a single point; both conditions verified
/// exactly. Deterministic given seed; resamples on failure with a retry
/// budget of 64 and reports the last failing witness when exhausted.
Hyperprojection choose_generic_coflat(const Flat& P, const std::vector<Point5>& images, std::uint64_t seed);

/// The single point of span(P, x) cap Q, expressed in Q's affine
/// coordinate chart (base + two directions).
Point2 hyperproject(const Hyperprojection& h, const Point5& x);

/// Which branch of the constructive search produced the conic.
enum class FindBranch { three_point_line, projected_double_point, projected_ordinary_triangle };

const char* to_string(FindBranch b);

struct FindTrace {
    FindBranch branch = FindBranch::three_point_line;
    std::vector<std::string> log;
};

/// Constructive ordinary-conic finder: join a 3-point line with an
/// ordinary line of the residual set when one exists; otherwise embed,
/// hyperproject from a suitable triple, and lift an ordinary line of the
/// projected set. The result is always re-verified (unique fit, exactly-5
/// membership). Requires |s| >= 6 and s not co-conic.
ConicRecord find_ordinary_conic(const PointSet& s, std::uint64_t seed, FindTrace* trace = nullptr);

/// One projection round of the finder: embed, project from the images of
/// the (non-collinear) triple, and lift an ordinary line of the projected
/// set to a verified conic through the triple. With avoid_collapsed_side,
/// lines through the image of the side spanned by the last two triple
/// members are excluded (the double-point branch; an ordinary triangle
/// needs no exclusion). nullopt when nothing lifts.
std::optional<ConicRecord> project_and_lift_triple(const PointSet& s, const std::array<int, 3>& triple,
                                                   bool avoid_collapsed_side, std::uint64_t seed);

} // namespace ordconic
