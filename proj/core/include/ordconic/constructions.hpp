#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ordconic/points.hpp"
#include "ordconic/rational.hpp"

namespace ordconic {

/// Arbitrary-precision float for curve constructions whose coordinates are
/// irrational. Precision travels with each value.
using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the thread-local default BigFloat precision for a scope.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits_;
};

struct FloatPoint2 {
    BigFloat x, y;
};

/// Tolerance for on-curve / collinearity / membership residuals, always
/// relative to the scale of the evaluated form.
struct EpsilonPolicy {
    double residual_tolerance = 1e-12;
};

enum class CurveComponent { cubic, conic, line };
enum class ConstructionKind { acnodal, elliptic, conic_line };

const char* to_string(CurveComponent c);
const char* to_string(ConstructionKind k);

struct GroupIndex {
    CurveComponent component;
    int index;  // in Z_n
};

using ChartMatrix = std::array<std::array<Rational, 3>, 3>;

/// A generated point set whose elements carry group indices in Z_n; the
/// chart is the projective map that brought every point into the affine
/// plane.
struct CyclicConstruction {
    ConstructionKind kind;
    int n;
    std::vector<FloatPoint2> points;
    std::vector<GroupIndex> indices;
    ChartMatrix chart;
    unsigned precision_bits;
};

struct ProjectivePoint {
    BigFloat X, Y, Z;
};

/// Invertible rational 3x3 projective map with every image affine
/// (nonvanishing third coordinate), pairwise separated images, and - for
/// the generators - the index-collinearity law intact. Tries the identity
/// first, then seeded random candidates; retry budget 64.
std::pair<std::vector<FloatPoint2>, ChartMatrix> apply_chart(const std::vector<ProjectivePoint>& points,
                                                             std::uint64_t seed);

/// The n-element cyclic subgroup of the smooth real points of
/// y^2 = x^3 - x^2: parameters theta_k = k pi / n, affine chart t = cot
/// theta, point (t^2+1, t(t^2+1)); k = 0 is the point at infinity. Three
/// points are collinear iff their indices sum to 0 mod n.
CyclicConstruction gen_acnodal_subgroup(int n, std::uint64_t chart_seed, unsigned precision_bits = 128,
                                        const EpsilonPolicy& eps = {});

/// Exact rational point of the acnodal cubic at parameter t (pre-chart
/// affine form), for the symbolic collinearity law
/// t1 t2 + t1 t3 + t2 t3 = 1.
Point2 acnodal_rational_point(const Rational& t);

/// Numeric n-torsion sampling of the single real component of
/// y^2 = x^3 + ax + b (requires 4a^3 + 27b^2 > 0): real period by AGM,
/// parameter-to-point by Laurent series plus group-law doubling.
CyclicConstruction gen_elliptic_subgroup(int n, const Rational& a, const Rational& b,
                                         unsigned precision_bits = 128, const EpsilonPolicy& eps = {},
                                         std::uint64_t chart_seed = 0);

/// Unit circle points at u = k/n plus direction points of the line at
/// infinity at v = k/n, chart-mapped to the plane: 2n points with exactly
/// n on a line; two circle points and a line point are collinear iff
/// u1 + u2 + v = 0 (mod 1).
CyclicConstruction gen_conic_line(int n, std::uint64_t chart_seed, unsigned precision_bits = 128,
                                  const EpsilonPolicy& eps = {});

/// Exact rational set with total-k points on the axis y = 0 and k generic
/// points off it; resamples on degeneracies (a non-axis 3-point line, or
/// six co-conic points with at most two on the axis).
PointSet gen_line_plus(int total, int k, std::uint64_t seed);

bool collinear_float(const FloatPoint2& a, const FloatPoint2& b, const FloatPoint2& c,
                     const EpsilonPolicy& eps);

struct FloatConicRecord {
    std::array<int, 5> member_indices;
};

/// Float-tolerant twin of the exact enumerator, for generated
/// constructions: rank decisions and membership tests use relative
/// residual thresholds from the policy instead of exact zero tests.
std::vector<FloatConicRecord> enumerate_ordinary_conics_float(const std::vector<FloatPoint2>& points,
                                                              const EpsilonPolicy& eps = {});

} // namespace ordconic
