#include <vector>

#include "construction_detail.hpp"
#include "ordconic/constructions.hpp"
#include "ordconic/errors.hpp"

namespace ordconic {

namespace {

// Largest (only) real root of x^3 + ax + b by bisection from the Cauchy
// bound; the one-component discriminant condition makes the sign change
// unique.
BigFloat cubic_real_root(const BigFloat& a, const BigFloat& b, int steps) {
    auto f = [&](const BigFloat& x) { return x * x * x + a * x + b; };
    BigFloat hi = 1 + abs(a) + abs(b);
    BigFloat lo = -hi;
    for (int i = 0; i < steps; ++i) {
        BigFloat mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        (f(mid) >= 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
}

BigFloat agm(BigFloat x, BigFloat y) {
    for (int i = 0; i < 5000; ++i) {
        BigFloat m = (x + y) / 2;
        BigFloat g = sqrt(x * y);
        if (m == x || m == y) return m;
        if (abs(m - g) <= abs(m) * std::numeric_limits<BigFloat>::epsilon() * 4) return m;
        x = m;
        y = g;
    }
    return x;
}

/// Real period of the parametrization of y^2 = x^3 + ax + b (one real
/// component): with e1 the real root and m +- i nu the complex pair,
/// Omega = pi / AGM(sqrt(A), sqrt((A + e1 - m) / 2)), A = |e1 - (m + i nu)|.
BigFloat real_period(const BigFloat& a, const BigFloat& e1) {
    BigFloat c = BigFloat(3) / 2 * e1;          // e1 - m with m = -e1/2
    BigFloat nu2 = a + BigFloat(3) / 4 * e1 * e1;  // imaginary part squared
    BigFloat A = sqrt(c * c + nu2);
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    return pi / agm(sqrt(A), sqrt((A + c) / 2));
}

struct CurvePoint {
    BigFloat x, y;
};

// Laurent coefficients of the Weierstrass function for g2 = -4a, g3 = -4b:
// wp(u) = 1/u^2 + sum_{k>=2} c_k u^{2k-2}.
std::vector<BigFloat> wp_series_coeffs(const BigFloat& a, const BigFloat& b, int terms) {
    std::vector<BigFloat> c(static_cast<size_t>(terms) + 1, BigFloat(0));
    if (terms >= 2) c[2] = -a / 5;
    if (terms >= 3) c[3] = -b / 7;
    for (int k = 4; k <= terms; ++k) {
        BigFloat acc = 0;
        for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<size_t>(m)] * c[static_cast<size_t>(k - m)];
        c[static_cast<size_t>(k)] = acc * 3 / ((2 * k + 1) * (k - 3));
    }
    return c;
}

// (wp(u), wp'(u)/2) by truncated series; valid only for u far inside the
// fundamental domain, which point_at guarantees by scaling down first.
CurvePoint wp_point_small(const BigFloat& u, const std::vector<BigFloat>& c) {
    BigFloat u2 = u * u;
    BigFloat x = 1 / u2, dx = -2 / (u2 * u);
    BigFloat upow = u2;  // u^{2k-2} for k = 2
    for (size_t k = 2; k < c.size(); ++k) {
        x += c[k] * upow;
        dx += c[k] * static_cast<int>(2 * k - 2) * upow / u;
        upow *= u2;
    }
    return CurvePoint{x, dx / 2};
}

CurvePoint double_point(const CurvePoint& p, const BigFloat& a) {
    BigFloat lambda = (3 * p.x * p.x + a) / (2 * p.y);
    BigFloat xn = lambda * lambda - 2 * p.x;
    return CurvePoint{xn, lambda * (p.x - xn) - p.y};
}

CurvePoint point_at(const BigFloat& s, const BigFloat& a, const std::vector<BigFloat>& c) {
    constexpr int kDoublings = 26;
    BigFloat u = s;
    for (int i = 0; i < kDoublings; ++i) u /= 2;
    CurvePoint p = wp_point_small(u, c);
    for (int i = 0; i < kDoublings; ++i) p = double_point(p, a);
    return p;
}

} // namespace

CyclicConstruction gen_elliptic_subgroup(int n, const Rational& a, const Rational& b,
                                         unsigned precision_bits, const EpsilonPolicy& eps,
                                         std::uint64_t chart_seed) {
    if (n < 2) throw PreconditionError("gen_elliptic_subgroup: need n >= 2");
    if (4 * a * a * a + 27 * b * b <= 0)
        throw PreconditionError("gen_elliptic_subgroup: need 4a^3 + 27b^2 > 0 (one real component)");

    const unsigned work_bits = precision_bits + 96;
    PrecisionGuard guard(work_bits);
    const BigFloat af = detail::to_bigfloat(a), bf = detail::to_bigfloat(b);
    const BigFloat e1 = cubic_real_root(af, bf, static_cast<int>(work_bits) + 64);
    const BigFloat omega = real_period(af, e1);
    const auto series = wp_series_coeffs(af, bf, static_cast<int>(work_bits) / 40 + 8);
    const BigFloat tol = BigFloat(eps.residual_tolerance);

    std::vector<ProjectivePoint> proj;
    std::vector<GroupIndex> indices;
    for (int k = 0; k < n; ++k) {
        indices.push_back(GroupIndex{CurveComponent::cubic, k});
        if (k == 0) {
            proj.push_back(ProjectivePoint{BigFloat(0), BigFloat(1), BigFloat(0)});
            continue;
        }
        CurvePoint p;
        if (2 * k == n) {
            p = CurvePoint{e1, BigFloat(0)};  // the unique real 2-torsion point
        } else {
            const int kk = std::min(k, n - k);
            p = point_at(omega * kk / n, af, series);
            if (k > n - k) p.y = -p.y;
        }
        BigFloat res = abs(p.y * p.y - (p.x * p.x * p.x + af * p.x + bf));
        BigFloat scale = abs(p.y * p.y) + abs(p.x * p.x * p.x) + abs(af * p.x) + abs(bf);
        if (res > tol * scale)
            throw PrecisionError(
                "gen_elliptic_subgroup: on-curve residual exceeds tolerance; increase precision_bits");
        proj.push_back(ProjectivePoint{std::move(p.x), std::move(p.y), BigFloat(1)});
    }
    return detail::finalize_construction(ConstructionKind::elliptic, n, proj, std::move(indices),
                                         chart_seed, precision_bits, eps);
}

} // namespace ordconic
