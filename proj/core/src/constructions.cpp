#include "ordconic/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "construction_detail.hpp"
#include "ordconic/conics.hpp"
#include "ordconic/errors.hpp"
#include "ordconic/incidence.hpp"
#include "ordconic/qlinalg.hpp"
#include "ordconic/rng.hpp"

namespace ordconic {

namespace {

unsigned bits_to_digits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398)) + 2;
}

BigFloat rational_to_float(const Rational& r) { return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str()); }

} // namespace

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits(bits));
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_digits_); }

const char* to_string(CurveComponent c) {
    switch (c) {
        case CurveComponent::cubic: return "cubic";
        case CurveComponent::conic: return "conic";
        case CurveComponent::line: return "line";
    }
    return "?";
}

const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::acnodal: return "acnodal";
        case ConstructionKind::elliptic: return "elliptic";
        case ConstructionKind::conic_line: return "conic_line";
    }
    return "?";
}

namespace {

Rational chart_det(const ChartMatrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ChartMatrix identity_chart() {
    ChartMatrix m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
    return m;
}

std::optional<std::vector<FloatPoint2>> chart_images(const std::vector<ProjectivePoint>& pts,
                                                     const ChartMatrix& m) {
    // Reject candidates that push an image too close to the new line at
    // infinity, and candidates that merge two images.
    const BigFloat z_floor = BigFloat("1e-9");
    std::vector<FloatPoint2> out;
    out.reserve(pts.size());
    BigFloat coord_scale = 1;
    for (const auto& p : pts) {
        BigFloat w[3];
        for (int i = 0; i < 3; ++i)
            w[i] = rational_to_float(m[i][0]) * p.X + rational_to_float(m[i][1]) * p.Y +
                   rational_to_float(m[i][2]) * p.Z;
        BigFloat norm = abs(w[0]) + abs(w[1]) + abs(w[2]);
        if (norm == 0 || abs(w[2]) < z_floor * norm) return std::nullopt;
        FloatPoint2 q{w[0] / w[2], w[1] / w[2]};
        coord_scale = std::max(coord_scale, BigFloat(abs(q.x) + abs(q.y)), std::less<BigFloat>());
        out.push_back(std::move(q));
    }
    const BigFloat sep_floor = BigFloat("1e-9") * coord_scale;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (abs(out[i].x - out[j].x) + abs(out[i].y - out[j].y) < sep_floor) return std::nullopt;
    return out;
}

} // namespace

std::pair<std::vector<FloatPoint2>, ChartMatrix> apply_chart(const std::vector<ProjectivePoint>& points,
                                                             std::uint64_t seed) {
    ChartMatrix id = identity_chart();
    if (auto img = chart_images(points, id)) return {std::move(*img), id};

    Rng rng(seed);
    std::string last = "identity rejected";
    constexpr int kRetryBudget = 64;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        ChartMatrix m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rational(rng.range(-5, 5));
        if (chart_det(m) == 0) {
            last = "singular candidate";
            continue;
        }
        if (auto img = chart_images(points, m)) return {std::move(*img), m};
        last = "image at infinity or merged images";
    }
    throw RetryExhausted("apply_chart: retry budget exhausted; last failure: " + last);
}

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
}

BigFloat to_bigfloat(const Rational& r) { return rational_to_float(r); }

bool expected_collinear(ConstructionKind kind, int n, const GroupIndex& a, const GroupIndex& b,
                        const GroupIndex& c) {
    if (kind != ConstructionKind::conic_line) return (a.index + b.index + c.index) % n == 0;
    int line_count = (a.component == CurveComponent::line) + (b.component == CurveComponent::line) +
                     (c.component == CurveComponent::line);
    if (line_count == 3) return true;  // all on the image of L
    if (line_count != 1) return false;
    return (a.index + b.index + c.index) % n == 0;
}

CyclicConstruction finalize_construction(ConstructionKind kind, int n,
                                         const std::vector<ProjectivePoint>& proj,
                                         std::vector<GroupIndex> indices, std::uint64_t chart_seed,
                                         unsigned precision_bits, const EpsilonPolicy& eps) {
    const int npts = static_cast<int>(proj.size());
    // All triples when feasible, a deterministic sample otherwise.
    const long triple_total = static_cast<long>(npts) * (npts - 1) * (npts - 2) / 6;
    const bool check_all = triple_total <= 60000;

    constexpr int kRetryBudget = 64;
    std::string last = "no chart tried";
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<FloatPoint2> pts;
        ChartMatrix chart;
        try {
            auto got = apply_chart(proj, mix_seed(chart_seed, static_cast<std::uint64_t>(attempt)));
            pts = std::move(got.first);
            chart = got.second;
        } catch (const RetryExhausted& e) {
            last = e.what();
            continue;
        }
        bool ok = true;
        long stride = check_all ? 1 : std::max(triple_total / 60000, 2L);
        long counter = 0;
        for (int i = 0; i < npts && ok; ++i)
            for (int j = i + 1; j < npts && ok; ++j)
                for (int k = j + 1; k < npts && ok; ++k) {
                    if (counter++ % stride != 0) continue;
                    bool geo = collinear_float(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)],
                                               pts[static_cast<size_t>(k)], eps);
                    bool law = expected_collinear(kind, n, indices[static_cast<size_t>(i)],
                                                  indices[static_cast<size_t>(j)],
                                                  indices[static_cast<size_t>(k)]);
                    if (geo != law) {
                        last = "index law mismatch on triple {" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + "}";
                        ok = false;
                    }
                }
        if (!ok) continue;
        return CyclicConstruction{kind, n, std::move(pts), std::move(indices), chart, precision_bits};
    }
    throw RetryExhausted("construction chart search exhausted; last failure: " + last);
}

} // namespace detail

Point2 acnodal_rational_point(const Rational& t) {
    Rational x = t * t + 1;
    return Point2{x, t * x};
}

CyclicConstruction gen_acnodal_subgroup(int n, std::uint64_t chart_seed, unsigned precision_bits,
                                        const EpsilonPolicy& eps) {
    if (n < 3) throw PreconditionError("gen_acnodal_subgroup: need n >= 3");
    PrecisionGuard guard(precision_bits + 64);
    const BigFloat pi = boost::math::constants::pi<BigFloat>();

    std::vector<ProjectivePoint> proj;
    std::vector<GroupIndex> indices;
    const BigFloat tol = BigFloat(eps.residual_tolerance);
    for (int k = 0; k < n; ++k) {
        indices.push_back(GroupIndex{CurveComponent::cubic, k});
        if (k == 0) {
            proj.push_back(ProjectivePoint{BigFloat(0), BigFloat(1), BigFloat(0)});  // identity
            continue;
        }
        BigFloat theta = pi * k / n;
        BigFloat t = cos(theta) / sin(theta);
        BigFloat x = t * t + 1;
        BigFloat y = t * x;
        // On-curve residual, relative: y^2 - x^3 + x^2.
        BigFloat res = abs(y * y - x * x * x + x * x);
        BigFloat scale = abs(y * y) + abs(x * x * x) + abs(x * x);
        if (res > tol * scale)
            throw PrecisionError("gen_acnodal_subgroup: on-curve residual exceeds tolerance");
        proj.push_back(ProjectivePoint{std::move(x), std::move(y), BigFloat(1)});
    }
    return detail::finalize_construction(ConstructionKind::acnodal, n, proj, std::move(indices), chart_seed,
                                         precision_bits, eps);
}

CyclicConstruction gen_conic_line(int n, std::uint64_t chart_seed, unsigned precision_bits,
                                  const EpsilonPolicy& eps) {
    if (n < 3) throw PreconditionError("gen_conic_line: need n >= 3");
    PrecisionGuard guard(precision_bits + 64);
    const BigFloat pi = boost::math::constants::pi<BigFloat>();

    std::vector<ProjectivePoint> proj;
    std::vector<GroupIndex> indices;
    for (int k = 0; k < n; ++k) {  // circle points at u = k/n
        BigFloat theta = 2 * pi * k / n;
        proj.push_back(ProjectivePoint{cos(theta), sin(theta), BigFloat(1)});
        indices.push_back(GroupIndex{CurveComponent::conic, k});
    }
    for (int k = 0; k < n; ++k) {  // direction points at v = k/n
        BigFloat phi = pi / 2 - pi * k / n;
        proj.push_back(ProjectivePoint{cos(phi), sin(phi), BigFloat(0)});
        indices.push_back(GroupIndex{CurveComponent::line, k});
    }
    return detail::finalize_construction(ConstructionKind::conic_line, n, proj, std::move(indices),
                                         chart_seed, precision_bits, eps);
}

PointSet gen_line_plus(int total, int k, std::uint64_t seed) {
    if (!(0 < k && k < total - 2)) throw PreconditionError("gen_line_plus: need 0 < k < total - 2");
    const int on_line = total - k;
    Rng rng(seed);
    const LineKey axis{Integer(0), Integer(1), Integer(0)};  // y = 0

    constexpr int kResampleBudget = 1000;
    for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
        std::vector<Point2> pts;
        for (int i = 0; i < on_line; ++i) pts.push_back(Point2{Rational(i), Rational(0)});
        bool dup = false;
        for (int i = 0; i < k; ++i) {
            Rational x = make_rational(rng.range(-8 * total, 8 * total), rng.range(1, 6));
            long ynum = rng.range(-8 * total, 8 * total);
            if (ynum == 0) ynum = 1 + static_cast<long>(rng.next() % 7);
            Rational y = make_rational(ynum, rng.range(1, 6));
            Point2 p{x, y};
            if (std::find(pts.begin(), pts.end(), p) != pts.end()) dup = true;
            pts.push_back(std::move(p));
        }
        if (dup) continue;
        PointSet s(pts);

        // No non-axis line may carry three points.
        bool degenerate = false;
        for (const auto& rec : enumerate_lines(s))
            if (rec.member_indices.size() >= 3 && !(rec.line == axis)) degenerate = true;
        if (degenerate) continue;

        // No six co-conic points with at most two on the axis (>= 4 of the
        // k off-axis points involved).
        std::vector<int> off_idx, axis_idx;
        for (int i = 0; i < total; ++i) (s[i].y == 0 ? axis_idx : off_idx).push_back(i);
        auto coconic6 = [&](const std::array<int, 6>& idx) {
            Matrix m(6, 6);
            for (int r = 0; r < 6; ++r) {
                QVec row = conic_row(s[idx[static_cast<size_t>(r)]]);
                for (int c = 0; c < 6; ++c) m(r, c) = row[c];
            }
            return rank(m) <= 5;
        };
        auto for_each_subset = [&](const std::vector<int>& pool, int need, auto&& body) {
            std::vector<int> stack(static_cast<size_t>(need));
            auto rec_pick = [&](auto&& self, int start, int depth) -> bool {
                if (depth == need) return body(stack);
                for (int i = start; i < static_cast<int>(pool.size()); ++i) {
                    stack[static_cast<size_t>(depth)] = pool[static_cast<size_t>(i)];
                    if (self(self, i + 1, depth + 1)) return true;
                }
                return false;
            };
            return rec_pick(rec_pick, 0, 0);
        };
        for (int off_count = 4; off_count <= std::min(6, k) && !degenerate; ++off_count) {
            int ax_count = 6 - off_count;
            if (ax_count > on_line) continue;
            degenerate = for_each_subset(off_idx, off_count, [&](const std::vector<int>& off_pick) {
                return for_each_subset(axis_idx, ax_count, [&](const std::vector<int>& ax_pick) {
                    std::array<int, 6> idx{};
                    for (int i = 0; i < off_count; ++i) idx[static_cast<size_t>(i)] = off_pick[static_cast<size_t>(i)];
                    for (int i = 0; i < ax_count; ++i) idx[static_cast<size_t>(off_count + i)] = ax_pick[static_cast<size_t>(i)];
                    return coconic6(idx);
                });
            });
        }
        if (degenerate) continue;
        return s;
    }
    throw InternalError("gen_line_plus: resample budget exhausted");
}

bool collinear_float(const FloatPoint2& a, const FloatPoint2& b, const FloatPoint2& c,
                     const EpsilonPolicy& eps) {
    // det [[ax ay 1][bx by 1][cx cy 1]] against the scale of its terms.
    BigFloat t1 = a.x * b.y, t2 = a.x * c.y, t3 = b.x * a.y;
    BigFloat t4 = b.x * c.y, t5 = c.x * a.y, t6 = c.x * b.y;
    BigFloat det = t1 - t2 - t3 + t4 + t5 - t6;
    BigFloat scale = abs(t1) + abs(t2) + abs(t3) + abs(t4) + abs(t5) + abs(t6);
    return abs(det) <= BigFloat(eps.residual_tolerance) * scale;
}

namespace {

std::array<BigFloat, 6> monomials_at(const FloatPoint2& p) {
    return {BigFloat(1), p.x, p.y, p.x * p.x, p.x * p.y, p.y * p.y};
}

// Full-pivot elimination on the 5x6 system; nullopt when a pivot falls
// under the tolerance (rank < 5, the subset fits a pencil).
std::optional<std::array<BigFloat, 6>> fit_conic_float(std::array<std::array<BigFloat, 6>, 5>& m,
                                                       const BigFloat& tol) {
    std::array<int, 6> colp{0, 1, 2, 3, 4, 5};
    for (int r = 0; r < 5; ++r) {
        BigFloat scale = 0;
        for (int c = 0; c < 6; ++c) scale = std::max(scale, BigFloat(abs(m[r][c])), std::less<BigFloat>());
        if (scale == 0) return std::nullopt;
        for (int c = 0; c < 6; ++c) m[r][c] /= scale;
    }
    for (int step = 0; step < 5; ++step) {
        int pr = step, pc = step;
        BigFloat best = -1;
        for (int i = step; i < 5; ++i)
            for (int j = step; j < 6; ++j) {
                BigFloat v = abs(m[i][colp[j]]);
                if (v > best) best = v, pr = i, pc = j;
            }
        if (best < tol) return std::nullopt;
        std::swap(m[step], m[pr]);
        std::swap(colp[step], colp[pc]);
        for (int i = step + 1; i < 5; ++i) {
            BigFloat f = m[i][colp[step]] / m[step][colp[step]];
            for (int j = step; j < 6; ++j) m[i][colp[j]] -= f * m[step][colp[j]];
        }
    }
    std::array<BigFloat, 6> vp;
    vp[5] = 1;
    for (int i = 4; i >= 0; --i) {
        BigFloat acc = 0;
        for (int j = i + 1; j < 6; ++j) acc += m[i][colp[j]] * vp[j];
        vp[i] = -acc / m[i][colp[i]];
    }
    std::array<BigFloat, 6> v;
    BigFloat vmax = 0;
    for (int j = 0; j < 6; ++j) {
        v[colp[j]] = vp[j];
        vmax = std::max(vmax, BigFloat(abs(vp[j])), std::less<BigFloat>());
    }
    for (auto& x : v) x /= vmax;
    return v;
}

} // namespace

std::vector<FloatConicRecord> enumerate_ordinary_conics_float(const std::vector<FloatPoint2>& points,
                                                              const EpsilonPolicy& eps) {
    const int n = static_cast<int>(points.size());
    if (n < 5) throw PreconditionError("enumerate_ordinary_conics_float: need at least 5 points");
    unsigned digits = points[0].x.precision();
    PrecisionGuard guard(static_cast<unsigned>(digits / 0.30103) + 8);
    const BigFloat tol = BigFloat(eps.residual_tolerance);

    std::vector<std::array<BigFloat, 6>> rows;
    rows.reserve(static_cast<size_t>(n));
    for (const auto& p : points) rows.push_back(monomials_at(p));

    std::vector<FloatConicRecord> out;
    std::array<int, 5> sub{0, 1, 2, 3, 4};
    while (true) {
        std::array<std::array<BigFloat, 6>, 5> m;
        for (int i = 0; i < 5; ++i) m[static_cast<size_t>(i)] = rows[static_cast<size_t>(sub[static_cast<size_t>(i)])];
        if (auto fit = fit_conic_float(m, tol)) {
            bool extra = false;
            for (int p = 0; p < n && !extra; ++p) {
                if (std::find(sub.begin(), sub.end(), p) != sub.end()) continue;
                BigFloat res = 0, scale = 0;
                for (int j = 0; j < 6; ++j) {
                    BigFloat term = (*fit)[static_cast<size_t>(j)] * rows[static_cast<size_t>(p)][static_cast<size_t>(j)];
                    res += term;
                    scale += abs(term);
                }
                extra = abs(res) <= tol * scale;
            }
            if (!extra) out.push_back(FloatConicRecord{sub});
        }
        // next lexicographic 5-subset
        int i = 4;
        while (i >= 0 && sub[static_cast<size_t>(i)] == n - (5 - i)) --i;
        if (i < 0) break;
        ++sub[static_cast<size_t>(i)];
        for (int j = i + 1; j < 5; ++j) sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace ordconic
