#include "ordconic/veronese.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "ordconic/errors.hpp"
#include "ordconic/incidence.hpp"
#include "ordconic/rng.hpp"

namespace ordconic {

Point5 veronese(const Point2& p) {
    return Point5{p.x, p.y, p.x * p.x, p.x * p.y, p.y * p.y};
}

const char* to_string(FindBranch b) {
    switch (b) {
        case FindBranch::three_point_line: return "three_point_line";
        case FindBranch::projected_double_point: return "projected_double_point";
        case FindBranch::projected_ordinary_triangle: return "projected_ordinary_triangle";
    }
    return "?";
}

Hyperprojection choose_generic_coflat(const Flat& P, const std::vector<Point5>& images, std::uint64_t seed) {
    if (P.ambient_dim() != 5 || P.dim() != 2)
        throw PreconditionError("choose_generic_coflat: P must be a 2-flat in R^5");
    for (const auto& x : images)
        if (flat_contains(P, as_vector(x)))
            throw PreconditionError("choose_generic_coflat: an image point lies in P");

    Rng rng(seed);
    std::string last_witness = "no candidate drawn";
    constexpr int kRetryBudget = 64;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        QVec base(5), d1(5), d2(5);
        for (int i = 0; i < 5; ++i) base[i] = rng.range(-9, 9);
        for (int i = 0; i < 5; ++i) d1[i] = rng.range(-9, 9);
        for (int i = 0; i < 5; ++i) d2[i] = rng.range(-9, 9);
        if (rank(Matrix::from_rows({d1, d2})) != 2) {
            last_witness = "degenerate direction pair";
            continue;
        }
        Flat Q(base, {d1, d2});
        if (flat_intersect(P, Q)) {
            last_witness = "candidate Q meets P";
            continue;
        }
        bool ok = true;
        for (size_t k = 0; k < images.size() && ok; ++k) {
            auto cut = flat_intersect(flat_extend(P, as_vector(images[k])), Q);
            if (!cut || cut->dim() != 0) {
                std::ostringstream w;
                w << "span(P, image " << k << ") cap Q is "
                  << (cut ? "positive-dimensional" : "empty");
                last_witness = w.str();
                ok = false;
            }
        }
        if (ok) return Hyperprojection{P, Q, {}};
    }
    throw RetryExhausted("choose_generic_coflat: retry budget exhausted; last failure: " + last_witness);
}

Point2 hyperproject(const Hyperprojection& h, const Point5& x) {
    QVec vx = as_vector(x);
    if (flat_contains(h.P, vx)) throw PreconditionError("hyperproject: point lies in P");
    auto cut = flat_intersect(flat_extend(h.P, vx), h.Q);
    if (!cut || cut->dim() != 0)
        throw InternalError("hyperproject: span(P, x) cap Q is not a single point");
    // Express the intersection point in Q's chart: solve base + u d1 + v d2.
    QVec rhs(5);
    for (int i = 0; i < 5; ++i) rhs[i] = cut->base()[i] - h.Q.base()[i];
    auto uv = solve(Matrix::from_columns(h.Q.directions()), rhs);
    if (!uv) throw InternalError("hyperproject: intersection point not in Q's chart");
    return Point2{(*uv)[0], (*uv)[1]};
}

namespace {

std::string index_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::optional<ConicRecord> try_candidate(const PointSet& s, std::array<int, 5> members) {
    std::sort(members.begin(), members.end());
    std::array<Point2, 5> pts;
    for (int i = 0; i < 5; ++i) pts[static_cast<size_t>(i)] = s[members[static_cast<size_t>(i)]];
    ConicFit fit = fit_conic(pts);
    if (fit.kind != ConicFit::Kind::unique) return std::nullopt;
    ConicRecord rec{*fit.conic, members};
    if (!verify_ordinary_conic(s, rec)) return std::nullopt;
    return rec;
}

Point2 midpoint(const Point2& a, const Point2& b) {
    return Point2{(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// Embeds the set, projects from the triple (p,q,r), and lifts an ordinary
// line of the projected set back to a verified conic. avoid_third: pass the
// image of the side qr through the ordinary-line avoid filter (the
// double-point branch; the triangle branch needs no avoiding).
std::optional<ConicRecord> project_and_lift(const PointSet& s, int pi, int qi, int ri, bool avoid_third,
                                            std::uint64_t seed, FindTrace& tr) {
    const Point2 &p = s[pi], &q = s[qi], &r = s[ri];
    Flat P = flat_span({as_vector(veronese(p)), as_vector(veronese(q)), as_vector(veronese(r))});
    if (P.dim() != 2) throw InternalError("project_and_lift: Veronese images of a triangle not a 2-flat");

    const std::array<Point2, 3> side_samples{midpoint(p, q), midpoint(p, r), midpoint(q, r)};
    std::vector<Point5> images;
    std::vector<int> source;  // original index, or -1 for side samples
    for (int i = 0; i < s.size(); ++i) {
        if (i == pi || i == qi || i == ri) continue;
        images.push_back(veronese(s[i]));
        source.push_back(i);
    }
    for (const auto& z : side_samples) {
        images.push_back(veronese(z));
        source.push_back(-1);
    }

    Hyperprojection h = choose_generic_coflat(P, images, seed);
    h.alpha_points = {
        {{pi, qi}, hyperproject(h, images[images.size() - 3])},
        {{pi, ri}, hyperproject(h, images[images.size() - 2])},
        {{qi, ri}, hyperproject(h, images[images.size() - 1])},
    };

    std::map<Point2, std::vector<int>> fibers;
    for (size_t k = 0; k < images.size(); ++k) {
        if (source[k] < 0) continue;
        fibers[hyperproject(h, images[k])].push_back(source[k]);
    }
    if (fibers.size() < 2) return std::nullopt;

    std::vector<Point2> projected;
    std::vector<std::vector<int>> preimages;
    for (auto& [img, idxs] : fibers) {
        projected.push_back(img);
        preimages.push_back(idxs);
    }
    std::vector<Point2> avoid;
    if (avoid_third) avoid.push_back(h.alpha_points[2].image);

    std::vector<std::array<int, 2>> lifted;
    for (const auto& rec : ordinary_lines(PointSet(projected), avoid)) {
        const auto& fa = preimages[static_cast<size_t>(rec.member_indices[0])];
        const auto& fb = preimages[static_cast<size_t>(rec.member_indices[1])];
        if (fa.size() != 1 || fb.size() != 1) continue;  // collapsed image, not liftable
        int a = fa[0], b = fb[0];
        lifted.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(lifted.begin(), lifted.end());
    for (const auto& [a, b] : lifted) {
        if (auto rec = try_candidate(s, {pi, qi, ri, a, b})) {
            tr.log.push_back("lifted ordinary line of the projected set to points {" + std::to_string(a) +
                             "," + std::to_string(b) + "}");
            return rec;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ConicRecord> project_and_lift_triple(const PointSet& s, const std::array<int, 3>& triple,
                                                   bool avoid_collapsed_side, std::uint64_t seed) {
    FindTrace scratch;
    return project_and_lift(s, triple[0], triple[1], triple[2], avoid_collapsed_side, seed, scratch);
}

ConicRecord find_ordinary_conic(const PointSet& s, std::uint64_t seed, FindTrace* trace) {
    if (s.size() < 6) throw PreconditionError("find_ordinary_conic: need at least 6 points");
    if (auto c = is_coconic(s)) throw PreconditionError("find_ordinary_conic: point set is contained in a conic");

    FindTrace local;
    FindTrace& tr = trace ? *trace : local;
    tr.log.clear();

    const auto lines = enumerate_lines(s);

    // Branch 1: a 3-point line joined with an ordinary line of the rest.
    for (const auto& rec : lines) {
        if (rec.member_indices.size() != 3) continue;
        std::vector<int> rest;
        std::vector<Point2> rest_pts;
        for (int i = 0; i < s.size(); ++i) {
            if (std::find(rec.member_indices.begin(), rec.member_indices.end(), i) != rec.member_indices.end())
                continue;
            rest.push_back(i);
            rest_pts.push_back(s[i]);
        }
        if (rest.size() < 2) continue;
        for (const auto& ord : ordinary_lines(PointSet(rest_pts), {})) {
            std::array<int, 5> members{rec.member_indices[0], rec.member_indices[1], rec.member_indices[2],
                                       rest[static_cast<size_t>(ord.member_indices[0])],
                                       rest[static_cast<size_t>(ord.member_indices[1])]};
            if (auto found = try_candidate(s, members)) {
                tr.branch = FindBranch::three_point_line;
                tr.log.push_back("three-point line " + index_list(rec.member_indices) +
                                 " joined with ordinary line {" + std::to_string(members[3]) + "," +
                                 std::to_string(members[4]) + "} of the residual set");
                return *found;
            }
        }
    }

    // Branch 2: project from a point on two 2-point lines.
    std::vector<std::vector<int>> partners(static_cast<size_t>(s.size()));
    for (const auto& rec : lines)
        if (rec.member_indices.size() == 2) {
            partners[static_cast<size_t>(rec.member_indices[0])].push_back(rec.member_indices[1]);
            partners[static_cast<size_t>(rec.member_indices[1])].push_back(rec.member_indices[0]);
        }
    int best = -1;
    for (int i = 0; i < s.size(); ++i) {
        if (partners[static_cast<size_t>(i)].size() < 2) continue;
        if (best < 0 || s[i] < s[best]) best = i;
    }
    if (best >= 0) {
        auto& ps = partners[static_cast<size_t>(best)];
        std::sort(ps.begin(), ps.end());
        if (auto found = project_and_lift(s, best, ps[0], ps[1], /*avoid_third=*/true, seed, tr)) {
            tr.branch = FindBranch::projected_double_point;
            tr.log.push_back("projected from triple {" + std::to_string(best) + "," + std::to_string(ps[0]) +
                             "," + std::to_string(ps[1]) + "} (two ordinary lines through the first point)");
            return *found;
        }
        tr.log.push_back("double-point projection from {" + std::to_string(best) + "," + std::to_string(ps[0]) +
                         "," + std::to_string(ps[1]) + "} found no liftable ordinary line");
    }

    // Branch 3: project from an ordinary triangle (all three sides are
    // 2-point lines).
    std::vector<std::vector<bool>> ord_pair(static_cast<size_t>(s.size()),
                                            std::vector<bool>(static_cast<size_t>(s.size()), false));
    for (const auto& rec : lines)
        if (rec.member_indices.size() == 2) {
            ord_pair[static_cast<size_t>(rec.member_indices[0])][static_cast<size_t>(rec.member_indices[1])] = true;
            ord_pair[static_cast<size_t>(rec.member_indices[1])][static_cast<size_t>(rec.member_indices[0])] = true;
        }
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) {
            if (!ord_pair[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            for (int k = j + 1; k < s.size(); ++k) {
                if (!ord_pair[static_cast<size_t>(i)][static_cast<size_t>(k)] ||
                    !ord_pair[static_cast<size_t>(j)][static_cast<size_t>(k)])
                    continue;
                if (auto found = project_and_lift(s, i, j, k, /*avoid_third=*/false, seed, tr)) {
                    tr.branch = FindBranch::projected_ordinary_triangle;
                    tr.log.push_back("projected from ordinary triangle {" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + "}");
                    return *found;
                }
            }
        }

    std::ostringstream os;
    os << "find_ordinary_conic: all branches failed on a non-co-conic set (this is a bug); trace:";
    for (const auto& line : tr.log) os << "\n  " << line;
    throw InternalError(os.str());
}

} // namespace ordconic
