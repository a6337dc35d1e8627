#include "ordconic/incidence.hpp"

#include <algorithm>
#include <set>

#include "ordconic/errors.hpp"

namespace ordconic {

PointSet::PointSet(std::vector<Point2> points, std::optional<std::vector<std::string>> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    if (labels_ && labels_->size() != points_.size())
        throw PreconditionError("point set: label count differs from point count");
    std::vector<Point2> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("point set: points must be pairwise distinct");
}

LineKey line_through(const Point2& p, const Point2& q) {
    if (p == q) throw PreconditionError("line_through: coincident points");
    QVec abc{q.y - p.y, p.x - q.x, Rational(0)};
    abc[2] = -(abc[0] * p.x + abc[1] * p.y);
    QVec prim = primitive_integer_vector(abc);
    return LineKey{prim[0].get_num(), prim[1].get_num(), prim[2].get_num()};
}

bool line_contains(const LineKey& l, const Point2& p) {
    return Rational(l.a) * p.x + Rational(l.b) * p.y + Rational(l.c) == 0;
}

std::vector<LineRecord> enumerate_lines(const PointSet& s) {
    if (s.size() < 2) throw PreconditionError("enumerate_lines: need at least 2 points");
    std::map<LineKey, std::set<int>> lines;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) {
            auto& members = lines[line_through(s[i], s[j])];
            members.insert(i);
            members.insert(j);
        }
    std::vector<LineRecord> out;
    out.reserve(lines.size());
    for (auto& [key, members] : lines)
        out.push_back(LineRecord{key, std::vector<int>(members.begin(), members.end())});
    std::sort(out.begin(), out.end(),
              [](const LineRecord& a, const LineRecord& b) { return a.member_indices < b.member_indices; });
    return out;
}

LineProfile line_profile(const std::vector<LineRecord>& lines, int n_points) {
    LineProfile prof;
    prof.total_lines = static_cast<std::int64_t>(lines.size());
    for (const auto& rec : lines) ++prof.multiplicity_counts[static_cast<int>(rec.member_indices.size())];
    prof.collinear = lines.size() == 1 && static_cast<int>(lines[0].member_indices.size()) == n_points;
    std::int64_t n2 = 0, heavy = 0;
    for (const auto& [k, nk] : prof.multiplicity_counts) {
        if (k == 2) n2 = nk;
        if (k >= 4) heavy += static_cast<std::int64_t>(k - 3) * nk;
    }
    prof.melchior_slack = n2 - 3 - heavy;
    return prof;
}

LineProfile line_profile(const PointSet& s) { return line_profile(enumerate_lines(s), s.size()); }

std::vector<LineRecord> ordinary_lines(const PointSet& s, const std::vector<Point2>& avoid) {
    std::vector<LineRecord> out;
    for (auto& rec : enumerate_lines(s)) {
        if (rec.member_indices.size() != 2) continue;
        bool hit = std::any_of(avoid.begin(), avoid.end(),
                               [&](const Point2& p) { return line_contains(rec.line, p); });
        if (!hit) out.push_back(std::move(rec));
    }
    return out;
}

std::optional<Point2> double_ordinary_point(const PointSet& s) {
    if (s.size() < 3) throw PreconditionError("double_ordinary_point: need at least 3 points");
    auto lines = enumerate_lines(s);
    if (line_profile(lines, s.size()).collinear) return std::nullopt;
    std::vector<int> small_line_count(s.size(), 0);
    for (const auto& rec : lines) {
        size_t k = rec.member_indices.size();
        if (k == 2 || k == 3)
            for (int i : rec.member_indices) ++small_line_count[i];
    }
    std::optional<Point2> best;
    for (int i = 0; i < s.size(); ++i)
        if (small_line_count[i] >= 2 && (!best || s[i] < *best)) best = s[i];
    if (!best)
        throw InternalError("double_ordinary_point: non-collinear set without a point on two small lines");
    return best;
}

Integer noncollinear_triples(const PointSet& s) {
    if (s.size() < 3) throw PreconditionError("noncollinear_triples: need at least 3 points");
    auto choose3 = [](const Integer& n) -> Integer { return n * (n - 1) * (n - 2) / 6; };
    Integer total = choose3(s.size());
    for (const auto& rec : enumerate_lines(s)) total -= choose3(static_cast<long>(rec.member_indices.size()));
    return total;
}

} // namespace ordconic
