#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ordconic/points.hpp"

namespace ordconic {

/// Primitive integer line Ax + By + C = 0, gcd(A,B,C) = 1, first nonzero of
/// (A,B,C) positive. Canonical, so usable as a dedup/hash key.
struct LineKey {
    Integer a, b, c;

    friend bool operator==(const LineKey&, const LineKey&) = default;
    friend bool operator<(const LineKey& l, const LineKey& r) {
        int t = cmp(l.a, r.a);
        if (t != 0) return t < 0;
        t = cmp(l.b, r.b);
        if (t != 0) return t < 0;
        return cmp(l.c, r.c) < 0;
    }
};

LineKey line_through(const Point2& p, const Point2& q);
bool line_contains(const LineKey& l, const Point2& p);

/// A spanned line together with the indices of every set point on it.
struct LineRecord {
    LineKey line;
    std::vector<int> member_indices;  // sorted
};

/// Multiplicity statistics of the spanned lines: T lines total, N_k lines
/// with exactly k points.
struct LineProfile {
    std::int64_t total_lines = 0;
    std::map<int, std::int64_t> multiplicity_counts;
    bool collinear = false;
    /// N_2 - 3 - sum_{k>=4} (k-3) N_k; Melchior's inequality says this is
    /// >= 0 for non-collinear sets. Meaningless when collinear is set.
    std::int64_t melchior_slack = 0;
};

/// Every line spanned by at least two points, with full membership, sorted
/// by member_indices. Requires |s| >= 2.
std::vector<LineRecord> enumerate_lines(const PointSet& s);

LineProfile line_profile(const PointSet& s);
LineProfile line_profile(const std::vector<LineRecord>& lines, int n_points);

/// The 2-point lines whose equation is satisfied by no point of `avoid`
/// (avoid points need not belong to s).
std::vector<LineRecord> ordinary_lines(const PointSet& s, const std::vector<Point2>& avoid);

/// Lexicographically smallest point of s lying on at least two lines that
/// each carry two or three points of s. nullopt only for collinear sets.
std::optional<Point2> double_ordinary_point(const PointSet& s);

/// Exact count of unordered non-collinear triples:
/// C(n,3) - sum_l C(p_l, 3). Requires |s| >= 3.
Integer noncollinear_triples(const PointSet& s);

} // namespace ordconic
