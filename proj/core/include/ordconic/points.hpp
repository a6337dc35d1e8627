#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ordconic/rational.hpp"

namespace ordconic {

/// Exact point of the plane.
struct Point2 {
    Rational x, y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }

    QVec as_vector() const { return {x, y}; }
};

/// Exact point of the Veronese target space R^5.
using Point5 = std::array<Rational, 5>;

inline QVec as_vector(const Point5& p) { return QVec(p.begin(), p.end()); }

/// Finite planar point set; points are pairwise distinct, labels (when
/// present) parallel the points.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point2> points, std::optional<std::vector<std::string>> labels = std::nullopt);

    int size() const { return static_cast<int>(points_.size()); }
    const Point2& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
    const std::vector<Point2>& points() const { return points_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

private:
    std::vector<Point2> points_;
    std::optional<std::vector<std::string>> labels_;
};

} // namespace ordconic
