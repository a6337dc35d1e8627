#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordconic/points.hpp"
#include "ordconic/qlinalg.hpp"

namespace ordconic {

enum class ConicClass { irreducible, two_lines, double_line, pointlike_or_empty };

const char* to_string(ConicClass c);

/// Conic a0 + a1 x + a2 y + a3 x^2 + a4 xy + a5 y^2 = 0 with canonical
/// primitive integer coefficients (gcd 1, first nonzero positive).
struct Conic {
    std::array<Integer, 6> coeffs;
    ConicClass cls;

    friend bool operator==(const Conic& l, const Conic& r) { return l.coeffs == r.coeffs; }
    friend bool operator<(const Conic& l, const Conic& r) { return l.coeffs < r.coeffs; }
};

struct ConicFit {
    enum class Kind { unique, pencil, underdetermined };
    Kind kind;
    std::optional<Conic> conic;  // set iff unique
    int pencil_dim = 0;          // set iff pencil
};

/// An ordinary conic: exactly these five points of the set lie on it and
/// they determine it uniquely.
struct ConicRecord {
    Conic conic;
    std::array<int, 5> member_indices;  // sorted
};

/// Veronese coefficient row (1, x, y, x^2, xy, y^2) of a point.
QVec conic_row(const Point2& p);

/// Fits the pencil of conics through five pairwise-distinct points:
/// unique when the 5x6 coefficient matrix has rank 5, else
/// pencil(6 - rank).
ConicFit fit_conic(const std::array<Point2, 5>& pts);

/// Classification by rank and signature of the symmetric matrix of the
/// homogenized quadratic form.
ConicClass classify_conic(const std::array<Integer, 6>& coeffs);

/// Builds the canonical Conic from an integer coefficient vector
/// (normalizes and classifies).
Conic make_conic(const std::array<Integer, 6>& coeffs);

bool conic_contains(const Conic& c, const Point2& p);

/// Some conic through all points of s (any primitive nullspace vector) when
/// the points are co-conic, nullopt otherwise.
std::optional<Conic> is_coconic(const PointSet& s);

struct EnumerateOptions {
    int threads = 1;
    /// Skip 5-subsets with 4 collinear points (they fit a pencil, never an
    /// ordinary conic). Must not change the output; exposed for testing.
    bool prune = true;
};

/// Brute force over all 5-subsets: every subset with a unique fit whose
/// conic contains no sixth point of s yields one record. Sorted by
/// member_indices; deterministic for any thread count.
std::vector<ConicRecord> enumerate_ordinary_conics(const PointSet& s, const EnumerateOptions& opt = {});

/// Re-check of a single record against the full set: unique fit and
/// exactly-5 membership by direct evaluation.
bool verify_ordinary_conic(const PointSet& s, const ConicRecord& rec);

} // namespace ordconic
