#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "ordconic/rational.hpp"

namespace ordconic {

/// Dense rational matrix, row major. Sized for the toolkit's workloads
/// (ambient dimension at most 6, a handful of rows per point).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix from_rows(const std::vector<QVec>& rows);
    static Matrix from_columns(const std::vector<QVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    QVec row(int r) const;
    Matrix transposed() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form computed in place. Returns the pivot columns
/// (their count is the rank). Exact rational Gauss-Jordan; the contract is
/// exactness, not the elimination strategy.
std::vector<int> rref(Matrix& m);

int rank(const Matrix& m);

/// Basis of the right nullspace, each vector scaled to a primitive integer
/// vector (gcd 1, first nonzero coordinate positive). Size is always
/// cols - rank.
std::vector<QVec> nullspace(const Matrix& m);

/// Solves m x = rhs. Returns one solution, or nullopt if inconsistent.
std::optional<QVec> solve(const Matrix& m, const QVec& rhs);

/// Affine subspace of R^d (2 <= d <= 6): a base point plus linearly
/// independent direction vectors. dim() is the number of directions.
class Flat {
public:
    Flat(QVec base, std::vector<QVec> directions);

    int ambient_dim() const { return static_cast<int>(base_.size()); }
    int dim() const { return static_cast<int>(dirs_.size()); }
    const QVec& base() const { return base_; }
    const std::vector<QVec>& directions() const { return dirs_; }

    /// The points spanning the flat: base and base + each direction.
    std::vector<QVec> spanning_points() const;

    /// Coefficient rows (c_1..c_d | c_0) of a complete implicit system
    /// c . x = c_0; computed on demand from the parametric form.
    std::vector<QVec> implicit_equations() const;

private:
    QVec base_;
    std::vector<QVec> dirs_;
};

/// Affine hull of a nonempty list of points with a common ambient dimension.
Flat flat_span(const std::vector<QVec>& points);

/// Flat extended by one additional point (no-op if already contained).
Flat flat_extend(const Flat& f, const QVec& p);

/// Exact intersection of two flats in the same ambient space; nullopt when
/// they do not meet.
std::optional<Flat> flat_intersect(const Flat& a, const Flat& b);

bool flat_contains(const Flat& f, const QVec& p);

} // namespace ordconic
