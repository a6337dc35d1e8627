#include "ordconic/qlinalg.hpp"

#include <algorithm>

#include "ordconic/errors.hpp"

namespace ordconic {

QVec primitive_integer_vector(const QVec& v) {
    Integer den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer num_gcd = 0;
    for (const auto& x : v) {
        Integer n = x.get_num() * (den_lcm / x.get_den());
        num_gcd = gcd(num_gcd, n);
        ints.push_back(std::move(n));
    }
    if (num_gcd == 0) return v;  // zero vector
    int lead = 0;
    for (const auto& n : ints) {
        if (n != 0) {
            lead = sgn(n);
            break;
        }
    }
    if (lead < 0) num_gcd = -num_gcd;
    QVec out;
    out.reserve(v.size());
    for (auto& n : ints) out.emplace_back(n / num_gcd);
    return out;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged matrix initializer");
        for (long x : r) a_.emplace_back(x);
    }
}

Matrix Matrix::from_rows(const std::vector<QVec>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw PreconditionError("ragged row list");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<QVec>& cols) {
    Matrix m(cols.empty() ? 0 : static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows()) throw PreconditionError("ragged column list");
        for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

QVec Matrix::row(int r) const {
    QVec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Matrix& m) {
    Matrix w = m;
    return static_cast<int>(rref(w).size());
}

std::vector<QVec> nullspace(const Matrix& m) {
    Matrix w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(m.cols(), Rational(0));
        v[fc] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -w(static_cast<int>(pr), fc);
        basis.push_back(primitive_integer_vector(v));
    }
    return basis;
}

std::optional<QVec> solve(const Matrix& m, const QVec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw PreconditionError("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
    QVec x(m.cols(), Rational(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug(static_cast<int>(pr), m.cols());
    return x;
}

Flat::Flat(QVec base, std::vector<QVec> directions) : base_(std::move(base)), dirs_(std::move(directions)) {
    int d = static_cast<int>(base_.size());
    if (d < 2 || d > 6) throw PreconditionError("flat: ambient dimension must be in 2..6");
    for (const auto& v : dirs_)
        if (static_cast<int>(v.size()) != d) throw PreconditionError("flat: direction dimension mismatch");
    if (!dirs_.empty() && rank(Matrix::from_columns(dirs_)) != static_cast<int>(dirs_.size()))
        throw PreconditionError("flat: directions are linearly dependent");
}

std::vector<QVec> Flat::spanning_points() const {
    std::vector<QVec> pts{base_};
    for (const auto& d : dirs_) {
        QVec p = base_;
        for (size_t i = 0; i < p.size(); ++i) p[i] += d[i];
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<QVec> Flat::implicit_equations() const {
    // Normals are the nullspace of the direction matrix (as rows); each
    // equation is n . x = n . base.
    std::vector<QVec> eqs;
    Matrix dm = dirs_.empty() ? Matrix(1, ambient_dim()) : Matrix::from_rows(dirs_);
    for (const auto& n : nullspace(dm)) {
        Rational c0 = 0;
        for (int i = 0; i < ambient_dim(); ++i) c0 += n[i] * base_[i];
        QVec eq = n;
        eq.push_back(c0);
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

Flat flat_span(const std::vector<QVec>& points) {
    if (points.empty()) throw PreconditionError("flat_span: empty point list");
    const QVec& base = points[0];
    std::vector<QVec> dirs;
    Matrix probe(0, 0);
    for (size_t k = 1; k < points.size(); ++k) {
        if (points[k].size() != base.size()) throw PreconditionError("flat_span: mixed ambient dimensions");
        QVec d(base.size());
        for (size_t i = 0; i < base.size(); ++i) d[i] = points[k][i] - base[i];
        std::vector<QVec> cand = dirs;
        cand.push_back(d);
        if (rank(Matrix::from_rows(cand)) == static_cast<int>(cand.size())) dirs.push_back(std::move(d));
    }
    return Flat(base, std::move(dirs));
}

Flat flat_extend(const Flat& f, const QVec& p) {
    if (flat_contains(f, p)) return f;
    QVec d(p.size());
    for (size_t i = 0; i < p.size(); ++i) d[i] = p[i] - f.base()[i];
    std::vector<QVec> dirs = f.directions();
    dirs.push_back(std::move(d));
    return Flat(f.base(), std::move(dirs));
}

std::optional<Flat> flat_intersect(const Flat& a, const Flat& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw PreconditionError("flat_intersect: ambient dimension mismatch");
    const int d = a.ambient_dim();
    const int ka = a.dim(), kb = b.dim();

    // a.base + A s = b.base + B t  =>  [A | -B] (s,t) = b.base - a.base
    Matrix sys(d, ka + kb);
    for (int j = 0; j < ka; ++j)
        for (int i = 0; i < d; ++i) sys(i, j) = a.directions()[j][i];
    for (int j = 0; j < kb; ++j)
        for (int i = 0; i < d; ++i) sys(i, ka + j) = -b.directions()[j][i];
    QVec rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = b.base()[i] - a.base()[i];

    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;

    QVec point = a.base();
    for (int j = 0; j < ka; ++j)
        for (int i = 0; i < d; ++i) point[i] += (*sol)[j] * a.directions()[j][i];

    // Directions of the intersection: the s-parts of the homogeneous
    // solutions, pushed through A and reduced to an independent set.
    std::vector<QVec> dirs;
    for (const auto& h : nullspace(sys)) {
        QVec v(d, Rational(0));
        for (int j = 0; j < ka; ++j)
            for (int i = 0; i < d; ++i) v[i] += h[j] * a.directions()[j][i];
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
        if (zero) continue;
        std::vector<QVec> cand = dirs;
        cand.push_back(v);
        if (rank(Matrix::from_rows(cand)) == static_cast<int>(cand.size())) dirs.push_back(std::move(v));
    }
    return Flat(std::move(point), std::move(dirs));
}

bool flat_contains(const Flat& f, const QVec& p) {
    if (static_cast<int>(p.size()) != f.ambient_dim())
        throw PreconditionError("flat_contains: dimension mismatch");
    QVec diff(p.size());
    for (size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - f.base()[i];
    if (f.dim() == 0) return std::all_of(diff.begin(), diff.end(), [](const Rational& x) { return x == 0; });
    Matrix dm = Matrix::from_columns(f.directions());
    return solve(dm, diff).has_value();
}

} // namespace ordconic
