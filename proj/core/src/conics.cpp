#include "ordconic/conics.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ordconic/errors.hpp"
#include "ordconic/incidence.hpp"
#include "ordconic/parallel.hpp"

namespace ordconic {

const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::irreducible: return "irreducible";
        case ConicClass::two_lines: return "two_lines";
        case ConicClass::double_line: return "double_line";
        case ConicClass::pointlike_or_empty: return "pointlike_or_empty";
    }
    return "?";
}

QVec conic_row(const Point2& p) {
    return {Rational(1), p.x, p.y, p.x * p.x, p.x * p.y, p.y * p.y};
}

ConicClass classify_conic(const std::array<Integer, 6>& a) {
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
        throw PreconditionError("classify_conic: zero coefficient vector");
    // Doubled symmetric matrix of the homogenized form, to stay in integers:
    // 2M = [[2a3, a4, a1], [a4, 2a5, a2], [a1, a2, 2a0]].
    const Integer m00 = 2 * a[3], m01 = a[4], m02 = a[1];
    const Integer m11 = 2 * a[5], m12 = a[2], m22 = 2 * a[0];
    const Integer det2 = m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
                         m02 * (m01 * m12 - m11 * m02);
    Matrix m(3, 3);
    m(0, 0) = m00, m(0, 1) = m01, m(0, 2) = m02;
    m(1, 0) = m01, m(1, 1) = m11, m(1, 2) = m12;
    m(2, 0) = m02, m(2, 1) = m12, m(2, 2) = m22;
    const int r = rank(m);
    if (r == 1) return ConicClass::double_line;
    if (r == 2) {
        // Nonzero eigenvalue product = sum of principal 2x2 minors;
        // opposite signs give a real line pair, equal signs a single point.
        const Integer e2 = (m00 * m11 - m01 * m01) + (m00 * m22 - m02 * m02) + (m11 * m22 - m12 * m12);
        return e2 < 0 ? ConicClass::two_lines : ConicClass::pointlike_or_empty;
    }
    // Rank 3: definite forms have empty real zero sets, indefinite ones are
    // irreducible real conics.
    const Integer d1 = m00, d2 = m00 * m11 - m01 * m01;
    const bool pos_def = d1 > 0 && d2 > 0 && det2 > 0;
    const bool neg_def = d1 < 0 && d2 > 0 && det2 < 0;
    return (pos_def || neg_def) ? ConicClass::pointlike_or_empty : ConicClass::irreducible;
}

Conic make_conic(const std::array<Integer, 6>& coeffs) {
    QVec v(coeffs.begin(), coeffs.end());
    QVec prim = primitive_integer_vector(v);
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = prim[i].get_num();
    return Conic{c, classify_conic(c)};
}

static Conic conic_from_primitive(const QVec& prim) {
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = prim[i].get_num();
    return Conic{c, classify_conic(c)};
}

ConicFit fit_conic(const std::array<Point2, 5>& pts) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (pts[i] == pts[j]) throw PreconditionError("fit_conic: points must be pairwise distinct");
    Matrix m(5, 6);
    for (int i = 0; i < 5; ++i) {
        QVec row = conic_row(pts[i]);
        for (int j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    auto basis = nullspace(m);
    if (basis.size() == 1) return ConicFit{ConicFit::Kind::unique, conic_from_primitive(basis[0]), 0};
    return ConicFit{ConicFit::Kind::pencil, std::nullopt, static_cast<int>(basis.size())};
}

bool conic_contains(const Conic& c, const Point2& p) {
    Rational v = Rational(c.coeffs[0]) + Rational(c.coeffs[1]) * p.x + Rational(c.coeffs[2]) * p.y +
                 Rational(c.coeffs[3]) * p.x * p.x + Rational(c.coeffs[4]) * p.x * p.y +
                 Rational(c.coeffs[5]) * p.y * p.y;
    return v == 0;
}

std::optional<Conic> is_coconic(const PointSet& s) {
    if (s.size() < 1) throw PreconditionError("is_coconic: empty set");
    Matrix m(s.size(), 6);
    for (int i = 0; i < s.size(); ++i) {
        QVec row = conic_row(s[i]);
        for (int j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    auto basis = nullspace(m);
    if (basis.empty()) return std::nullopt;
    return conic_from_primitive(basis[0]);
}

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Lexicographic 5-subset with the given rank (combinatorial number system).
std::array<int, 5> unrank_5subset(std::uint64_t rank_idx, int n) {
    std::array<int, 5> sub{};
    int next = 0;
    for (int pos = 0; pos < 5; ++pos) {
        for (int v = next;; ++v) {
            std::uint64_t block = choose(static_cast<std::uint64_t>(n - 1 - v), static_cast<std::uint64_t>(4 - pos));
            if (rank_idx < block) {
                sub[pos] = v;
                next = v + 1;
                break;
            }
            rank_idx -= block;
        }
    }
    return sub;
}

bool next_5subset(std::array<int, 5>& sub, int n) {
    for (int i = 4; i >= 0; --i) {
        if (sub[i] < n - (5 - i)) {
            ++sub[i];
            for (int j = i + 1; j < 5; ++j) sub[j] = sub[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<ConicRecord> enumerate_ordinary_conics(const PointSet& s, const EnumerateOptions& opt) {
    if (s.size() < 5) throw PreconditionError("enumerate_ordinary_conics: need at least 5 points");
    const int n = s.size();

    std::vector<QVec> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = conic_row(s[i]);

    // Lines with >= 4 points: a 5-subset containing 4 of them fits a pencil
    // (rank <= 4), so it can be skipped without changing the output.
    std::vector<std::vector<int>> heavy_lines;
    if (opt.prune)
        for (auto& rec : enumerate_lines(s))
            if (rec.member_indices.size() >= 4) heavy_lines.push_back(std::move(rec.member_indices));

    const std::uint64_t total = choose(static_cast<std::uint64_t>(n), 5);
    const int threads = opt.threads < 1 ? 1 : opt.threads;
    std::vector<std::vector<ConicRecord>> partial(static_cast<size_t>(std::max(threads, 1)));

    parallel_chunks(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        auto& out = partial[static_cast<size_t>(chunk)];
        if (begin >= end) return;
        std::array<int, 5> sub = unrank_5subset(begin, n);
        for (std::uint64_t idx = begin; idx < end; ++idx, next_5subset(sub, n)) {
            bool pruned = false;
            for (const auto& line : heavy_lines) {
                int hit = 0;
                for (int v : sub) hit += static_cast<int>(std::binary_search(line.begin(), line.end(), v));
                if (hit >= 4) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;

            Matrix m(5, 6);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 6; ++j) m(i, j) = rows[static_cast<size_t>(sub[i])][j];
            auto basis = nullspace(m);
            if (basis.size() != 1) continue;
            Conic conic = conic_from_primitive(basis[0]);

            bool extra = false;
            for (int k = 0; k < n && !extra; ++k) {
                if (std::find(sub.begin(), sub.end(), k) != sub.end()) continue;
                extra = conic_contains(conic, s[k]);
            }
            if (extra) continue;
            out.push_back(ConicRecord{std::move(conic), sub});
        }
    });

    std::vector<ConicRecord> result;
    for (auto& part : partial)
        for (auto& rec : part) result.push_back(std::move(rec));
    // Chunks are consumed in order and each is lex-enumerated, so the
    // concatenation is already sorted by member_indices.
#ifndef NDEBUG
    std::set<std::array<Integer, 6>> keys;
    for (const auto& rec : result) assert(keys.insert(rec.conic.coeffs).second && "duplicate ordinary conic key");
    assert(std::is_sorted(result.begin(), result.end(), [](const ConicRecord& a, const ConicRecord& b) {
        return a.member_indices < b.member_indices;
    }));
#endif
    return result;
}

bool verify_ordinary_conic(const PointSet& s, const ConicRecord& rec) {
    std::array<Point2, 5> pts;
    for (int i = 0; i < 5; ++i) {
        int idx = rec.member_indices[static_cast<size_t>(i)];
        if (idx < 0 || idx >= s.size()) return false;
        pts[static_cast<size_t>(i)] = s[idx];
    }
    ConicFit fit = fit_conic(pts);
    if (fit.kind != ConicFit::Kind::unique || !(*fit.conic == rec.conic)) return false;
    int on = 0;
    for (int i = 0; i < s.size(); ++i) on += static_cast<int>(conic_contains(rec.conic, s[i]));
    return on == 5;
}

} // namespace ordconic
