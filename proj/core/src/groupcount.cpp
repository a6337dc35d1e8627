#include "ordconic/groupcount.hpp"

#include <atomic>

#include "ordconic/errors.hpp"
#include "ordconic/parallel.hpp"

namespace ordconic {

CyclicCountReport count_cyclic(int n, int threads) {
    if (n < 5) throw PreconditionError("count_cyclic: need n >= 5");
    std::vector<std::uint64_t> per_first(static_cast<size_t>(n), 0);
    // Parallel over the smallest element; totals are exact integer sums, so
    // the result is independent of the chunking.
    parallel_chunks(static_cast<std::uint64_t>(n), threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (int i1 = static_cast<int>(lo); i1 < static_cast<int>(hi); ++i1) {
            std::uint64_t local = 0;
            for (int i2 = i1 + 1; i2 < n; ++i2)
                for (int i3 = i2 + 1; i3 < n; ++i3)
                    for (int i4 = i3 + 1; i4 < n; ++i4) {
                        const int partial = i1 + i2 + i3 + i4;
                        for (int i5 = i4 + 1; i5 < n; ++i5) {
                            const int m = (n - (partial + i5) % n) % n;
                            local += static_cast<std::uint64_t>(m == i1 || m == i2 || m == i3 || m == i4 || m == i5);
                        }
                    }
            per_first[static_cast<size_t>(i1)] = local;
        }
    });
    CyclicCountReport rep;
    rep.n = n;
    for (std::uint64_t c : per_first) rep.count += c;
    return rep;
}

CyclicCountReport count_conic_line(int n, int threads) {
    if (n < 3) throw PreconditionError("count_conic_line: need n >= 3");

    // type1: one line point a (tangency doubles it) and four conic points.
    std::vector<std::uint64_t> t1(static_cast<size_t>(n), 0);
    parallel_chunks(static_cast<std::uint64_t>(n), threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (int a = static_cast<int>(lo); a < static_cast<int>(hi); ++a) {
            std::uint64_t local = 0;
            for (int b = 0; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        const int partial = 2 * a + b + c + d;
                        for (int e = d + 1; e < n; ++e)
                            local += static_cast<std::uint64_t>((partial + e) % n == 0);
                    }
            t1[static_cast<size_t>(a)] = local;
        }
    });

    // type2: two line points, one doubled (tangent) conic point r, two more
    // conic points distinct from r.
    std::vector<std::uint64_t> t2(static_cast<size_t>(n), 0);
    parallel_chunks(static_cast<std::uint64_t>(n), threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (int a1 = static_cast<int>(lo); a1 < static_cast<int>(hi); ++a1) {
            std::uint64_t local = 0;
            for (int a2 = a1 + 1; a2 < n; ++a2)
                for (int r = 0; r < n; ++r) {
                    const int partial = a1 + a2 + 2 * r;
                    for (int st = 0; st < n; ++st) {
                        if (st == r) continue;
                        for (int tt = st + 1; tt < n; ++tt) {
                            if (tt == r) continue;
                            local += static_cast<std::uint64_t>((partial + st + tt) % n == 0);
                        }
                    }
                }
            t2[static_cast<size_t>(a1)] = local;
        }
    });

    CyclicCountReport rep;
    rep.n = n;
    CyclicCountReport::Breakdown bd;
    for (std::uint64_t c : t1) bd.type1 += c;
    for (std::uint64_t c : t2) bd.type2 += c;
    rep.breakdown = bd;
    rep.count = bd.type1 + bd.type2;
    return rep;
}

bool coconic_predicate(const std::vector<std::pair<int, int>>& weighted_indices, int n) {
    if (n < 1) throw PreconditionError("coconic_predicate: need n >= 1");
    long total_mult = 0;
    long sum = 0;
    for (const auto& [idx, mult] : weighted_indices) {
        if (mult <= 0) throw PreconditionError("coconic_predicate: multiplicities must be positive");
        total_mult += mult;
        sum += static_cast<long>(((idx % n) + n) % n) * mult;
    }
    if (total_mult != 6) throw PreconditionError("coconic_predicate: total multiplicity must be 6");
    return sum % n == 0;
}

} // namespace ordconic
