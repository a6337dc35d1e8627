#include <doctest.h>

#include <algorithm>

#include "ordconic/errors.hpp"
#include "ordconic/incidence.hpp"
#include "ordconic/rng.hpp"
#include "testutil.hpp"

using namespace ordconic;
namespace tu = ordconic::testutil;

namespace {

PointSet square() { return PointSet({tu::pt(0, 0), tu::pt(1, 0), tu::pt(0, 1), tu::pt(1, 1)}); }

PointSet axis_plus_one() { return PointSet({tu::pt(0, 0), tu::pt(1, 0), tu::pt(2, 0), tu::pt(0, 1)}); }

Integer choose2(long n) { return Integer(n) * (n - 1) / 2; }

} // namespace

TEST_SUITE("incidence") {

TEST_CASE("enumerate_lines: two points, square, three collinear plus one") {
    PointSet two({tu::pt(0, 0), tu::pt(5, 7)});
    auto l2 = enumerate_lines(two);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].member_indices == std::vector<int>{0, 1});

    auto ls = enumerate_lines(square());
    CHECK(ls.size() == 6);
    for (const auto& rec : ls) CHECK(rec.member_indices.size() == 2);

    auto la = enumerate_lines(axis_plus_one());
    REQUIRE(la.size() == 4);
    int threes = 0, twos = 0;
    for (const auto& rec : la) {
        if (rec.member_indices.size() == 3) ++threes;
        if (rec.member_indices.size() == 2) ++twos;
    }
    CHECK(threes == 1);
    CHECK(twos == 3);
}

TEST_CASE("line records: members satisfy the equation, keys are primitive") {
    Rng rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        PointSet s = tu::random_grid_set(rng, 8, 6);
        for (const auto& rec : enumerate_lines(s)) {
            CHECK(rec.member_indices.size() >= 2);
            CHECK(!(rec.line.a == 0 && rec.line.b == 0));
            Integer g = gcd(gcd(rec.line.a, rec.line.b), rec.line.c);
            CHECK(g == 1);
            for (int i : rec.member_indices) CHECK(line_contains(rec.line, s[i]));
            // membership is complete
            for (int i = 0; i < s.size(); ++i)
                if (line_contains(rec.line, s[i]))
                    CHECK(std::binary_search(rec.member_indices.begin(), rec.member_indices.end(), i));
        }
    }
}

TEST_CASE("line_profile: square, axis plus one, collinear flag") {
    LineProfile ps = line_profile(square());
    CHECK(ps.total_lines == 6);
    CHECK(ps.multiplicity_counts.at(2) == 6);
    CHECK(ps.melchior_slack == 3);
    CHECK(!ps.collinear);

    LineProfile pa = line_profile(axis_plus_one());
    CHECK(pa.total_lines == 4);
    CHECK(pa.multiplicity_counts.at(2) == 3);
    CHECK(pa.multiplicity_counts.at(3) == 1);

    Rng rng(5);
    LineProfile pc = line_profile(tu::random_collinear_set(rng, 6));
    CHECK(pc.collinear);
    CHECK(pc.total_lines == 1);
}

TEST_CASE("pair-count identity on random sets") {
    Rng rng(17);
    for (int iter = 0; iter < 20; ++iter) {
        int n = static_cast<int>(rng.range(2, 16));
        PointSet s = iter % 2 ? tu::random_grid_set(rng, std::max(n, 3), 7) : tu::random_point_set(rng, n);
        Integer pairs = 0;
        for (const auto& rec : enumerate_lines(s)) pairs += choose2(static_cast<long>(rec.member_indices.size()));
        CHECK(pairs == choose2(s.size()));
    }
}

TEST_CASE("Melchior, De Bruijn-Erdos, Kelly-Moser on random non-collinear sets") {
    Rng rng(29);
    for (int iter = 0; iter < 25; ++iter) {
        int n = static_cast<int>(rng.range(4, 14));
        PointSet s = tu::random_grid_set(rng, n, 8);
        auto lines = enumerate_lines(s);
        LineProfile prof = line_profile(lines, s.size());
        REQUIRE(!prof.collinear);
        CHECK(prof.melchior_slack >= 0);
        CHECK(prof.total_lines >= s.size());
        std::int64_t ordinary = prof.multiplicity_counts.count(2) ? prof.multiplicity_counts.at(2) : 0;
        CHECK(ordinary * 7 >= 3 * s.size());
    }
}

TEST_CASE("ordinary_lines: square, axis plus one, avoid filters") {
    CHECK(ordinary_lines(square(), {}).size() == 6);

    auto oa = ordinary_lines(axis_plus_one(), {});
    REQUIRE(oa.size() == 3);
    for (const auto& rec : oa) CHECK(line_contains(rec.line, tu::pt(0, 1)));  // all pass through (0,1)

    // near-collinear-free set with one avoided point still has an ordinary line
    PointSet s({tu::pt(0, 0), tu::pt(1, 0), tu::pt(2, 0), tu::pt(0, 1), tu::pt(1, 1)});
    auto avoided = ordinary_lines(s, {tu::pt(0, 0)});
    CHECK(!avoided.empty());
    for (const auto& rec : avoided) CHECK(!line_contains(rec.line, tu::pt(0, 0)));
}

TEST_CASE("ordinary line avoiding any single point exists (non-near-collinear sets)") {
    Rng rng(59);
    int tested = 0;
    while (tested < 15) {
        int n = static_cast<int>(rng.range(6, 12));
        PointSet s = tu::random_grid_set(rng, n, 7);
        if (tu::near_collinear(s.points())) continue;
        ++tested;
        Point2 avoid = tested % 2 ? s[static_cast<int>(rng.range(0, s.size() - 1))]
                                  : Point2{tu::rnd_rational(rng, 9, 2), tu::rnd_rational(rng, 9, 2)};
        CHECK(!ordinary_lines(s, {avoid}).empty());
    }
}

TEST_CASE("double_ordinary_point: collinear, axis plus one, square") {
    Rng rng(2);
    CHECK(!double_ordinary_point(tu::random_collinear_set(rng, 3)));
    CHECK(double_ordinary_point(axis_plus_one()) == tu::pt(0, 0));
    CHECK(double_ordinary_point(square()) == tu::pt(0, 0));
}

TEST_CASE("noncollinear_triples: collinear, axis plus one, square, random oracle") {
    Rng rng(97);
    CHECK(noncollinear_triples(tu::random_collinear_set(rng, 5)) == 0);
    CHECK(noncollinear_triples(axis_plus_one()) == 3);
    CHECK(noncollinear_triples(square()) == 4);

    for (int iter = 0; iter < 15; ++iter) {
        PointSet s = tu::random_grid_set(rng, static_cast<int>(rng.range(3, 12)), 6);
        Integer direct = 0;
        for (int i = 0; i < s.size(); ++i)
            for (int j = i + 1; j < s.size(); ++j)
                for (int k = j + 1; k < s.size(); ++k)
                    if (!tu::collinear(s[i], s[j], s[k])) ++direct;
        CHECK(noncollinear_triples(s) == direct);
    }
}

TEST_CASE("triple-count lower bound from the maximum line multiplicity") {
    Rng rng(101);
    for (int iter = 0; iter < 15; ++iter) {
        PointSet s = tu::random_grid_set(rng, static_cast<int>(rng.range(4, 14)), 7);
        long pmax = 0;
        for (const auto& rec : enumerate_lines(s))
            pmax = std::max(pmax, static_cast<long>(rec.member_indices.size()));
        // 3 T >= (n - pmax) C(n,2), exact integers
        CHECK(3 * noncollinear_triples(s) >= Integer(s.size() - pmax) * choose2(s.size()));
    }
}

TEST_CASE("duplicate points are rejected") {
    CHECK_THROWS_AS(PointSet({tu::pt(1, 1), tu::pt(1, 1)}), PreconditionError);
}

} // TEST_SUITE
