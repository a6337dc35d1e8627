#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordconic/errors.hpp"
#include "ordconic/incidence.hpp"
#include "ordconic/rng.hpp"
#include "ordconic/veronese.hpp"
#include "testutil.hpp"

using namespace ordconic;
namespace tu = ordconic::testutil;

namespace {

QVec v(const Point2& p) { return as_vector(veronese(p)); }

std::vector<QVec> embed(const std::vector<Point2>& pts) {
    std::vector<QVec> out;
    for (const auto& p : pts) out.push_back(v(p));
    return out;
}

bool record_in(const std::vector<ConicRecord>& all, const ConicRecord& rec) {
    return std::any_of(all.begin(), all.end(), [&](const ConicRecord& r) {
        return r.member_indices == rec.member_indices && r.conic == rec.conic;
    });
}

} // namespace

TEST_SUITE("veronese") {

TEST_CASE("veronese map evaluates coordinate-wise") {
    CHECK(veronese(tu::pt(0, 0)) == Point5{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK(veronese(tu::pt(1, 2)) == Point5{Rational(1), Rational(2), Rational(1), Rational(2), Rational(4)});
    CHECK(veronese(Point2{make_rational(1, 2), make_rational(-1, 3)}) ==
          Point5{make_rational(1, 2), make_rational(-1, 3), make_rational(1, 4), make_rational(-1, 6),
                 make_rational(1, 9)});
}

TEST_CASE("no three veronese images are collinear") {
    Rng rng(71);
    for (int iter = 0; iter < 10; ++iter) {
        PointSet s = tu::random_point_set(rng, 6, 12, 3);
        for (int i = 0; i < s.size(); ++i)
            for (int j = i + 1; j < s.size(); ++j)
                for (int k = j + 1; k < s.size(); ++k)
                    CHECK(flat_span({v(s[i]), v(s[j]), v(s[k])}).dim() == 2);
    }
}

TEST_CASE("images of >=4 points lie in a 2-flat iff the points are collinear") {
    Rng rng(73);
    for (int iter = 0; iter < 10; ++iter) {
        PointSet coll = tu::random_collinear_set(rng, static_cast<int>(rng.range(4, 7)));
        CHECK(flat_span(embed(coll.points())).dim() <= 2);

        PointSet gen = tu::random_grid_set(rng, static_cast<int>(rng.range(4, 7)), 8);
        CHECK(flat_span(embed(gen.points())).dim() > 2);
    }
}

TEST_CASE("images of a non-collinear set of >=5 lie in a 3-flat iff near-collinear") {
    Rng rng(79);
    for (int iter = 0; iter < 10; ++iter) {
        PointSet nc = tu::random_near_collinear_set(rng, static_cast<int>(rng.range(5, 8)));
        CHECK(flat_span(embed(nc.points())).dim() <= 3);

        PointSet gen = tu::random_generic_set(rng, static_cast<int>(rng.range(5, 8)));
        CHECK(flat_span(embed(gen.points())).dim() > 3);
    }
}

TEST_CASE("choose_generic_coflat: verified conditions and determinism") {
    Rng rng(83);
    PointSet s = tu::random_generic_set(rng, 6);
    Flat P = flat_span({v(s[0]), v(s[1]), v(s[2])});
    std::vector<Point5> images;
    for (int i = 3; i < s.size(); ++i) images.push_back(veronese(s[i]));

    Hyperprojection h = choose_generic_coflat(P, images, 42);
    CHECK(h.Q.dim() == 2);
    CHECK(!flat_intersect(h.P, h.Q));
    for (const auto& x : images) {
        auto cut = flat_intersect(flat_extend(h.P, as_vector(x)), h.Q);
        REQUIRE(cut);
        CHECK(cut->dim() == 0);
    }

    Hyperprojection again = choose_generic_coflat(P, images, 42);
    CHECK(again.Q.base() == h.Q.base());
    CHECK(again.Q.directions() == h.Q.directions());
}

TEST_CASE("choose_generic_coflat rejects images inside P") {
    Rng rng(89);
    PointSet s = tu::random_generic_set(rng, 5);
    Flat P = flat_span({v(s[0]), v(s[1]), v(s[2])});
    CHECK_THROWS_AS(choose_generic_coflat(P, {veronese(s[0])}, 1), PreconditionError);
}

TEST_CASE("hyperproject: a point of Q maps to itself in Q coordinates") {
    Rng rng(97);
    PointSet s = tu::random_generic_set(rng, 5);
    Flat P = flat_span({v(s[0]), v(s[1]), v(s[2])});
    std::vector<Point5> images{veronese(s[3]), veronese(s[4])};
    Hyperprojection h = choose_generic_coflat(P, images, 7);

    QVec x = h.Q.base();
    for (int i = 0; i < 5; ++i)
        x[static_cast<size_t>(i)] += 2 * h.Q.directions()[0][static_cast<size_t>(i)] -
                                     h.Q.directions()[1][static_cast<size_t>(i)];
    Point5 p5;
    std::copy(x.begin(), x.end(), p5.begin());
    Point2 img = hyperproject(h, p5);
    CHECK(img == tu::pt(2, -1));
}

TEST_CASE("side images collapse and off-triangle images stay distinct") {
    Rng rng(101);
    for (int iter = 0; iter < 8; ++iter) {
        // triangle p,q,r plus points on each side plus generic points
        PointSet base = tu::random_generic_set(rng, 3, 12, 2);
        Point2 p = base[0], q = base[1], r = base[2];
        auto on_segment = [&](const Point2& a, const Point2& b, long num, long den) {
            Rational t = make_rational(num, den);
            return Point2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        };
        std::vector<Point2> side_pq{on_segment(p, q, 1, 3), on_segment(p, q, 2, 5)};
        std::vector<Point2> side_pr{on_segment(p, r, 1, 4)};
        std::vector<Point2> side_qr{on_segment(q, r, 2, 3), on_segment(q, r, 1, 5)};
        std::vector<Point2> off = tu::random_generic_set(rng, 4, 9, 2).points();

        Flat P = flat_span({v(p), v(q), v(r)});
        std::vector<Point5> images;
        auto push = [&](const std::vector<Point2>& pts) {
            for (const auto& x : pts)
                if (!flat_contains(P, as_vector(veronese(x)))) images.push_back(veronese(x));
        };
        push(side_pq);
        push(side_pr);
        push(side_qr);
        std::vector<Point5> off_images;
        for (const auto& x : off) {
            if (x == p || x == q || x == r) continue;
            if (tu::collinear(p, q, x) || tu::collinear(p, r, x) || tu::collinear(q, r, x)) continue;
            off_images.push_back(veronese(x));
            images.push_back(veronese(x));
        }
        Hyperprojection h = choose_generic_coflat(P, images, 1000 + static_cast<std::uint64_t>(iter));

        Point2 a1 = hyperproject(h, veronese(side_pq[0]));
        CHECK(hyperproject(h, veronese(side_pq[1])) == a1);
        Point2 a2 = hyperproject(h, veronese(side_pr[0]));
        Point2 a3 = hyperproject(h, veronese(side_qr[0]));
        CHECK(hyperproject(h, veronese(side_qr[1])) == a3);
        CHECK(a1 != a2);
        CHECK(a1 != a3);
        CHECK(a2 != a3);

        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& x : off_images) {
            Point2 img = hyperproject(h, x);
            CHECK(img != a1);
            CHECK(img != a2);
            CHECK(img != a3);
            CHECK(seen.insert({format_rational(img.x), format_rational(img.y)}).second);
        }
    }
}

TEST_CASE("find_ordinary_conic agrees with the brute-force oracle") {
    PointSet s({tu::pt(0, 0), tu::pt(1, 0), tu::pt(0, 1), tu::pt(1, 1), tu::pt(2, 3), tu::pt(3, 1), tu::pt(5, 2)});
    auto all = enumerate_ordinary_conics(s);
    REQUIRE(!all.empty());
    FindTrace tr;
    ConicRecord rec = find_ordinary_conic(s, 5, &tr);
    CHECK(record_in(all, rec));
    CHECK(!tr.log.empty());
}

TEST_CASE("find_ordinary_conic rejects co-conic input") {
    PointSet circle({tu::pt(1, 0), tu::pt(0, 1), tu::pt(-1, 0), tu::pt(0, -1), tu::pt(3, 4, 5, 5),
                     tu::pt(-3, -4, 5, 5)});
    CHECK_THROWS_AS(find_ordinary_conic(circle, 0), PreconditionError);
}

TEST_CASE("find_ordinary_conic uses a three-point line when one exists") {
    PointSet s({tu::pt(0, 0), tu::pt(1, 0), tu::pt(2, 0), tu::pt(0, 1), tu::pt(1, 2), tu::pt(3, 3)});
    auto all = enumerate_ordinary_conics(s);
    FindTrace tr;
    ConicRecord rec = find_ordinary_conic(s, 0, &tr);
    CHECK(tr.branch == FindBranch::three_point_line);
    CHECK(rec.conic.cls == ConicClass::two_lines);
    // the 3-point axis {0,1,2} is part of the conic
    for (int i : {0, 1, 2})
        CHECK(std::find(rec.member_indices.begin(), rec.member_indices.end(), i) != rec.member_indices.end());
    CHECK(record_in(all, rec));
}

TEST_CASE("find_ordinary_conic is deterministic given the seed") {
    Rng rng(103);
    PointSet s = tu::random_generic_set(rng, 8);
    FindTrace t1, t2;
    ConicRecord a = find_ordinary_conic(s, 11, &t1);
    ConicRecord b = find_ordinary_conic(s, 11, &t2);
    CHECK(a.member_indices == b.member_indices);
    CHECK(a.conic == b.conic);
    CHECK(t1.branch == t2.branch);
}

TEST_CASE("projection branch fires on general-position sets") {
    Rng rng(107);
    PointSet s = tu::random_generic_set(rng, 7);
    auto all = enumerate_ordinary_conics(s);
    FindTrace tr;
    ConicRecord rec = find_ordinary_conic(s, 3, &tr);
    CHECK(tr.branch == FindBranch::projected_double_point);
    CHECK(record_in(all, rec));
}

TEST_CASE("project_and_lift_triple works for any ordinary triangle") {
    Rng rng(109);
    PointSet s = tu::random_generic_set(rng, 8);
    auto all = enumerate_ordinary_conics(s);
    // no 3 collinear, so every triple spans an ordinary triangle
    for (std::array<int, 3> tri : {std::array<int, 3>{0, 1, 2}, {2, 5, 7}, {1, 3, 6}}) {
        auto rec = project_and_lift_triple(s, tri, /*avoid_collapsed_side=*/false, 9);
        REQUIRE(rec);
        CHECK(record_in(all, *rec));
        for (int t : tri)
            CHECK(std::find(rec->member_indices.begin(), rec->member_indices.end(), t) !=
                  rec->member_indices.end());
    }
}

} // TEST_SUITE
