#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pline/graph.hpp"
#include "pline/sampling.hpp"
#include "pline/words.hpp"

using namespace pline;

namespace {

RingPtr zn(std::uint64_t n) { return ring_create_finite(RingSpec::zn(n)); }
RingPtr gf4() { return ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(2), {1, 1, 1})); }
RingPtr dual(std::uint32_t p) {
    return ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(p), {0, 0, 1}));
}
RingPtr m2f2() { return ring_create_finite(RingSpec::matrix(RingSpec::zn(2))); }

// independent enumeration: admissibility by completion search only,
// canonical representative by direct minimum over unit multiples
std::set<std::pair<Elt, Elt>> points_by_bruteforce(const FiniteRing& r) {
    std::set<std::pair<Elt, Elt>> out;
    auto units = r.units();
    for (Elt a = 0; a < r.size(); ++a)
        for (Elt b = 0; b < r.size(); ++b) {
            if (!is_admissible_exhaustive(r, a, b)) continue;
            std::pair<Elt, Elt> best{a, b};
            for (Elt u : units) best = std::min(best, {r.mul(u, a), r.mul(u, b)});
            out.insert(best);
        }
    return out;
}

} // namespace

TEST_CASE("admissibility basics") {
    auto r = zn(4);
    CHECK(is_admissible(*r, 1, 0));
    CHECK(is_admissible(*r, 2, 3)); // 2*0 + 3*3 = 1
    CHECK_FALSE(is_admissible(*r, 2, 2));
    CHECK_FALSE(is_admissible_exhaustive(*r, 2, 2));
    CHECK(is_admissible(*zn(1), 0, 0));
    CHECK(is_admissible(*m2f2(), m2f2()->one(), m2f2()->zero()));
}

TEST_CASE("the admissibility shortcut matches the completion search") {
    for (const auto& r : {zn(4), zn(6), gf4(), dual(2), m2f2()})
        for (Elt a = 0; a < r->size(); ++a)
            for (Elt b = 0; b < r->size(); ++b)
                CHECK(is_admissible(*r, a, b) == is_admissible_exhaustive(*r, a, b));
}

TEST_CASE("canonical representatives") {
    auto r = zn(4);
    CHECK(point_make(*r, 3, 0) == point_make(*r, 1, 0)); // 3*(3,0) = (1,0)
    CHECK_FALSE(point_make(*r, 0, 1) == point_make(*r, 1, 0));
    CHECK_THROWS_AS(point_make(*r, 2, 2), domain_error);

    auto t = zn(1);
    CHECK(point_make(*t, 0, 0) == point_make(*t, 0, 0)); // single point
    CHECK(enumerate_points(*t).size() == 1);
}

TEST_CASE("points of different ring instances never compare equal") {
    auto r1 = zn(4), r2 = zn(4);
    Point p1 = point_make(*r1, 1, 0), p2 = point_make(*r2, 1, 0);
    CHECK_FALSE(point_eq(p1, p2));
    CHECK_THROWS_AS(distant(p1, p2), domain_error);
}

TEST_CASE("point counts: q+1 for fields, 6 for Z/4 and the dual numbers") {
    CHECK(enumerate_points(*zn(2)).size() == 3);
    CHECK(enumerate_points(*zn(3)).size() == 4);
    CHECK(enumerate_points(*gf4()).size() == 5);
    CHECK(enumerate_points(*zn(4)).size() == 6);
    CHECK(enumerate_points(*dual(2)).size() == 6);
}

TEST_CASE("enumeration agrees with the independent brute force") {
    for (const auto& r : {zn(2), zn(4), zn(6), gf4(), dual(2), m2f2()}) {
        auto pts = enumerate_points(*r);
        auto brute = points_by_bruteforce(*r);
        REQUIRE(pts.size() == brute.size());
        for (const Point& p : pts) CHECK(brute.count({p.a, p.b}) == 1);
    }
}

TEST_CASE("distant relation") {
    auto r = zn(4);
    Point p10 = point_make(*r, 1, 0), p01 = point_make(*r, 0, 1), p12 = point_make(*r, 1, 2);
    CHECK(distant(p10, p01));
    CHECK_FALSE(distant(p10, p12)); // det 2
    CHECK_FALSE(distant(p10, p10)); // anti-reflexive when 1 != 0

    auto t = zn(1);
    Point single = point_make(*t, 0, 0);
    CHECK(distant(single, single)); // reflexive exactly when 1 = 0
}

TEST_CASE("distant is independent of representatives and symmetric") {
    auto r = zn(4);
    auto pts = enumerate_points(*r);
    auto units = r->units();
    for (const Point& p : pts)
        for (const Point& q : pts) {
            bool expected = distant(p, q);
            CHECK(expected == distant(q, p));
            for (Elt u1 : units)
                for (Elt u2 : units) {
                    Mat2 stacked{r->mul(u1, p.a), r->mul(u1, p.b), r->mul(u2, q.a), r->mul(u2, q.b)};
                    CHECK(mat_invertible(*r, stacked) == expected);
                }
        }
}

TEST_CASE("graphs of small rings") {
    SUBCASE("F3 is K4 with diameter 1") {
        auto g = DistantGraph::build(zn(3));
        CHECK(g.point_count() == 4);
        CHECK(g.connected());
        CHECK(g.diameter_of_component(0) == 1);
        for (std::uint32_t i = 0; i < 4; ++i)
            for (std::uint32_t j = 0; j < 4; ++j) CHECK(g.adjacent(i, j) == (i != j));
    }
    SUBCASE("Z/4 is connected with diameter 2") {
        auto g = DistantGraph::build(zn(4));
        CHECK(g.point_count() == 6);
        CHECK(g.connected());
        CHECK(g.diameter_of_component(0) == 2);
        CHECK(g.component_diameters() == std::vector<std::uint32_t>{2});
        auto d = g.dist(g.index_of_pair(1, 0), g.index_of_pair(1, 2));
        REQUIRE(d.has_value());
        CHECK(*d == 2);
    }
    SUBCASE("the trivial ring gives one looped point of diameter 0") {
        auto g = DistantGraph::build(zn(1));
        CHECK(g.point_count() == 1);
        CHECK(g.has_loops());
        CHECK(g.adjacent(0, 0));
        CHECK(g.diameter_of_component(0) == 0);
        CHECK(g.dist(0, 0).value() == 0);
    }
}

TEST_CASE("distance is GL2-invariant") {
    Rng rng(2024);
    for (const auto& r : {zn(4), dual(2)}) {
        auto g = DistantGraph::build(r);
        for (int trial = 0; trial < 100; ++trial) {
            Mat2 m = random_invertible_mat(*r, rng);
            for (std::uint32_t i = 0; i < g.point_count(); ++i)
                for (std::uint32_t j = 0; j < g.point_count(); ++j) {
                    Elt xa, xb, ya, yb;
                    mat_apply_row(*r, g.point(i).a, g.point(i).b, m, xa, xb);
                    mat_apply_row(*r, g.point(j).a, g.point(j).b, m, ya, yb);
                    auto lhs = g.dist(g.index_of_pair(xa, xb), g.index_of_pair(ya, yb));
                    auto rhs = g.dist(i, j);
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("word endpoints") {
    auto r = zn(4);
    CHECK(word_to_point(*r, {}).end == point_make(*r, 1, 0));
    for (Elt t = 0; t < r->size(); ++t) {
        EWord w{{t}};
        CHECK(word_to_point(*r, w).end == point_make(*r, t, 1));
    }
    EWord zz{{0, 0}};
    CHECK(word_to_point(*r, zz).end == point_make(*r, 1, 0));
}

TEST_CASE("prefix traces step through distant points") {
    Rng rng(99);
    for (const auto& r : {zn(4), dual(2), gf4()}) {
        for (int trial = 0; trial < 500; ++trial) {
            EWord w;
            std::size_t len = rng() % 7;
            for (std::size_t i = 0; i < len; ++i) w.params.push_back(random_elt(*r, rng));
            WordTrace tr = word_to_point(*r, w);
            REQUIRE(tr.prefix.size() == len + 1);
            CHECK(tr.prefix.front() == point_make(*r, r->one(), r->zero()));
            for (std::size_t i = 1; i < tr.prefix.size(); ++i)
                CHECK(distant(tr.prefix[i - 1], tr.prefix[i]));
        }
    }
}

TEST_CASE("word endpoint matches the literal matrix product") {
    Rng rng(42);
    for (const auto& r : {zn(4), gf4(), m2f2()}) {
        for (int trial = 0; trial < 200; ++trial) {
            EWord w;
            std::size_t len = rng() % 6;
            for (std::size_t i = 0; i < len; ++i) w.params.push_back(random_elt(*r, rng));
            // E(t_n) * E(t_{n-1}) * ... * E(t_1), applied to the row (1,0)
            Mat2 prod = mat_identity(*r);
            for (std::size_t i = w.params.size(); i-- > 0;) prod = mat_mul(*r, prod, gen_e(*r, w.params[i]));
            Elt x, y;
            mat_apply_row(*r, r->one(), r->zero(), prod, x, y);
            CHECK(word_to_point(*r, w).end == point_make(*r, x, y));
        }
    }
}

TEST_CASE("chain normalization") {
    auto r = zn(4);
    SUBCASE("singleton chain gives the empty word") {
        std::vector<Point> chain{point_make(*r, 1, 0)};
        CHECK(chain_to_word(*r, chain).params.empty());
    }
    SUBCASE("R(1,0) -> R(0,1) gives the word (0)") {
        std::vector<Point> chain{point_make(*r, 1, 0), point_make(*r, 0, 1)};
        auto w = chain_to_word(*r, chain);
        CHECK(w.params == std::vector<Elt>{0});
    }
    SUBCASE("random chains round trip through the prefix trace") {
        auto g = DistantGraph::build(r);
        Rng rng(3);
        for (int trial = 0; trial < 300; ++trial) {
            auto chain = random_distant_chain(g, 1 + rng() % 4, rng);
            EWord w = chain_to_word(*r, chain);
            WordTrace tr = word_to_point(*r, w);
            REQUIRE(tr.prefix.size() == chain.size());
            for (std::size_t i = 0; i < chain.size(); ++i) CHECK(tr.prefix[i] == chain[i]);
        }
    }
    SUBCASE("precondition violations are rejected") {
        std::vector<Point> bad_start{point_make(*r, 0, 1)};
        CHECK_THROWS_AS(chain_to_word(*r, bad_start), precondition_error);
        std::vector<Point> not_distant{point_make(*r, 1, 0), point_make(*r, 1, 2)};
        CHECK_THROWS_AS(chain_to_word(*r, not_distant), precondition_error);
    }
}

TEST_CASE("shortest words realize the graph distance") {
    for (const auto& r : {zn(4), dual(2), zn(3), gf4()}) {
        auto g = DistantGraph::build(r);
        std::uint32_t diam = g.diameter_of_component(0);
        auto lengths = min_word_lengths(*r, g.points(), diam);
        auto dists = g.bfs_from(g.index_of_pair(r->one(), r->zero()));
        for (std::uint32_t i = 0; i < g.point_count(); ++i) CHECK(lengths[i] == dists[i]);
    }
}

TEST_CASE("unimodular vs admissible reports") {
    auto rep4 = unimodular_vs_admissible(*zn(4));
    CHECK(rep4.pairs == 16);
    CHECK(rep4.admissible == 12); // 6 points x 2 units
    CHECK(rep4.unimodular == 12);
    CHECK(rep4.uni_implies_admiss);
    CHECK(rep4.admiss_implies_uni);

    auto repd = unimodular_vs_admissible(*dual(2));
    CHECK(repd.uni_implies_admiss);
    CHECK(repd.admiss_implies_uni);

    auto repm = unimodular_vs_admissible(*m2f2());
    CHECK(repm.pairs == 256);
    CHECK(repm.unimodular == repm.admissible);
    CHECK(repm.uni_implies_admiss);
    CHECK(repm.admiss_implies_uni);
}
