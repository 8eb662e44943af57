#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "pline/poly.hpp"
#include "pline/ring.hpp"

using namespace pline;

namespace {

RingPtr zn(std::uint64_t n) { return ring_create_finite(RingSpec::zn(n)); }
RingPtr gf4() { return ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(2), {1, 1, 1})); }
RingPtr dual(std::uint32_t p) {
    return ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(p), {0, 0, 1}));
}
RingPtr m2f2() { return ring_create_finite(RingSpec::matrix(RingSpec::zn(2))); }
RingPtr f2xf2() { return ring_create_finite(RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)})); }

// two-sided inverse search straight from the multiplication, used as the
// oracle for is_unit
bool unit_by_scan(const FiniteRing& r, Elt a) {
    for (Elt b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
    return false;
}

std::vector<RingPtr> test_rings() {
    return {zn(1), zn(2), zn(3), zn(4), zn(5), zn(6), gf4(), dual(2), dual(3), f2xf2(), m2f2()};
}

} // namespace

TEST_CASE("Zn arithmetic basics") {
    auto r = zn(4);
    CHECK(r->size() == 4);
    CHECK(r->add(1, 1) == 2);
    CHECK(r->mul(2, 2) == 0);
    CHECK(r->neg(1) == 3);
    CHECK(r->sub(0, 1) == 3);
    CHECK(r->commutative());
}

TEST_CASE("dual numbers square to zero") {
    auto r = dual(2);
    Elt eps = r->encode({0, 1});
    CHECK(r->mul(eps, eps) == r->zero());
    CHECK(r->elt_str(eps) == "x");
}

TEST_CASE("GF(4) is a field with three units") {
    auto r = gf4();
    CHECK(r->size() == 4);
    CHECK(ring_is_field(*r));
    int units = 0;
    for (Elt a = 0; a < r->size(); ++a) units += unit_by_scan(*r, a);
    CHECK(units == 3);
    CHECK(r->units().size() == 3);
    // x * (x+1) = x^2 + x = 1 modulo x^2+x+1
    Elt x = r->encode({0, 1});
    Elt x1 = r->encode({1, 1});
    CHECK(r->mul(x, x1) == r->one());
}

TEST_CASE("unit tests and inverses") {
    auto r4 = zn(4);
    CHECK(r4->is_unit(3));
    CHECK(r4->unit_inverse(3) == 3);
    CHECK_FALSE(r4->is_unit(2));
    CHECK_THROWS_AS((void)r4->unit_inverse(2), domain_error);

    auto m = m2f2();
    Elt a = m->encode({1, 1, 0, 1});
    CHECK(m->is_unit(a));
    // the oracle finds the same inverse
    Elt inv = UINT32_MAX;
    for (Elt b = 0; b < m->size(); ++b)
        if (m->mul(a, b) == m->one() && m->mul(b, a) == m->one()) inv = b;
    CHECK(inv == m->unit_inverse(a));
}

TEST_CASE("units lists") {
    CHECK(zn(4)->units() == std::vector<Elt>{1, 3});
    CHECK(zn(5)->units() == std::vector<Elt>{1, 2, 3, 4});
    CHECK(zn(1)->units() == std::vector<Elt>{0}); // 1 = 0 is a unit of the trivial ring
}

TEST_CASE("is_unit agrees with the exhaustive scan on all test rings") {
    for (const auto& r : test_rings())
        for (Elt a = 0; a < r->size(); ++a) CHECK(r->is_unit(a) == unit_by_scan(*r, a));
}

TEST_CASE("product units are componentwise") {
    auto r = f2xf2();
    for (Elt a = 0; a < 2; ++a)
        for (Elt b = 0; b < 2; ++b) {
            Elt e = r->encode({a, b});
            CHECK(r->is_unit(e) == (a == 1 && b == 1));
        }
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
    for (const auto& r : test_rings()) {
        if (r->size() > 16) continue;
        const Elt n = r->size();
        for (Elt a = 0; a < n; ++a) {
            CHECK(r->add(a, r->zero()) == a);
            CHECK(r->mul(a, r->one()) == a);
            CHECK(r->mul(r->one(), a) == a);
            CHECK(r->add(a, r->neg(a)) == r->zero());
            for (Elt b = 0; b < n; ++b)
                for (Elt c = 0; c < n; ++c) {
                    CHECK(r->add(r->add(a, b), c) == r->add(a, r->add(b, c)));
                    CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
                    CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
                    CHECK(r->mul(r->add(a, b), c) == r->add(r->mul(a, c), r->mul(b, c)));
                }
        }
    }
}

TEST_CASE("index conventions: 0 is zero, 1 is one") {
    for (const auto& r : test_rings()) {
        CHECK(r->zero() == 0);
        if (!r->trivial()) CHECK(r->one() == 1);
    }
    CHECK(zn(1)->one() == 0);
}

TEST_CASE("encode/decode round trip") {
    for (const auto& r : {gf4(), dual(3), m2f2(), f2xf2()})
        for (Elt a = 0; a < r->size(); ++a) CHECK(r->encode(r->decode(a)) == a);
}

TEST_CASE("poly_divmod examples") {
    PrimeField f2(2), f3(3);
    SUBCASE("(X^2+1) / X over F2") {
        auto [q, rem] = poly_divmod(f2, poly_parse(f2, "X^2+1"), poly_parse(f2, "X"));
        CHECK(q == poly_parse(f2, "X"));
        CHECK(rem == Poly::constant(1));
    }
    SUBCASE("X^3 / (X+1) over F3") {
        Poly num = poly_parse(f3, "X^3"), den = poly_parse(f3, "X+1");
        auto [q, rem] = poly_divmod(f3, num, den);
        CHECK(q == poly_parse(f3, "X^2+2*X+1")); // X^2 - X + 1
        CHECK(rem == Poly::constant(2));         // -1
        CHECK(poly_add(f3, poly_mul(f3, den, q), rem) == num);
    }
    SUBCASE("smaller degree yields (0, num)") {
        auto [q, rem] = poly_divmod(f3, poly_parse(f3, "X+2"), poly_parse(f3, "X^2"));
        CHECK(q.is_zero());
        CHECK(rem == poly_parse(f3, "X+2"));
    }
    SUBCASE("division by zero") {
        CHECK_THROWS_AS(poly_divmod(f2, poly_parse(f2, "X"), Poly::zero()), domain_error);
    }
}

TEST_CASE("divmod invariant on random inputs") {
    PrimeField f3(3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint32_t> nc(1 + rng() % 8), dc(1 + rng() % 5);
        for (auto& v : nc) v = (std::uint32_t)(rng() % 3);
        for (auto& v : dc) v = (std::uint32_t)(rng() % 3);
        Poly num = poly_normalize(std::move(nc)), den = poly_normalize(std::move(dc));
        if (den.is_zero()) continue;
        auto [q, rem] = poly_divmod(f3, num, den);
        CHECK(poly_add(f3, poly_mul(f3, den, q), rem) == num);
        CHECK(rem.degree() < den.degree());
    }
}

TEST_CASE("degree law deg(ab) = deg(a) + deg(b) over F2 and F3") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField k(p);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint32_t> ac(rng() % 6), bc(rng() % 6);
            for (auto& v : ac) v = (std::uint32_t)(rng() % p);
            for (auto& v : bc) v = (std::uint32_t)(rng() % p);
            Poly a = poly_normalize(std::move(ac)), b = poly_normalize(std::move(bc));
            CHECK(poly_mul(k, a, b).degree() == deg_add(a.degree(), b.degree()));
            CHECK(poly_add(k, a, b).degree() <= std::max(a.degree(), b.degree()));
        }
    }
}

TEST_CASE("construction errors carry descriptive messages") {
    CHECK_THROWS_AS(ring_create_finite(RingSpec::zn(0)), construction_error);
    CHECK_THROWS_AS(ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(2), {1})),
                    construction_error); // degree 0
    CHECK_THROWS_AS(ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(2), {})),
                    construction_error);
    CHECK_THROWS_AS(ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(4), {0, 0, 1})),
                    construction_error); // base not a field
    CHECK_THROWS_AS(ring_create_finite(RingSpec::matrix(RingSpec::zn(2), 3)), construction_error);
    CHECK_THROWS_AS(ring_create_finite(RingSpec::product({})), construction_error);
    CHECK_THROWS_AS(ring_create_finite(RingSpec::poly(RingSpec::zn(3))), capability_error);
    CHECK_THROWS_AS(ring_create(RingSpec::poly(RingSpec::zn(4))), construction_error); // 4 not prime
}

TEST_CASE("ring specs parse from JSON") {
    auto r = ring_create_finite(RingSpec::from_json_text(R"({"type":"Zn","n":4})"));
    CHECK(r->name() == "Z/4");
    auto q = ring_create_finite(RingSpec::from_json_text(
        R"({"type":"quotientpoly","base":{"type":"Zn","n":2},"modulus":[0,0,1]})"));
    CHECK(q->size() == 4);
    auto m = ring_create_finite(
        RingSpec::from_json_text(R"({"type":"matrix","base":{"type":"Zn","n":2},"dim":2})"));
    CHECK(m->size() == 16);
    auto pr = ring_create_finite(RingSpec::from_json_text(
        R"({"type":"product","factors":[{"type":"Zn","n":2},{"type":"Zn","n":3}]})"));
    CHECK(pr->size() == 6);
    Ring pd = ring_create(
        RingSpec::from_json_text(R"({"type":"poly","base":{"type":"Zn","n":3},"vars":1})"));
    CHECK(std::holds_alternative<PolyDomain>(pd));
    CHECK(std::get<PolyDomain>(pd).p == 3);

    // serialization round trip preserves the ring
    auto again = ring_create_finite(RingSpec::from_json_text(q->spec().json_text()));
    CHECK(again->name() == q->name());
    CHECK_THROWS_AS(RingSpec::from_json_text("not json"), construction_error);
    CHECK_THROWS_AS(RingSpec::from_json_text(R"({"type":"frobnicate"})"), construction_error);
}

TEST_CASE("matrix ring index encoding is stable and one sits at index 1") {
    auto m = m2f2();
    // identity at index 1 by the index convention
    CHECK(m->encode({1, 0, 0, 1}) == 1);
    CHECK(m->decode(1) == std::vector<Elt>{1, 0, 0, 1});
    // zero matrix at 0
    CHECK(m->decode(0) == std::vector<Elt>{0, 0, 0, 0});
    // all other indices decode to distinct matrices
    std::set<std::vector<Elt>> seen;
    for (Elt a = 0; a < m->size(); ++a) seen.insert(m->decode(a));
    CHECK(seen.size() == m->size());
}

TEST_CASE("trivial ring works end to end") {
    auto r = zn(1);
    CHECK(r->trivial());
    CHECK(r->one() == r->zero());
    CHECK(r->is_unit(0));
    CHECK(r->unit_inverse(0) == 0);
    CHECK(r->add(0, 0) == 0);
    CHECK(r->mul(0, 0) == 0);
}
