#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pline/sampling.hpp"
#include "pline/standard_form.hpp"

using namespace pline;

namespace {

Poly X() { return Poly::monomial(1, 1); }

// arbitrary invertible matrix as a random word in B12, B21 and diagonals
PolyMat2 random_elementary_product(const PrimeField& k, Rng& rng) {
    PolyMat2 m = pm_identity();
    std::size_t len = 1 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i) {
        switch (rng() % 3) {
        case 0:
            m = pm_mul(k, m, pm_b12(random_poly_upto(k, 4, rng)));
            break;
        case 1:
            m = pm_mul(k, m, pm_b21(random_poly_upto(k, 4, rng)));
            break;
        default:
            m = pm_mul(k, m,
                       pm_diag(1 + (std::uint32_t)(rng() % (k.p() - 1)),
                               1 + (std::uint32_t)(rng() % (k.p() - 1))));
        }
    }
    return m;
}

} // namespace

TEST_CASE("compose basics") {
    PrimeField k(3);
    SUBCASE("empty word is the diagonal") {
        StandardForm sf;
        CHECK(sf_compose(k, sf) == pm_identity());
        sf.u = 2;
        sf.v = 1;
        CHECK(sf_compose(k, sf) == pm_diag(2, 1));
    }
    SUBCASE("(0,0) composes to diag(-1,-1)") {
        StandardForm sf;
        sf.params = {Poly::zero(), Poly::zero()};
        CHECK(sf_compose(k, sf) == pm_diag(2, 2));
    }
    SUBCASE("a single parameter gives E(t)") {
        StandardForm sf;
        sf.params = {X()};
        CHECK(sf_compose(k, sf) == pm_e(k, X()));
    }
}

TEST_CASE("decompose recovers simple words") {
    SUBCASE("E(X) E(X) over F2") {
        PrimeField k(2);
        PolyMat2 m = pm_mul(k, pm_e(k, X()), pm_e(k, X()));
        StandardForm sf = sf_decompose(k, m);
        CHECK(sf.u == 1);
        CHECK(sf.v == 1);
        CHECK(sf.params == std::vector<Poly>{X(), X()});
    }
    SUBCASE("E(X^2+1) E(X) E(X^3) over F3 returns exactly those parameters") {
        PrimeField k(3);
        Poly t3 = poly_parse(k, "X^2+1"), t2 = X(), t1 = poly_parse(k, "X^3");
        PolyMat2 m = pm_mul(k, pm_mul(k, pm_e(k, t3), pm_e(k, t2)), pm_e(k, t1));
        StandardForm sf = sf_decompose(k, m);
        CHECK(sf.u == 1);
        CHECK(sf.v == 1);
        REQUIRE(sf.params.size() == 3);
        CHECK(sf.params[0] == t1);
        CHECK(sf.params[1] == t2);
        CHECK(sf.params[2] == t3);
    }
    SUBCASE("diagonal matrices have the empty word") {
        PrimeField k(5);
        StandardForm sf = sf_decompose(k, pm_diag(2, 3));
        CHECK(sf.params.empty());
        CHECK(sf.u == 2);
        CHECK(sf.v == 3);
    }
    SUBCASE("B12 and B21 land on the forced two-parameter forms") {
        PrimeField k(3);
        StandardForm b12 = sf_decompose(k, pm_b12(X()));
        REQUIRE(b12.params.size() == 2);
        CHECK(b12.params[0].is_zero()); // t_1 = 0
        StandardForm b21 = sf_decompose(k, pm_b21(X()));
        REQUIRE(b21.params.size() == 2);
        CHECK(b21.params[1].is_zero()); // t_2 = 0
    }
}

TEST_CASE("non-invertible matrices are rejected") {
    PrimeField k(2);
    PolyMat2 m{X(), Poly::zero(), Poly::zero(), Poly::constant(1)}; // det = X
    CHECK_THROWS_AS(sf_decompose(k, m), domain_error);
}

TEST_CASE("500 random canonical forms round trip verbatim") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField k(p);
        Rng rng(4000 + p);
        int failures = 0;
        for (int trial = 0; trial < 500; ++trial) {
            StandardForm sf = random_standard_form(k, 6, rng);
            StandardForm back = sf_decompose(k, sf_compose(k, sf));
            if (!(back == sf)) ++failures;
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("1000 random elementary products decompose and recompose") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField k(p);
        Rng rng(9000 + p);
        for (int trial = 0; trial < 1000; ++trial) {
            PolyMat2 m = random_elementary_product(k, rng);
            DecomposeStats stats;
            StandardForm sf = sf_decompose(k, m, &stats);
            CHECK(sf_compose(k, sf) == m); // also self-checked inside
            for (std::size_t i = 1; i + 1 < sf.params.size(); ++i)
                CHECK(sf.params[i].degree() >= 1);
            // division degrees strictly decrease: the termination measure
            for (std::size_t i = 1; i < stats.division_degrees.size(); ++i)
                CHECK(stats.division_degrees[i] < stats.division_degrees[i - 1]);
        }
    }
}

TEST_CASE("modified standard form differs only on diagonals") {
    PrimeField k(3);
    SUBCASE("non-diagonal: identical") {
        PolyMat2 m = pm_mul(k, pm_e(k, X()), pm_e(k, poly_parse(k, "X^2")));
        StandardForm sf = sf_decompose(k, m);
        CHECK(sf_modified(k, sf) == sf);
    }
    SUBCASE("diagonal: -A E(0)^2 convention, same composition") {
        StandardForm sf = sf_decompose(k, pm_diag(2, 1));
        StandardForm mod = sf_modified(k, sf);
        REQUIRE(mod.params.size() == 2);
        CHECK(mod.params[0].is_zero());
        CHECK(mod.params[1].is_zero());
        CHECK(mod.u == k.neg(sf.u));
        CHECK(mod.v == k.neg(sf.v));
        CHECK(sf_compose(k, mod) == sf_compose(k, sf));
    }
}

TEST_CASE("distance certificates") {
    SUBCASE("t = X over F2, m = 1..5") {
        PrimeField k(2);
        for (std::uint32_t m = 1; m <= 5; ++m) {
            auto cert = distance_certificate(k, X(), m);
            CHECK(cert.ok);
            CHECK(cert.form.params.size() == m);
        }
    }
    SUBCASE("t = X^2+X over F3, m = 3") {
        PrimeField k(3);
        auto cert = distance_certificate(k, poly_parse(k, "X^2+X"), 3);
        CHECK(cert.ok);
    }
    SUBCASE("units and zero are rejected") {
        PrimeField k(3);
        CHECK_THROWS_AS(distance_certificate(k, Poly::constant(2), 2), precondition_error);
        CHECK_THROWS_AS(distance_certificate(k, Poly::zero(), 2), precondition_error);
    }
}

TEST_CASE("bivariate power identity") {
    SUBCASE("F5 up to n = 10") {
        XyReport rep = xy_matrix_check(5, 10);
        CHECK(rep.power_identity_ok);
        CHECK(rep.det_ok);
        CHECK(rep.inverse_ok);
        CHECK(rep.identity_iff_char_divides);
        CHECK(rep.identity_at == std::vector<std::uint32_t>{5, 10});
    }
    SUBCASE("F2: squares to the identity") {
        XyReport rep = xy_matrix_check(2, 10);
        CHECK(rep.power_identity_ok);
        CHECK(rep.identity_at == std::vector<std::uint32_t>{2, 4, 6, 8, 10});
    }
    SUBCASE("n = 0 is the identity") {
        PrimeField k(5);
        CHECK(pm_pow(k, pm_e(k, X()), 0) == pm_identity());
        CHECK(bm_identity() == bm_identity());
    }
}

TEST_CASE("polynomial parsing and printing") {
    PrimeField k(3);
    CHECK(poly_parse(k, "X^3+2*X+1") == poly_normalize({1, 2, 0, 1}));
    CHECK(poly_parse(k, "0").is_zero());
    CHECK(poly_parse(k, "2X") == poly_normalize({0, 2}));   // implicit product
    CHECK(poly_parse(k, "X+X") == poly_normalize({0, 2}));  // coefficients accumulate
    CHECK(poly_parse(k, "-X+1") == poly_normalize({1, 2})); // leading minus
    CHECK(poly_parse(k, "4") == Poly::constant(1));         // reduced mod 3
    CHECK(poly_str(k, poly_parse(k, "X^3+2*X+1")) == "X^3+2*X+1");
    CHECK(poly_str(k, Poly::zero()) == "0");
    CHECK_THROWS_AS(poly_parse(k, "X^"), domain_error);
    CHECK_THROWS_AS(poly_parse(k, "+"), domain_error);
    CHECK_THROWS_AS(poly_parse(k, ""), domain_error);
    CHECK_THROWS_AS(poly_parse(k, "X1*X2"), domain_error); // bivariate names rejected here

    // print/parse round trip on random polynomials
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly_upto(k, 6, rng);
        CHECK(poly_parse(k, poly_str(k, a)) == a);
    }
}
