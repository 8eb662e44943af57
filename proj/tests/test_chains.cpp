#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pline/chains.hpp"

using namespace pline;

namespace {

RingPtr zn(std::uint64_t n) { return ring_create_finite(RingSpec::zn(n)); }
RingPtr dual(std::uint32_t p) {
    return ring_create_finite(RingSpec::quotient_poly(RingSpec::zn(p), {0, 0, 1}));
}
RingPtr m2f2() { return ring_create_finite(RingSpec::matrix(RingSpec::zn(2))); }

} // namespace

TEST_CASE("subfield validation") {
    SUBCASE("{0,1} inside the dual numbers is a copy of F2") {
        auto r = dual(2);
        auto c = subfield_check(*r, {0, 1});
        CHECK(c.ok);
        CHECK(c.field.order() == 2);
    }
    SUBCASE("the scalar matrices {0, I} inside M2(F2)") {
        auto r = m2f2();
        auto c = subfield_check(*r, {r->zero(), r->one()});
        CHECK(c.ok);
    }
    SUBCASE("{0,1} in Z/4 is not closed under addition") {
        auto r = zn(4);
        auto c = subfield_check(*r, {0, 1});
        CHECK_FALSE(c.ok);
        CHECK(c.violation.find("1+1") != std::string::npos);
        CHECK_THROWS_AS(require_subfield(*r, {0, 1}), domain_error);
    }
    SUBCASE("{0,1,2} in Z/4 contains the non-unit 2") {
        auto c = subfield_check(*zn(4), {0, 1, 2});
        CHECK_FALSE(c.ok);
    }
    SUBCASE("duplicates and order do not matter") {
        auto r = dual(3);
        auto c = subfield_check(*r, {2, 0, 1, 1});
        CHECK(c.ok);
        CHECK(c.field.elements == std::vector<Elt>{0, 1, 2});
    }
}

TEST_CASE("chains over the field itself: the single full chain") {
    auto r = zn(2);
    auto g = DistantGraph::build(r);
    Subfield k = require_subfield(*r, {0, 1});
    auto chains = enumerate_chains(g, k);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].point_ids.size() == 3);
    CHECK(chains[0].witness == mat_identity(*r));
    auto rep = verify_chain_axioms(g, chains);
    CHECK(rep.ok());
}

TEST_CASE("chains over the dual numbers") {
    auto r = dual(2);
    auto g = DistantGraph::build(r);
    Subfield k = require_subfield(*r, {0, 1});
    auto chains = enumerate_chains(g, k);
    CHECK(chains.size() == 8);
    SUBCASE("base chain first, identity witness") {
        CHECK(chains[0].witness == mat_identity(*r));
        std::vector<std::uint32_t> base{g.index_of_pair(1, 0), g.index_of_pair(1, 1),
                                        g.index_of_pair(0, 1)};
        std::sort(base.begin(), base.end());
        CHECK(chains[0].point_ids == base);
    }
    SUBCASE("every chain has |K|+1 mutually distant points and a valid witness") {
        for (const Chain& c : chains) {
            CHECK(c.point_ids.size() == k.order() + 1);
            for (std::size_t i = 0; i < c.point_ids.size(); ++i)
                for (std::size_t j = i + 1; j < c.point_ids.size(); ++j)
                    CHECK(g.adjacent(c.point_ids[i], c.point_ids[j]));
            CHECK(mat_invertible(*r, c.witness));
        }
    }
    SUBCASE("axioms hold with zero counterexamples") {
        auto rep = verify_chain_axioms(g, chains);
        CHECK(rep.ok());
        CHECK(rep.pairs_checked == 15);
        CHECK(rep.triple_counterexamples == 0);
        CHECK(rep.pair_counterexamples == 0);
    }
    SUBCASE("chains stay inside one component") {
        CHECK(chain_component_containment(g, chains).ok);
    }
}

TEST_CASE("chains of Sigma(F3, F3[e])") {
    auto r = dual(3);
    auto g = DistantGraph::build(r);
    Subfield k = require_subfield(*r, {0, 1, 2});
    auto chains = enumerate_chains(g, k);
    CHECK(chains.size() == 27);
    for (const Chain& c : chains) CHECK(c.point_ids.size() == 4);
    CHECK(verify_chain_axioms(g, chains).ok());
    CHECK(chain_component_containment(g, chains).ok);
}

TEST_CASE("chains of Sigma(F2-scalars, M2(F2))") {
    auto r = m2f2();
    auto g = DistantGraph::build(r);
    Subfield k = require_subfield(*r, {r->zero(), r->one()});
    auto chains = enumerate_chains(g, k, {}, 2);
    CHECK(chains.size() == 560);
    auto rep = verify_chain_axioms(g, chains);
    CHECK(rep.ok());
    CHECK(chain_component_containment(g, chains).ok);
}
