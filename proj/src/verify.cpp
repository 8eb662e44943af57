#include "pline/verify.hpp"

#include <chrono>
#include <sstream>

#include "pline/chains.hpp"
#include "pline/graph.hpp"
#include "pline/points.hpp"
#include "pline/sampling.hpp"
#include "pline/standard_form.hpp"
#include "pline/words.hpp"

namespace pline {

namespace {

struct Suite {
    Budget budget;
    std::uint64_t seed;
    int threads;
    std::vector<CheckResult> results;

    void run(int id, const std::string& name, bool (*fn)(Suite&, std::string&)) {
        CheckResult c;
        c.id = id;
        c.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.pass = fn(*this, c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(c));
    }
};

RingSpec spec_f2() { return RingSpec::zn(2); }
RingSpec spec_f3() { return RingSpec::zn(3); }
RingSpec spec_f4() { return RingSpec::quotient_poly(RingSpec::zn(2), {1, 1, 1}); }
RingSpec spec_f5() { return RingSpec::zn(5); }
RingSpec spec_z4() { return RingSpec::zn(4); }
RingSpec spec_dual2() { return RingSpec::quotient_poly(RingSpec::zn(2), {0, 0, 1}); }
RingSpec spec_dual3() { return RingSpec::quotient_poly(RingSpec::zn(3), {0, 0, 1}); }
RingSpec spec_m2f2() { return RingSpec::matrix(RingSpec::zn(2)); }

std::vector<RingSpec> field_specs() { return {spec_f2(), spec_f3(), spec_f4(), spec_f5()}; }
std::vector<RingSpec> sr2_specs() { return {spec_z4(), spec_dual2(), spec_dual3(), spec_m2f2()}; }

bool check_field_diameters(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    std::uint32_t qs[] = {2, 3, 4, 5};
    auto specs = field_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto g = DistantGraph::build(ring_create_finite(specs[i]), s.threads);
        std::uint32_t q = qs[i];
        bool complete = true;
        for (std::uint32_t a = 0; a < g.point_count() && complete; ++a)
            for (std::uint32_t b = 0; b < g.point_count() && complete; ++b)
                complete = (a == b) ? !g.adjacent(a, b) : g.adjacent(a, b);
        bool here = g.point_count() == q + 1 && complete && g.connected() &&
                    g.diameter_of_component(0, s.threads) == 1;
        ok = ok && here;
        os << g.ring().name() << ": " << g.point_count() << " pts, "
           << (complete ? "complete" : "NOT complete") << ", diam "
           << g.diameter_of_component(0, s.threads) << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_sr2_diameters(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& spec : sr2_specs()) {
        auto g = DistantGraph::build(ring_create_finite(spec), s.threads);
        std::uint32_t diam = g.diameter_of_component(0, s.threads);
        bool here = g.connected() && diam == 2;
        ok = ok && here;
        os << g.ring().name() << ": connected=" << g.connected() << " diam=" << diam << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_orbit_equals_component(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    auto specs = field_specs();
    for (const auto& sp : sr2_specs()) specs.push_back(sp);
    for (const auto& spec : specs) {
        auto ring = ring_create_finite(spec);
        auto g = DistantGraph::build(ring, s.threads);
        auto orbit = e2_point_orbit(*ring);
        std::uint32_t c_inf = g.component_of(g.index_of_pair(ring->one(), ring->zero()));
        std::vector<std::uint64_t> comp_keys;
        for (std::uint32_t i = 0; i < g.point_count(); ++i)
            if (g.component_of(i) == c_inf) comp_keys.push_back(g.point(i).key());
        std::vector<std::uint64_t> orbit_keys;
        for (const Point& p : orbit) orbit_keys.push_back(p.key());
        bool here = comp_keys == orbit_keys; // both ascend by key
        ok = ok && here;
        os << ring->name() << ": orbit " << orbit.size() << " vs component " << comp_keys.size()
           << (here ? " equal" : " DIFFER") << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_stabilizer_is_ge2(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& spec : {spec_z4(), spec_dual2()}) {
        auto ring = ring_create_finite(spec);
        auto g = DistantGraph::build(ring, s.threads);
        MatrixGroup stab = stabilizer_of_component(g, s.budget, s.threads);
        MatrixGroup ge2 = generate_group(*ring, ge2_generators(*ring), s.budget);
        std::vector<Mat2> gl2 = gl2_enumerate(*ring, s.budget, s.threads);
        bool equal = stab.same_elements(ge2) && stab.order() == gl2.size() && stab.order() == 96;
        ok = ok && equal;
        os << ring->name() << ": |stab|=" << stab.order() << " |GE2|=" << ge2.order()
           << " |GL2|=" << gl2.size() << (equal ? " all equal" : " MISMATCH") << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_chain_word_roundtrip(Suite& s, std::string& detail) {
    auto ring = ring_create_finite(spec_z4());
    auto g = DistantGraph::build(ring, s.threads);
    Rng rng(s.seed);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto chain = random_distant_chain(g, 1 + rng() % 4, rng);
        EWord w = chain_to_word(*ring, chain);
        WordTrace tr = word_to_point(*ring, w);
        if (tr.prefix.size() != chain.size()) {
            ++failures;
            continue;
        }
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (!(tr.prefix[i] == chain[i])) {
                ++failures;
                break;
            }
    }
    detail = "500 random chains of length <= 4 on " + ring->name() + ", " + std::to_string(failures) +
             " trace failures";
    return failures == 0;
}

bool check_word_length_equals_distance(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& spec : {spec_z4(), spec_dual2()}) {
        auto ring = ring_create_finite(spec);
        auto g = DistantGraph::build(ring, s.threads);
        std::uint32_t diam = g.diameter_of_component(0, s.threads);
        auto lengths = min_word_lengths(*ring, g.points(), diam);
        auto dists = g.bfs_from(g.index_of_pair(ring->one(), ring->zero()));
        bool here = true;
        for (std::uint32_t i = 0; i < g.point_count(); ++i) here = here && lengths[i] == dists[i];
        ok = ok && here;
        os << ring->name() << ": " << (here ? "word length = BFS distance on all points"
                                            : "MISMATCH") << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_standard_form_roundtrip(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField k(p);
        Rng rng(s.seed + p);
        int failures = 0;
        for (int trial = 0; trial < 500; ++trial) {
            StandardForm sf = random_standard_form(k, 6, rng);
            StandardForm back = sf_decompose(k, sf_compose(k, sf));
            if (!(back == sf)) ++failures;
        }
        ok = ok && failures == 0;
        os << "F" << p << "[X]: 500 round trips, " << failures << " failures; ";
    }
    detail = os.str();
    return ok;
}

bool check_distance_certificates(Suite& s, std::string& detail) {
    (void)s;
    PrimeField k(2);
    Poly x = Poly::monomial(1, 1);
    std::ostringstream os;
    bool ok = true;
    for (std::uint32_t m = 1; m <= 8; ++m) {
        auto cert = distance_certificate(k, x, m);
        ok = ok && cert.ok;
        os << "m=" << m << (cert.ok ? " ok" : " FAIL") << " ";
    }
    detail = "E(X)^m over F2[X]: " + os.str();
    return ok;
}

bool check_xy_identity(Suite& s, std::string& detail) {
    (void)s;
    std::ostringstream os;
    bool ok = true;
    for (std::uint32_t p : {5u, 2u}) {
        XyReport rep = xy_matrix_check(p, 10);
        bool here = rep.power_identity_ok && rep.det_ok && rep.identity_iff_char_divides && rep.inverse_ok;
        ok = ok && here;
        os << "F" << p << ": power identity " << (rep.power_identity_ok ? "ok" : "FAIL") << ", det "
           << (rep.det_ok ? "ok" : "FAIL") << ", identity at multiples of " << p
           << (rep.identity_iff_char_divides ? " ok" : " FAIL") << "; ";
    }
    detail = os.str();
    return ok;
}

bool check_chain_axioms(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    struct Geometry {
        RingSpec ring;
        std::vector<Elt> subfield;
    };
    std::vector<Geometry> geoms{{spec_dual2(), {0, 1}}, {spec_dual3(), {0, 1, 2}}, {spec_m2f2(), {0, 1}}};
    for (const auto& geom : geoms) {
        auto ring = ring_create_finite(geom.ring);
        auto g = DistantGraph::build(ring, s.threads);
        Subfield k = require_subfield(*ring, geom.subfield);
        auto chains = enumerate_chains(g, k, s.budget, s.threads);
        auto axioms = verify_chain_axioms(g, chains);
        auto cont = chain_component_containment(g, chains);
        bool here = axioms.ok() && cont.ok;
        ok = ok && here;
        os << "Sigma(F" << k.order() << "," << ring->name() << "): " << chains.size() << " chains, "
           << axioms.triple_counterexamples + axioms.pair_counterexamples << " counterexamples; ";
    }
    detail = os.str();
    return ok;
}

bool check_unimodular_admissible(Suite& s, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    std::vector<RingSpec> specs{RingSpec::zn(1),
                                spec_f2(),
                                spec_f3(),
                                spec_z4(),
                                spec_f5(),
                                RingSpec::zn(6),
                                spec_f4(),
                                spec_dual2(),
                                spec_dual3(),
                                RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)}),
                                spec_m2f2()};
    for (const auto& spec : specs) {
        auto ring = ring_create_finite(spec);
        auto rep = unimodular_vs_admissible(*ring, s.threads);
        bool here = rep.uni_implies_admiss && rep.admiss_implies_uni;
        ok = ok && here;
        os << ring->name() << (here ? " ok" : " FAIL: " + rep.counterexample) << "; ";
    }
    detail = os.str();
    return ok;
}

} // namespace

std::vector<CheckResult> run_verification(const Budget& budget, std::uint64_t seed, int threads) {
    Suite s{budget, seed, threads, {}};
    s.run(1, "field projective lines are complete graphs of diameter 1 (F2,F3,F4,F5)",
          check_field_diameters);
    s.run(2, "stable-rank-2 rings: connected, diameter exactly 2 (Z/4, F2[e], F3[e], M2(F2))",
          check_sr2_diameters);
    s.run(3, "E(t)-orbit of R(1,0) equals its graph component (all bundled rings)",
          check_orbit_equals_component);
    s.run(4, "stabilizer of the component = generated GE2 = GL2, order 96 (Z/4, F2[e])",
          check_stabilizer_is_ge2);
    s.run(5, "chain -> word -> prefix trace reproduces 500 random chains (Z/4)",
          check_chain_word_roundtrip);
    s.run(6, "minimal word length equals BFS distance on every point (Z/4, F2[e])",
          check_word_length_equals_distance);
    s.run(7, "standard form: 500 compose/decompose round trips verbatim (F2[X], F3[X])",
          check_standard_form_roundtrip);
    s.run(8, "distance certificates for E(X)^m, m = 1..8 over F2[X]", check_distance_certificates);
    s.run(9, "bivariate power identity, det 1, identity at char multiples (F5, F2)", check_xy_identity);
    s.run(10, "chain geometry axioms hold with zero counterexamples", check_chain_axioms);
    s.run(11, "unimodular <=> admissible by exhaustive pair scan (bundled rings)",
          check_unimodular_admissible);
    return s.results;
}

std::string format_check_line(const CheckResult& c) {
    std::ostringstream os;
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name;
    if (!c.detail.empty()) os << "\n      " << c.detail;
    os << "\n      (" << (int)c.millis << " ms)";
    return os.str();
}

} // namespace pline
