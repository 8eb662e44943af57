#include "pline/export.hpp"

#include <sstream>

namespace pline {

Json graph_to_json(const DistantGraph& g, int threads) {
    Json j;
    j["ring"] = g.ring().name();
    j["ring_spec"] = Json::parse(g.ring().spec().json_text());
    j["point_count"] = g.point_count();
    auto pts = Json::array();
    for (const Point& p : g.points()) pts.push_back(p.str());
    j["points"] = pts;
    j["loops"] = g.has_loops();
    auto edges = Json::array();
    for (std::uint32_t i = 0; i < g.point_count(); ++i)
        for (std::uint32_t k = i + 1; k < g.point_count(); ++k)
            if (g.adjacent(i, k)) edges.push_back(Json::array({i, k}));
    j["edge_count"] = edges.size();
    j["edges"] = edges;
    j["component_count"] = g.component_count();
    j["components"] = g.component_ids();
    j["connected"] = g.connected();
    j["diameters"] = g.component_diameters(threads);
    return j;
}

std::string graph_to_dot(const DistantGraph& g) {
    std::ostringstream os;
    os << "graph distant {\n";
    os << "  label=\"" << g.ring().name() << "\";\n";
    for (std::uint32_t i = 0; i < g.point_count(); ++i)
        os << "  p" << i << " [label=\"" << g.point(i).str() << "\"];\n";
    for (std::uint32_t i = 0; i < g.point_count(); ++i) {
        if (g.has_loops() && g.adjacent(i, i)) os << "  p" << i << " -- p" << i << ";\n";
        for (std::uint32_t k = i + 1; k < g.point_count(); ++k)
            if (g.adjacent(i, k)) os << "  p" << i << " -- p" << k << ";\n";
    }
    os << "}\n";
    return os.str();
}

Json uniadmiss_to_json(const FiniteRing& r, const UniAdmissReport& rep) {
    Json j;
    j["ring"] = r.name();
    j["pairs"] = rep.pairs;
    j["unimodular"] = rep.unimodular;
    j["admissible"] = rep.admissible;
    j["unimodular_implies_admissible"] = rep.uni_implies_admiss;
    j["admissible_implies_unimodular"] = rep.admiss_implies_uni;
    j["equivalent"] = rep.uni_implies_admiss && rep.admiss_implies_uni;
    if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
    return j;
}

Json ge2_to_json(const FiniteRing& r, const Ge2Result& res) {
    Json j;
    j["ring"] = r.name();
    j["gl2_order"] = res.gl2_order;
    j["ge2_order"] = res.ge2_order;
    j["is_ge2_ring"] = res.is_ge2;
    j["right_coset_count"] = res.coset_count;
    if (res.witness) j["witness_outside_ge2"] = mat_str(r, *res.witness);
    return j;
}

Json chains_to_json(const DistantGraph& g, const std::vector<Chain>& chains,
                    const ChainAxiomReport& axioms, const ContainmentReport& containment) {
    Json j;
    j["ring"] = g.ring().name();
    j["chain_count"] = chains.size();
    j["chain_size"] = chains.empty() ? 0 : chains.front().point_ids.size();
    auto arr = Json::array();
    for (const Chain& c : chains) {
        Json cj;
        cj["points"] = c.point_ids;
        cj["witness"] = mat_str(g.ring(), c.witness);
        arr.push_back(cj);
    }
    j["chains"] = arr;
    j["axiom_three_points_ok"] = axioms.triple_counterexamples == 0;
    j["axiom_distant_iff_joined_ok"] = axioms.pair_counterexamples == 0;
    j["triples_checked"] = axioms.triples_checked;
    j["pairs_checked"] = axioms.pairs_checked;
    j["component_containment_ok"] = containment.ok;
    if (!axioms.first_counterexample.empty()) j["counterexample"] = axioms.first_counterexample;
    return j;
}

Json xy_to_json(const XyReport& rep) {
    Json j;
    j["field"] = "F" + std::to_string(rep.p);
    j["nmax"] = rep.nmax;
    j["power_identity_ok"] = rep.power_identity_ok;
    j["det_is_one"] = rep.det_ok;
    j["inverse_and_conjugation_ok"] = rep.inverse_ok;
    j["identity_exactly_at_char_multiples"] = rep.identity_iff_char_divides;
    j["identity_at"] = rep.identity_at;
    j["b12_conjugate"] = rep.conjugate_b12;
    return j;
}

} // namespace pline
