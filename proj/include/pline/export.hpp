#pragma once

#include <string>

#include "json.hpp"
#include "pline/chains.hpp"
#include "pline/graph.hpp"
#include "pline/orbits.hpp"
#include "pline/points.hpp"
#include "pline/standard_form.hpp"

namespace pline {

using Json = nlohmann::ordered_json;

/// {ring, points, loops, edges, components, diameters}; key order and
/// array order are deterministic (points ascend by index pair, edges
/// lexicographic with i < j).
Json graph_to_json(const DistantGraph& g, int threads = 1);

/// One node per canonical point labeled "R(a,b)", one edge per distant
/// pair; a self-loop on the single point when 1 = 0.
std::string graph_to_dot(const DistantGraph& g);

Json uniadmiss_to_json(const FiniteRing& r, const UniAdmissReport& rep);
Json ge2_to_json(const FiniteRing& r, const Ge2Result& res);
Json chains_to_json(const DistantGraph& g, const std::vector<Chain>& chains,
                    const ChainAxiomReport& axioms, const ContainmentReport& containment);
Json xy_to_json(const XyReport& rep);

} // namespace pline
