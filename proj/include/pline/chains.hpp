#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pline/graph.hpp"
#include "pline/mat2.hpp"
#include "pline/orbits.hpp"
#include "pline/ring.hpp"

namespace pline {

/// A subfield K of R, given by its element set: contains 0 and 1, closed
/// under add/neg/mul, every nonzero element a unit of R with its inverse
/// in the set.
struct Subfield {
    std::vector<Elt> elements; // sorted ascending

    std::size_t order() const { return elements.size(); }
};

struct SubfieldCheck {
    bool ok = false;
    std::string violation; // failing axiom with the elements involved
    Subfield field;
};

/// Validate a candidate element set; reports the first violated axiom.
SubfieldCheck subfield_check(const FiniteRing& r, std::vector<Elt> subset);

/// As subfield_check but throws domain_error on violations.
Subfield require_subfield(const FiniteRing& r, std::vector<Elt> subset);

/// A K-chain: image of the base chain {R(1,x) : x in K} + {R(0,1)}
/// under one element of GL2(R), stored as sorted point indices into the
/// graph plus one witness matrix mapping the base chain onto it.
struct Chain {
    std::vector<std::uint32_t> point_ids; // sorted, size |K|+1
    Mat2 witness;
};

/// All K-chains, deduplicated by point set, deterministic order. The
/// base chain comes first with the identity witness.
std::vector<Chain> enumerate_chains(const DistantGraph& g, const Subfield& k,
                                    const Budget& budget = {}, int threads = 1);

/// Incidence axioms: (1) any three mutually distant points lie on a
/// common chain; (2) two distinct points are distant exactly if they lie
/// on a common chain. Exhaustive; all counterexample counts must be 0.
struct ChainAxiomReport {
    std::uint64_t chains = 0;
    std::uint64_t triples_checked = 0;
    std::uint64_t triple_counterexamples = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t pair_counterexamples = 0;
    std::string first_counterexample;
    bool ok() const { return triple_counterexamples == 0 && pair_counterexamples == 0; }
};
ChainAxiomReport verify_chain_axioms(const DistantGraph& g, const std::vector<Chain>& chains);

/// Every chain lies inside a single connected component.
struct ContainmentReport {
    bool ok = true;
    std::uint64_t chains = 0;
    std::string first_violation;
};
ContainmentReport chain_component_containment(const DistantGraph& g, const std::vector<Chain>& chains);

} // namespace pline
