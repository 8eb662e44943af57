#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "pline/graph.hpp"
#include "pline/mat2.hpp"
#include "pline/points.hpp"
#include "pline/ring.hpp"

namespace pline {

/// Resource caps for group machinery; overridable from the CLI and the
/// PLINE_BUDGET environment variable. Exceeding one raises budget_error
/// naming the budget.
struct Budget {
    std::uint32_t gl2_max_ring = 16;     // max |R| for full GL2 enumeration
    std::uint64_t group_max = 1'000'000; // max closure size
};

/// A subgroup of GL2(R): closed under products and inverses, contains
/// the identity (verified after generation).
struct MatrixGroup {
    std::vector<Mat2> elements; // sorted by key, deterministic
    std::vector<Mat2> generators;

    std::uint64_t order() const { return elements.size(); }
    bool contains(const Mat2& m) const;
    bool same_elements(const MatrixGroup& other) const;
};

/// Closure of the generators under right multiplication (inverse-free
/// closure suffices in a finite group). Generators must be invertible.
MatrixGroup generate_group(const FiniteRing& r, std::vector<Mat2> gens, const Budget& budget = {});

/// {E(t) : t in R}
std::vector<Mat2> e2_generators(const FiniteRing& r);
/// {E(t)} together with all invertible diagonal matrices.
std::vector<Mat2> ge2_generators(const FiniteRing& r);

/// All invertible 2x2 matrices, ascending by packed entry index.
std::vector<Mat2> gl2_enumerate(const FiniteRing& r, const Budget& budget = {}, int threads = 1);

/// Closure of {R(1,0)} under p -> p*E(t): the points reachable by
/// parameter words, computed without any group enumeration.
std::vector<Point> e2_point_orbit(const FiniteRing& r);

/// {G in GL2(R) : C*G = C} for C the component of R(1,0), decided by
/// mapping the full component through each candidate.
MatrixGroup stabilizer_of_component(const DistantGraph& g, const Budget& budget = {}, int threads = 1);

/// GE2(R) = GL2(R)? Computed by comparing the generated closure against
/// the full enumeration; a witness in GL2 \ GE2 is reported on failure.
struct Ge2Result {
    bool is_ge2 = false;
    std::uint64_t gl2_order = 0;
    std::uint64_t ge2_order = 0;
    std::uint64_t coset_count = 0; // right cosets of GE2 in GL2
    std::optional<Mat2> witness;
};
Ge2Result is_ge2_ring(const FiniteRing& r, const Budget& budget = {}, int threads = 1);

} // namespace pline
