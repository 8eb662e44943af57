#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pline/mat2.hpp"
#include "pline/ring.hpp"

namespace pline {

/// A point R(a,b) of the projective line, held by its canonical
/// representative: the lexicographic minimum of {(u*a, u*b) : u unit}
/// under element-index order. Pairs must be admissible.
struct Point {
    const FiniteRing* ring = nullptr;
    Elt a = 0, b = 0;

    bool operator==(const Point& o) const { return ring == o.ring && a == o.a && b == o.b; }
    std::uint64_t key() const { return ((std::uint64_t)a << 32) | b; }
    std::string str() const { return "R(" + ring->elt_str(a) + "," + ring->elt_str(b) + ")"; }
};

/// (a,b) occurs as the first row of an invertible matrix. Commutative
/// rings and rings flagged stable-rank-2 use the unimodularity
/// shortcut; everything else searches completions exhaustively.
bool is_admissible(const FiniteRing& r, Elt a, Elt b);

/// Completion search over all (c,d), independent of any shortcut.
bool is_admissible_exhaustive(const FiniteRing& r, Elt a, Elt b);

/// a*x' + b*y' = 1 solvable.
bool is_unimodular(const FiniteRing& r, Elt a, Elt b);

/// Canonicalize an admissible pair; throws domain_error otherwise.
Point point_make(const FiniteRing& r, Elt a, Elt b);

bool point_eq(const Point& p, const Point& q);

/// All points of the projective line, canonical representatives in
/// ascending (a,b) index order.
std::vector<Point> enumerate_points(const FiniteRing& r);

/// Stacked representatives form an invertible matrix. Independent of
/// the representative choice; throws domain_error on mixed rings.
bool distant(const Point& p, const Point& q);

/// Exhaustive classification of all pairs as unimodular/admissible,
/// computed along two independent routes (witness scan vs completion
/// search). The two implications of interest are reported separately.
struct UniAdmissReport {
    std::uint64_t pairs = 0;
    std::uint64_t unimodular = 0;
    std::uint64_t admissible = 0;
    bool uni_implies_admiss = true;
    bool admiss_implies_uni = true;
    std::string counterexample; // empty when both directions hold
};
UniAdmissReport unimodular_vs_admissible(const FiniteRing& r, int threads = 1);

} // namespace pline
