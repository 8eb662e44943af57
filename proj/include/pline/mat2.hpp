#pragma once

#include <cstdint>
#include <string>

#include "pline/ring.hpp"

namespace pline {

/// 2x2 matrix over a finite ring, row-major [[a,b],[c,d]].
/// All entries must belong to the same ring; the ring is passed alongside.
struct Mat2 {
    Elt a = 0, b = 0, c = 0, d = 0;

    bool operator==(const Mat2&) const = default;
};

Mat2 mat_identity(const FiniteRing& r);
Mat2 mat_mul(const FiniteRing& r, const Mat2& x, const Mat2& y);
Mat2 mat_neg(const FiniteRing& r, const Mat2& x);
std::string mat_str(const FiniteRing& r, const Mat2& x);

/// Row-vector action (u,v) -> (u,v)*m; the module is a left module, so
/// this action is left-linear.
void mat_apply_row(const FiniteRing& r, Elt u, Elt v, const Mat2& m, Elt& out_u, Elt& out_v);

/// det = a*d - b*c; meaningful (and allowed) only over commutative rings.
Elt mat_det(const FiniteRing& r, const Mat2& m);

/// Invertibility in the matrix ring M2(R). Commutative rings use the
/// det-is-a-unit test; otherwise injectivity of the row action on all
/// |R|^2 row vectors decides (finite => injective <=> two-sided unit).
bool mat_invertible(const FiniteRing& r, const Mat2& m);
/// The exhaustive injectivity path, kept as an independent reference.
bool mat_invertible_scan(const FiniteRing& r, const Mat2& m);
/// Two-sided inverse; throws domain_error when not invertible.
Mat2 mat_inverse(const FiniteRing& r, const Mat2& m);

/// E(t) = [[t,1],[-1,0]]
Mat2 gen_e(const FiniteRing& r, Elt t);
/// B12(t) = [[1,t],[0,1]]
Mat2 gen_b12(const FiniteRing& r, Elt t);
/// B21(t) = [[1,0],[t,1]]
Mat2 gen_b21(const FiniteRing& r, Elt t);
/// diag(u,v); u and v must be units.
Mat2 gen_diag(const FiniteRing& r, Elt u, Elt v);

/// Factor M = x * xp^-1 for matrices sharing their first row, with xp
/// invertible. M always has the shape [[1,0],[s,u]]; returns (s,u).
/// x is invertible exactly if u is a unit.
struct LemmaFactors {
    Elt s = 0, u = 0;
};
LemmaFactors lemma_factor(const FiniteRing& r, const Mat2& x, const Mat2& xp);

/// Dense packing of a matrix into a 64-bit key (entries are < 2^16 by
/// the ring-size cap); used for hashing in group closures.
std::uint64_t mat_key(const Mat2& m);
Mat2 mat_from_key(std::uint64_t key);

} // namespace pline
