#include "pline/mat2.hpp"

namespace pline {

Mat2 mat_identity(const FiniteRing& r) { return {r.one(), r.zero(), r.zero(), r.one()}; }

Mat2 mat_mul(const FiniteRing& r, const Mat2& x, const Mat2& y) {
    return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
            r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

Mat2 mat_neg(const FiniteRing& r, const Mat2& x) {
    return {r.neg(x.a), r.neg(x.b), r.neg(x.c), r.neg(x.d)};
}

std::string mat_str(const FiniteRing& r, const Mat2& x) {
    return "[[" + r.elt_str(x.a) + "," + r.elt_str(x.b) + "],[" + r.elt_str(x.c) + "," + r.elt_str(x.d) +
           "]]";
}

void mat_apply_row(const FiniteRing& r, Elt u, Elt v, const Mat2& m, Elt& out_u, Elt& out_v) {
    out_u = r.add(r.mul(u, m.a), r.mul(v, m.c));
    out_v = r.add(r.mul(u, m.b), r.mul(v, m.d));
}

Elt mat_det(const FiniteRing& r, const Mat2& m) {
    if (!r.commutative())
        throw capability_error(r.name() + ": determinant is defined here only over commutative rings");
    return r.sub(r.mul(m.a, m.d), r.mul(m.b, m.c));
}

bool mat_invertible_scan(const FiniteRing& r, const Mat2& m) {
    // kernel of the additive map (u,v) -> (u,v)*m must be trivial
    const std::uint32_t n = r.size();
    for (Elt u = 0; u < n; ++u)
        for (Elt v = 0; v < n; ++v) {
            if (u == 0 && v == 0) continue;
            Elt x, y;
            mat_apply_row(r, u, v, m, x, y);
            if (x == r.zero() && y == r.zero()) return false;
        }
    return true;
}

bool mat_invertible(const FiniteRing& r, const Mat2& m) {
    if (r.commutative()) return r.is_unit(mat_det(r, m));
    return mat_invertible_scan(r, m);
}

Mat2 mat_inverse(const FiniteRing& r, const Mat2& m) {
    if (r.commutative()) {
        Elt det = mat_det(r, m);
        if (!r.is_unit(det))
            throw domain_error(r.name() + ": matrix " + mat_str(r, m) + " is not invertible");
        Elt di = r.unit_inverse(det);
        return {r.mul(di, m.d), r.mul(di, r.neg(m.b)), r.mul(di, r.neg(m.c)), r.mul(di, m.a)};
    }
    // find the rows v with v*m = e_i among all |R|^2 row vectors
    const std::uint32_t n = r.size();
    Mat2 inv;
    bool f1 = false, f2 = false;
    for (Elt u = 0; u < n && !(f1 && f2); ++u)
        for (Elt v = 0; v < n; ++v) {
            Elt x, y;
            mat_apply_row(r, u, v, m, x, y);
            if (!f1 && x == r.one() && y == r.zero()) {
                inv.a = u;
                inv.b = v;
                f1 = true;
            }
            if (!f2 && x == r.zero() && y == r.one()) {
                inv.c = u;
                inv.d = v;
                f2 = true;
            }
        }
    if (!f1 || !f2) throw domain_error(r.name() + ": matrix " + mat_str(r, m) + " is not invertible");
    return inv;
}

Mat2 gen_e(const FiniteRing& r, Elt t) { return {t, r.one(), r.neg(r.one()), r.zero()}; }

Mat2 gen_b12(const FiniteRing& r, Elt t) { return {r.one(), t, r.zero(), r.one()}; }

Mat2 gen_b21(const FiniteRing& r, Elt t) { return {r.one(), r.zero(), t, r.one()}; }

Mat2 gen_diag(const FiniteRing& r, Elt u, Elt v) {
    if (!r.is_unit(u) || !r.is_unit(v))
        throw domain_error(r.name() + ": diag(" + r.elt_str(u) + "," + r.elt_str(v) +
                           ") needs two units");
    return {u, r.zero(), r.zero(), v};
}

LemmaFactors lemma_factor(const FiniteRing& r, const Mat2& x, const Mat2& xp) {
    if (x.a != xp.a || x.b != xp.b)
        throw precondition_error("lemma_factor: the matrices do not share their first row");
    Mat2 m = mat_mul(r, x, mat_inverse(r, xp));
    if (m.a != r.one() || m.b != r.zero())
        throw internal_error("lemma_factor: X*X'^-1 is not of the form [[1,0],[s,u]]");
    return {m.c, m.d};
}

std::uint64_t mat_key(const Mat2& m) {
    return ((std::uint64_t)m.a << 48) | ((std::uint64_t)m.b << 32) | ((std::uint64_t)m.c << 16) |
           (std::uint64_t)m.d;
}

Mat2 mat_from_key(std::uint64_t key) {
    return {(Elt)(key >> 48), (Elt)((key >> 32) & 0xffff), (Elt)((key >> 16) & 0xffff),
            (Elt)(key & 0xffff)};
}

} // namespace pline
