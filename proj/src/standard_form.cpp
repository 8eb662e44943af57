#include "pline/standard_form.hpp"

#include <sstream>

namespace pline {

PolyMat2 pm_identity() {
    return {Poly::constant(1), Poly::zero(), Poly::zero(), Poly::constant(1)};
}

PolyMat2 pm_mul(const PrimeField& k, const PolyMat2& x, const PolyMat2& y) {
    return {poly_add(k, poly_mul(k, x.a, y.a), poly_mul(k, x.b, y.c)),
            poly_add(k, poly_mul(k, x.a, y.b), poly_mul(k, x.b, y.d)),
            poly_add(k, poly_mul(k, x.c, y.a), poly_mul(k, x.d, y.c)),
            poly_add(k, poly_mul(k, x.c, y.b), poly_mul(k, x.d, y.d))};
}

PolyMat2 pm_e(const PrimeField& k, const Poly& t) {
    return {t, Poly::constant(1), Poly::constant(k.neg(1)), Poly::zero()};
}

PolyMat2 pm_b12(const Poly& t) { return {Poly::constant(1), t, Poly::zero(), Poly::constant(1)}; }

PolyMat2 pm_b21(const Poly& t) { return {Poly::constant(1), Poly::zero(), t, Poly::constant(1)}; }

PolyMat2 pm_diag(std::uint32_t u, std::uint32_t v) {
    return {Poly::constant(u), Poly::zero(), Poly::zero(), Poly::constant(v)};
}

PolyMat2 pm_pow(const PrimeField& k, const PolyMat2& m, std::uint32_t n) {
    PolyMat2 out = pm_identity();
    for (std::uint32_t i = 0; i < n; ++i) out = pm_mul(k, out, m);
    return out;
}

Poly pm_det(const PrimeField& k, const PolyMat2& m) {
    return poly_sub(k, poly_mul(k, m.a, m.d), poly_mul(k, m.b, m.c));
}

std::string pm_str(const PrimeField& k, const PolyMat2& m) {
    return "[[" + poly_str(k, m.a) + ", " + poly_str(k, m.b) + "], [" + poly_str(k, m.c) + ", " +
           poly_str(k, m.d) + "]]";
}

PolyMat2 sf_compose(const PrimeField& k, const StandardForm& sf) {
    PolyMat2 m = pm_diag(sf.u, sf.v);
    for (std::size_t i = sf.params.size(); i-- > 0;) m = pm_mul(k, m, pm_e(k, sf.params[i]));
    return m;
}

namespace {

// Word normalization: remove zero/unit parameters from middle positions
// using E(a)E(0)E(b) = -E(a+b) and
// E(a)E(e)E(b) = E(a - e^-1) diag(e, e^-1) E(b - e^-1) for units e,
// commuting spawned diagonals to the front via
// E(s) diag(α,β) = diag(β,α) E(β^-1 s α).
void normalize_word(const PrimeField& k, std::uint32_t& u, std::uint32_t& v, std::vector<Poly>& t) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (t.size() == 2 && t[0].is_zero() && t[1].is_zero()) {
            t.clear();
            u = k.neg(u);
            v = k.neg(v);
            continue;
        }
        for (std::size_t i = 1; i + 1 < t.size(); ++i) {
            if (t[i].is_zero()) {
                Poly merged = poly_add(k, t[i + 1], t[i - 1]);
                t.erase(t.begin() + (long)i, t.begin() + (long)i + 2);
                t[i - 1] = std::move(merged);
                u = k.neg(u);
                v = k.neg(v);
                changed = true;
                break;
            }
            if (poly_is_unit(t[i])) {
                std::uint32_t e = t[i].c[0];
                Poly einv = Poly::constant(k.inv(e));
                Poly x = poly_sub(k, t[i + 1], einv);
                Poly y = poly_sub(k, t[i - 1], einv);
                t[i - 1] = std::move(y);
                t[i] = std::move(x);
                t.erase(t.begin() + (long)i + 1);
                // commute diag(e, e^-1) from the right of position i to the front
                std::uint32_t da = e, db = k.inv(e);
                for (std::size_t j = i; j < t.size(); ++j) {
                    std::uint32_t scale = k.mul(k.inv(db), da);
                    t[j] = poly_scale(k, scale, t[j]);
                    std::swap(da, db);
                }
                u = k.mul(u, da);
                v = k.mul(v, db);
                changed = true;
                break;
            }
        }
    }
}

} // namespace

StandardForm sf_decompose(const PrimeField& k, const PolyMat2& m, DecomposeStats* stats) {
    Poly det = pm_det(k, m);
    if (det.degree() != 0)
        throw domain_error("decompose: matrix is not invertible over K[X], det = " + poly_str(k, det));

    PolyMat2 cur = m;
    std::vector<Poly> sigma; // outermost factor first
    while (!(cur.b.is_zero() && cur.c.is_zero())) {
        Poly t;
        if (!cur.c.is_zero()) {
            if (stats && cur.c.degree() >= 1) stats->division_degrees.push_back(cur.c.degree());
            t = poly_neg(k, poly_divmod(k, cur.a, cur.c).first);
        } else {
            // the corner is a constant unit here; one E-twist empties b
            t = poly_neg(k, poly_divmod(k, cur.b, cur.d).first);
        }
        // E(t)^-1 * cur, with E(t)^-1 = [[0,-1],[1,t]]
        PolyMat2 next{poly_neg(k, cur.c), poly_neg(k, cur.d),
                      poly_add(k, cur.a, poly_mul(k, t, cur.c)),
                      poly_add(k, cur.b, poly_mul(k, t, cur.d))};
        cur = std::move(next);
        sigma.push_back(std::move(t));
        if (stats) ++stats->steps;
        if (sigma.size() > 4 * (std::size_t)(m.a.c.size() + m.b.c.size() + m.c.c.size() + m.d.c.size() + 8))
            throw internal_error("decompose: reduction failed to terminate");
    }

    // cur = diag(du, dv); commute it to the front, twisting parameters
    std::uint32_t du = cur.a.c.at(0), dv = cur.d.c.at(0);
    for (std::size_t idx = sigma.size(); idx-- > 0;) {
        std::uint32_t scale = k.mul(k.inv(dv), du);
        sigma[idx] = poly_scale(k, scale, sigma[idx]);
        std::swap(du, dv);
    }

    StandardForm sf;
    sf.u = du;
    sf.v = dv;
    sf.params.assign(sigma.rbegin(), sigma.rend());
    normalize_word(k, sf.u, sf.v, sf.params);

    for (std::size_t i = 1; i + 1 < sf.params.size(); ++i)
        if (sf.params[i].degree() < 1)
            throw internal_error("decompose: middle parameter of degree < 1 survived normalization");
    if (!(sf_compose(k, sf) == m))
        throw internal_error("decompose: recomposition does not reproduce the input");
    return sf;
}

StandardForm sf_modified(const PrimeField& k, const StandardForm& sf) {
    if (!sf.params.empty()) return sf;
    StandardForm out = sf;
    out.u = k.neg(sf.u);
    out.v = k.neg(sf.v);
    out.params = {Poly::zero(), Poly::zero()};
    return out;
}

std::string sf_str(const PrimeField& k, const StandardForm& sf) {
    std::ostringstream os;
    os << "diag(" << sf.u << "," << sf.v << ")";
    for (std::size_t i = sf.params.size(); i-- > 0;) os << " E(" << poly_str(k, sf.params[i]) << ")";
    return os.str();
}

DistanceCertificate distance_certificate(const PrimeField& k, const Poly& t, std::uint32_t m) {
    if (t.degree() < 1)
        throw precondition_error("distance_certificate: t must be nonzero and not a unit, got " +
                                 poly_str(k, t));
    DistanceCertificate cert;
    cert.m = m;
    cert.form = sf_decompose(k, pm_pow(k, pm_e(k, t), m));
    cert.ok = cert.form.u == 1 && cert.form.v == 1 && cert.form.params.size() == m;
    if (cert.ok)
        for (const Poly& p : cert.form.params)
            if (!(p == t)) {
                cert.ok = false;
                break;
            }
    return cert;
}

// ---------------------------------------------------------------------------
// bivariate power identity

BivarMat2 bm_identity() {
    return {Poly2::constant(1), Poly2::zero(), Poly2::zero(), Poly2::constant(1)};
}

BivarMat2 bm_mul(const PrimeField& k, const BivarMat2& x, const BivarMat2& y) {
    return {poly2_add(k, poly2_mul(k, x.a, y.a), poly2_mul(k, x.b, y.c)),
            poly2_add(k, poly2_mul(k, x.a, y.b), poly2_mul(k, x.b, y.d)),
            poly2_add(k, poly2_mul(k, x.c, y.a), poly2_mul(k, x.d, y.c)),
            poly2_add(k, poly2_mul(k, x.c, y.b), poly2_mul(k, x.d, y.d))};
}

Poly2 bm_det(const PrimeField& k, const BivarMat2& m) {
    return poly2_sub(k, poly2_mul(k, m.a, m.d), poly2_mul(k, m.b, m.c));
}

XyReport xy_matrix_check(std::uint32_t p, std::uint32_t nmax) {
    PrimeField k(p);
    XyReport rep;
    rep.p = p;
    rep.nmax = nmax;

    Poly2 x1x2 = Poly2::monomial(1, 1, 1);
    Poly2 x1sq = Poly2::monomial(1, 2, 0);
    Poly2 x2sq = Poly2::monomial(1, 0, 2);
    Poly2 one = Poly2::constant(1);

    BivarMat2 a{poly2_add(k, one, x1x2), x1sq, poly2_neg(k, x2sq), poly2_sub(k, one, x1x2)};
    BivarMat2 a_inv{poly2_sub(k, one, x1x2), poly2_neg(k, x1sq), x2sq, poly2_add(k, one, x1x2)};

    rep.det_ok = bm_det(k, a) == Poly2::constant(1);
    rep.inverse_ok = bm_mul(k, a, a_inv) == bm_identity() && bm_mul(k, a_inv, a) == bm_identity();

    rep.power_identity_ok = true;
    BivarMat2 cur = bm_identity();
    rep.identity_iff_char_divides = true;
    for (std::uint32_t n = 1; n <= nmax; ++n) {
        cur = bm_mul(k, cur, a);
        std::uint32_t nn = n % p;
        BivarMat2 expect{poly2_add(k, one, poly2_scale(k, nn, x1x2)), poly2_scale(k, nn, x1sq),
                         poly2_neg(k, poly2_scale(k, nn, x2sq)),
                         poly2_sub(k, one, poly2_scale(k, nn, x1x2))};
        if (!(cur == expect)) rep.power_identity_ok = false;
        bool is_id = cur == bm_identity();
        if (is_id) rep.identity_at.push_back(n);
        if (is_id != (n % p == 0)) rep.identity_iff_char_divides = false;
    }

    // conjugate of B12(1): lands outside GE2 over K[X1,X2]; reported for
    // inspection, self-checked via C * A = A * B12(1)
    BivarMat2 b12{one, Poly2::constant(1), Poly2::zero(), one};
    BivarMat2 conj = bm_mul(k, bm_mul(k, a, b12), a_inv);
    if (!(bm_mul(k, conj, a) == bm_mul(k, a, b12))) rep.inverse_ok = false;
    rep.conjugate_b12 = "[[" + poly2_str(k, conj.a) + ", " + poly2_str(k, conj.b) + "], [" +
                        poly2_str(k, conj.c) + ", " + poly2_str(k, conj.d) + "]]";
    return rep;
}

} // namespace pline
