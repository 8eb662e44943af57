#include "pline/points.hpp"

#include <algorithm>

#include "pline/kernels.hpp"

namespace pline {

bool is_unimodular(const FiniteRing& r, Elt a, Elt b) { return r.pair_unimodular(a, b); }

bool is_admissible_exhaustive(const FiniteRing& r, Elt a, Elt b) {
    const std::uint32_t n = r.size();
    for (Elt c = 0; c < n; ++c)
        for (Elt d = 0; d < n; ++d)
            if (mat_invertible(r, {a, b, c, d})) return true;
    return false;
}

bool is_admissible(const FiniteRing& r, Elt a, Elt b) {
    if (r.commutative() || r.stable_rank2_known()) return r.pair_unimodular(a, b);
    return is_admissible_exhaustive(r, a, b);
}

Point point_make(const FiniteRing& r, Elt a, Elt b) {
    if (!is_admissible(r, a, b))
        throw domain_error(r.name() + ": pair (" + r.elt_str(a) + "," + r.elt_str(b) +
                           ") is not admissible");
    Point best{&r, a, b};
    for (Elt u = 0; u < r.size(); ++u) {
        if (!r.is_unit(u)) continue;
        Elt ua = r.mul(u, a), ub = r.mul(u, b);
        if (ua < best.a || (ua == best.a && ub < best.b)) {
            best.a = ua;
            best.b = ub;
        }
    }
    return best;
}

bool point_eq(const Point& p, const Point& q) { return p == q; }

std::vector<Point> enumerate_points(const FiniteRing& r) {
    const std::uint32_t n = r.size();
    std::vector<Point> out;
    // scanning pairs in ascending order visits each unit orbit at its
    // minimum first; mark the whole orbit and move on
    std::vector<std::uint8_t> seen((std::size_t)n * n, 0);
    std::vector<Elt> units = r.units();
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            if (seen[(std::size_t)a * n + b]) continue;
            if (!is_admissible(r, a, b)) continue;
            out.push_back(Point{&r, a, b});
            for (Elt u : units) seen[(std::size_t)r.mul(u, a) * n + r.mul(u, b)] = 1;
        }
    return out;
}

bool distant(const Point& p, const Point& q) {
    if (p.ring == nullptr || q.ring == nullptr) throw domain_error("distant: uninitialized point");
    if (p.ring != q.ring) throw domain_error("distant: points over different rings");
    return mat_invertible(*p.ring, {p.a, p.b, q.a, q.b});
}

UniAdmissReport unimodular_vs_admissible(const FiniteRing& r, int threads) {
    PairClasses pc = classify_pairs(r, threads);
    UniAdmissReport rep;
    const std::uint32_t n = r.size();
    rep.pairs = (std::uint64_t)n * n;
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            std::size_t i = (std::size_t)a * n + b;
            bool uni = pc.unimodular[i] != 0, adm = pc.admissible[i] != 0;
            rep.unimodular += uni;
            rep.admissible += adm;
            if (uni && !adm && rep.uni_implies_admiss) {
                rep.uni_implies_admiss = false;
                rep.counterexample = "(" + r.elt_str(a) + "," + r.elt_str(b) + ") unimodular but not admissible";
            }
            if (adm && !uni && rep.admiss_implies_uni) {
                rep.admiss_implies_uni = false;
                rep.counterexample = "(" + r.elt_str(a) + "," + r.elt_str(b) + ") admissible but not unimodular";
            }
        }
    return rep;
}

} // namespace pline
