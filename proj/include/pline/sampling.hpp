#pragma once

#include <random>

#include "pline/graph.hpp"
#include "pline/mat2.hpp"
#include "pline/poly.hpp"
#include "pline/ring.hpp"
#include "pline/standard_form.hpp"

namespace pline {

// Seeded sampling used by property tests and the verification suite.
// All draws go through one mt19937_64 so runs are bit-reproducible.
using Rng = std::mt19937_64;

inline Elt random_elt(const FiniteRing& r, Rng& rng) {
    return (Elt)(rng() % r.size());
}

inline Elt random_unit(const FiniteRing& r, Rng& rng) {
    while (true) {
        Elt a = random_elt(r, rng);
        if (r.is_unit(a)) return a;
    }
}

inline Mat2 random_mat(const FiniteRing& r, Rng& rng) {
    return {random_elt(r, rng), random_elt(r, rng), random_elt(r, rng), random_elt(r, rng)};
}

inline Mat2 random_invertible_mat(const FiniteRing& r, Rng& rng) {
    while (true) {
        Mat2 m = random_mat(r, rng);
        if (mat_invertible(r, m)) return m;
    }
}

/// Random walk along edges from R(1,0); length = number of steps.
inline std::vector<Point> random_distant_chain(const DistantGraph& g, std::size_t length, Rng& rng) {
    const FiniteRing& r = g.ring();
    std::vector<Point> chain{point_make(r, r.one(), r.zero())};
    std::uint32_t cur = g.index_of_pair(r.one(), r.zero());
    for (std::size_t s = 0; s < length; ++s) {
        std::vector<std::uint32_t> nbrs;
        for (std::uint32_t j = 0; j < g.point_count(); ++j)
            if (g.adjacent(cur, j)) nbrs.push_back(j);
        cur = nbrs[rng() % nbrs.size()];
        chain.push_back(g.point(cur));
    }
    return chain;
}

/// Random polynomial over F_p of degree exactly deg (deg >= 0).
inline Poly random_poly_exact(const PrimeField& k, int deg, Rng& rng) {
    std::vector<std::uint32_t> c((std::size_t)deg + 1);
    for (int i = 0; i < deg; ++i) c[(std::size_t)i] = (std::uint32_t)(rng() % k.p());
    c[(std::size_t)deg] = 1 + (std::uint32_t)(rng() % (k.p() - 1));
    return poly_normalize(std::move(c));
}

/// Random polynomial of degree <= max_deg, possibly zero.
inline Poly random_poly_upto(const PrimeField& k, int max_deg, Rng& rng) {
    std::vector<std::uint32_t> c((std::size_t)max_deg + 1);
    for (auto& v : c) v = (std::uint32_t)(rng() % k.p());
    return poly_normalize(std::move(c));
}

/// Random canonical standard form: length 1..max_len, middle parameter
/// degrees 1..3, end parameters of degree <= 3 (zero and units allowed,
/// but not both ends zero when the length is 2).
inline StandardForm random_standard_form(const PrimeField& k, std::size_t max_len, Rng& rng) {
    StandardForm sf;
    sf.u = 1 + (std::uint32_t)(rng() % (k.p() - 1));
    sf.v = 1 + (std::uint32_t)(rng() % (k.p() - 1));
    std::size_t n = 1 + rng() % max_len;
    sf.params.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool middle = i > 0 && i + 1 < n;
        if (middle)
            sf.params[i] = random_poly_exact(k, 1 + (int)(rng() % 3), rng);
        else
            sf.params[i] = random_poly_upto(k, 3, rng);
    }
    if (n == 2 && sf.params[0].is_zero() && sf.params[1].is_zero())
        sf.params[1] = random_poly_exact(k, 1 + (int)(rng() % 3), rng);
    return sf;
}

} // namespace pline
