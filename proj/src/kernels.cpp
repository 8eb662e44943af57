#include "pline/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pline {

namespace {

// one full adjacency row; rows are independent, so the parallel kernel
// shards over i without write conflicts
void adjacency_row(const FiniteRing& r, const std::vector<Point>& pts, std::uint32_t i, BitMatrix& out) {
    const Point& p = pts[i];
    for (std::uint32_t j = 0; j < pts.size(); ++j)
        if (mat_invertible(r, {p.a, p.b, pts[j].a, pts[j].b})) out.set(i, j);
}

void classify_row(const FiniteRing& r, Elt a, const std::vector<std::uint8_t>* inv_table,
                  PairClasses& out) {
    const std::uint32_t n = r.size();
    // witnesses for a*x' + b*y' = 1: precompute the image of y' -> b*y'
    std::vector<std::uint8_t> img(n);
    for (Elt b = 0; b < n; ++b) {
        std::fill(img.begin(), img.end(), 0);
        for (Elt y = 0; y < n; ++y) img[r.mul(b, y)] = 1;
        bool uni = false;
        for (Elt x = 0; x < n && !uni; ++x) uni = img[r.sub(r.one(), r.mul(a, x))] != 0;

        bool adm = false;
        if (inv_table) {
            std::size_t base = ((std::size_t)a * n + b) * n * n;
            for (std::size_t k = 0; k < (std::size_t)n * n && !adm; ++k) adm = (*inv_table)[base + k] != 0;
        } else {
            for (Elt c = 0; c < n && !adm; ++c)
                for (Elt d = 0; d < n && !adm; ++d) adm = mat_invertible(r, {a, b, c, d});
        }
        out.unimodular[(std::size_t)a * n + b] = uni;
        out.admissible[(std::size_t)a * n + b] = adm;
    }
}

std::uint32_t bfs_eccentricity(const BitMatrix& adj, std::uint32_t source) {
    auto d = bfs_distances(adj, source);
    std::uint32_t ecc = 0;
    for (std::uint32_t v : d)
        if (v != UINT32_MAX) ecc = std::max(ecc, v);
    return ecc;
}

} // namespace

BitMatrix adjacency_serial(const FiniteRing& r, const std::vector<Point>& pts) {
    BitMatrix out((std::uint32_t)pts.size());
    for (std::uint32_t i = 0; i < pts.size(); ++i) adjacency_row(r, pts, i, out);
    return out;
}

BitMatrix adjacency(const FiniteRing& r, const std::vector<Point>& pts, int threads) {
#ifdef _OPENMP
    if (threads > 1) {
        BitMatrix out((std::uint32_t)pts.size());
        const int n = (int)pts.size();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (int i = 0; i < n; ++i) adjacency_row(r, pts, (std::uint32_t)i, out);
        return out;
    }
#endif
    (void)threads;
    return adjacency_serial(r, pts);
}

std::vector<std::uint8_t> invertibility_table_serial(const FiniteRing& r) {
    const std::uint64_t n = r.size();
    std::vector<std::uint8_t> out(n * n * n * n);
    for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
        Mat2 m{(Elt)(idx / (n * n * n)), (Elt)(idx / (n * n) % n), (Elt)(idx / n % n), (Elt)(idx % n)};
        out[idx] = mat_invertible(r, m);
    }
    return out;
}

std::vector<std::uint8_t> invertibility_table(const FiniteRing& r, int threads) {
#ifdef _OPENMP
    if (threads > 1) {
        const std::uint64_t n = r.size();
        std::vector<std::uint8_t> out(n * n * n * n);
        const long long total = (long long)out.size();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long idx = 0; idx < total; ++idx) {
            Mat2 m{(Elt)(idx / (long long)(n * n * n)), (Elt)(idx / (long long)(n * n) % n),
                   (Elt)(idx / (long long)n % n), (Elt)(idx % n)};
            out[idx] = mat_invertible(r, m);
        }
        return out;
    }
#endif
    (void)threads;
    return invertibility_table_serial(r);
}

namespace {

// completion search without the table costs |R|^6 ring ops; refuse
// rather than hang on large noncommutative rings
void check_classify_feasible(const FiniteRing& r) {
    if (!r.commutative() && r.size() > 16)
        throw budget_error("classify_pairs: exhaustive admissibility classification on the "
                           "noncommutative ring " +
                           r.name() + " needs |R| <= 16, got " + std::to_string(r.size()));
}

} // namespace

PairClasses classify_pairs_serial(const FiniteRing& r) {
    check_classify_feasible(r);
    const std::uint32_t n = r.size();
    PairClasses out;
    out.n = n;
    out.unimodular.assign((std::size_t)n * n, 0);
    out.admissible.assign((std::size_t)n * n, 0);
    std::vector<std::uint8_t> table;
    const std::vector<std::uint8_t>* tp = nullptr;
    if (!r.commutative() && n <= 16) {
        table = invertibility_table_serial(r);
        tp = &table;
    }
    for (Elt a = 0; a < n; ++a) classify_row(r, a, tp, out);
    return out;
}

PairClasses classify_pairs(const FiniteRing& r, int threads) {
    check_classify_feasible(r);
#ifdef _OPENMP
    if (threads > 1) {
        const std::uint32_t n = r.size();
        PairClasses out;
        out.n = n;
        out.unimodular.assign((std::size_t)n * n, 0);
        out.admissible.assign((std::size_t)n * n, 0);
        std::vector<std::uint8_t> table;
        const std::vector<std::uint8_t>* tp = nullptr;
        if (!r.commutative() && n <= 16) {
            table = invertibility_table(r, threads);
            tp = &table;
        }
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int a = 0; a < (int)n; ++a) classify_row(r, (Elt)a, tp, out);
        return out;
    }
#endif
    (void)threads;
    return classify_pairs_serial(r);
}

std::vector<std::uint32_t> bfs_distances(const BitMatrix& adj, std::uint32_t source) {
    std::vector<std::uint32_t> dist(adj.n, UINT32_MAX);
    if (source >= adj.n) return dist;
    std::vector<std::uint64_t> frontier(adj.words, 0), visited(adj.words, 0), next(adj.words, 0);
    frontier[source / 64] |= 1ull << (source % 64);
    visited = frontier;
    dist[source] = 0;
    std::uint32_t level = 0;
    bool more = true;
    while (more) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t w = 0; w < adj.words; ++w) {
            std::uint64_t f = frontier[w];
            while (f) {
                std::uint32_t v = w * 64 + (std::uint32_t)__builtin_ctzll(f);
                f &= f - 1;
                const std::uint64_t* row = adj.row(v);
                for (std::uint32_t k = 0; k < adj.words; ++k) next[k] |= row[k];
            }
        }
        more = false;
        for (std::uint32_t k = 0; k < adj.words; ++k) {
            next[k] &= ~visited[k];
            visited[k] |= next[k];
            std::uint64_t f = next[k];
            while (f) {
                dist[k * 64 + (std::uint32_t)__builtin_ctzll(f)] = level;
                f &= f - 1;
            }
            more = more || next[k];
        }
        frontier.swap(next);
    }
    return dist;
}

std::vector<std::uint32_t> eccentricities_serial(const BitMatrix& adj) {
    std::vector<std::uint32_t> out(adj.n, 0);
    for (std::uint32_t s = 0; s < adj.n; ++s) out[s] = bfs_eccentricity(adj, s);
    return out;
}

std::vector<std::uint32_t> eccentricities(const BitMatrix& adj, int threads) {
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<std::uint32_t> out(adj.n, 0);
        const int n = (int)adj.n;
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
        for (int s = 0; s < n; ++s) out[s] = bfs_eccentricity(adj, (std::uint32_t)s);
        return out;
    }
#endif
    (void)threads;
    return eccentricities_serial(adj);
}

} // namespace pline
