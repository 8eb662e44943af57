#include "pline/orbits.hpp"

#include <algorithm>
#include <deque>

#include "pline/kernels.hpp"

namespace pline {

bool MatrixGroup::contains(const Mat2& m) const {
    return std::binary_search(elements.begin(), elements.end(), m,
                              [](const Mat2& x, const Mat2& y) { return mat_key(x) < mat_key(y); });
}

bool MatrixGroup::same_elements(const MatrixGroup& other) const {
    if (elements.size() != other.elements.size()) return false;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!(elements[i] == other.elements[i])) return false;
    return true;
}

MatrixGroup generate_group(const FiniteRing& r, std::vector<Mat2> gens, const Budget& budget) {
    for (const Mat2& g : gens)
        if (!mat_invertible(r, g))
            throw precondition_error("generate_group: generator " + mat_str(r, g) + " is not invertible");

    std::unordered_set<std::uint64_t> seen;
    std::deque<Mat2> queue;
    Mat2 id = mat_identity(r);
    seen.insert(mat_key(id));
    queue.push_back(id);
    while (!queue.empty()) {
        Mat2 m = queue.front();
        queue.pop_front();
        for (const Mat2& g : gens) {
            Mat2 p = mat_mul(r, m, g);
            if (seen.insert(mat_key(p)).second) {
                if (seen.size() > budget.group_max)
                    throw budget_error("generate_group: closure exceeds budget group_max=" +
                                       std::to_string(budget.group_max));
                queue.push_back(p);
            }
        }
    }

    MatrixGroup out;
    out.generators = std::move(gens);
    std::vector<std::uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    out.elements.reserve(keys.size());
    for (std::uint64_t k : keys) out.elements.push_back(mat_from_key(k));

    // closure sanity: inverses always, pairwise products on small groups
    for (const Mat2& m : out.elements)
        if (!out.contains(mat_inverse(r, m)))
            throw internal_error("generate_group: closure not inverse-closed");
    if (out.elements.size() <= 1000)
        for (const Mat2& x : out.elements)
            for (const Mat2& y : out.elements)
                if (!out.contains(mat_mul(r, x, y)))
                    throw internal_error("generate_group: closure not product-closed");
    return out;
}

std::vector<Mat2> e2_generators(const FiniteRing& r) {
    std::vector<Mat2> gens;
    for (Elt t = 0; t < r.size(); ++t) gens.push_back(gen_e(r, t));
    return gens;
}

std::vector<Mat2> ge2_generators(const FiniteRing& r) {
    std::vector<Mat2> gens = e2_generators(r);
    for (Elt u : r.units())
        for (Elt v : r.units()) gens.push_back(gen_diag(r, u, v));
    return gens;
}

std::vector<Mat2> gl2_enumerate(const FiniteRing& r, const Budget& budget, int threads) {
    if (r.size() > budget.gl2_max_ring)
        throw budget_error("gl2_enumerate: ring size " + std::to_string(r.size()) +
                           " exceeds budget gl2_max_ring=" + std::to_string(budget.gl2_max_ring));
    auto table = invertibility_table(r, threads);
    const std::uint64_t n = r.size();
    std::vector<Mat2> out;
    for (std::uint64_t idx = 0; idx < table.size(); ++idx)
        if (table[idx])
            out.push_back({(Elt)(idx / (n * n * n)), (Elt)(idx / (n * n) % n), (Elt)(idx / n % n),
                           (Elt)(idx % n)});
    return out;
}

std::vector<Point> e2_point_orbit(const FiniteRing& r) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Point> orbit;
    std::deque<Point> queue;
    Point start = point_make(r, r.one(), r.zero());
    seen.insert(start.key());
    orbit.push_back(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Elt t = 0; t < r.size(); ++t) {
            // (a,b) * E(t) = (a*t - b, a)
            Point q = point_make(r, r.sub(r.mul(p.a, t), p.b), p.a);
            if (seen.insert(q.key()).second) {
                orbit.push_back(q);
                queue.push_back(q);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const Point& x, const Point& y) { return x.key() < y.key(); });
    return orbit;
}

MatrixGroup stabilizer_of_component(const DistantGraph& g, const Budget& budget, int threads) {
    const FiniteRing& r = g.ring();
    std::vector<Mat2> gl2 = gl2_enumerate(r, budget, threads);
    std::uint32_t c_inf = g.component_of(g.index_of_pair(r.one(), r.zero()));

    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < g.point_count(); ++i)
        if (g.component_of(i) == c_inf) members.push_back(i);

    MatrixGroup out;
    for (const Mat2& m : gl2) {
        bool stabilizes = true;
        for (std::uint32_t i : members) {
            const Point& p = g.point(i);
            Elt x, y;
            mat_apply_row(r, p.a, p.b, m, x, y);
            if (g.component_of(g.index_of_pair(x, y)) != c_inf) {
                stabilizes = false;
                break;
            }
        }
        if (stabilizes) out.elements.push_back(m);
    }
    return out;
}

Ge2Result is_ge2_ring(const FiniteRing& r, const Budget& budget, int threads) {
    MatrixGroup ge2 = generate_group(r, ge2_generators(r), budget);
    std::vector<Mat2> gl2 = gl2_enumerate(r, budget, threads);

    Ge2Result res;
    res.ge2_order = ge2.order();
    res.gl2_order = gl2.size();
    res.is_ge2 = ge2.order() == gl2.size();
    res.coset_count = gl2.size() / ge2.order();
    if (!res.is_ge2)
        for (const Mat2& m : gl2)
            if (!ge2.contains(m)) {
                res.witness = m;
                break;
            }
    return res;
}

} // namespace pline
