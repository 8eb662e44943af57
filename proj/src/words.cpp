#include "pline/words.hpp"

#include <unordered_map>
#include <unordered_set>

#include "pline/mat2.hpp"

namespace pline {

WordTrace word_to_point(const FiniteRing& r, const EWord& w) {
    WordTrace out;
    // three-term recurrence: (x_i, y_i) = t_i*(x_{i-1}, y_{i-1}) - (x_{i-2}, y_{i-2})
    Elt px = r.zero(), py = r.neg(r.one()); // (x_{-1}, y_{-1})
    Elt cx = r.one(), cy = r.zero();        // (x_0, y_0)
    out.prefix.push_back(point_make(r, cx, cy));
    for (Elt t : w.params) {
        Elt nx = r.sub(r.mul(t, cx), px);
        Elt ny = r.sub(r.mul(t, cy), py);
        px = cx;
        py = cy;
        cx = nx;
        cy = ny;
        out.prefix.push_back(point_make(r, cx, cy));
    }
    out.end = out.prefix.back();
    return out;
}

EWord chain_to_word(const FiniteRing& r, const std::vector<Point>& chain) {
    if (chain.empty()) throw precondition_error("chain_to_word: empty chain");
    Point start = point_make(r, r.one(), r.zero());
    if (!(chain.front() == start))
        throw precondition_error("chain_to_word: chain must start at R(1,0)");
    for (const Point& p : chain)
        if (p.ring != &r) throw precondition_error("chain_to_word: chain point over a different ring");
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!distant(chain[i - 1], chain[i]))
            throw precondition_error("chain_to_word: consecutive points " + chain[i - 1].str() + ", " +
                                     chain[i].str() + " are not distant");

    EWord w;
    Elt px = r.zero(), py = r.neg(r.one()); // (x_{-1}, y_{-1})
    Elt cx = r.one(), cy = r.zero();        // (x_0, y_0)
    for (std::size_t i = 1; i < chain.size(); ++i) {
        Elt ai = chain[i].a, bi = chain[i].b;
        Mat2 x{cx, cy, ai, bi};
        Mat2 xp{cx, cy, r.neg(px), r.neg(py)};
        LemmaFactors f = lemma_factor(r, x, xp);
        Elt uinv = r.unit_inverse(f.u); // u is a unit because the points are distant
        w.params.push_back(r.mul(uinv, f.s));
        px = cx;
        py = cy;
        cx = r.mul(uinv, ai);
        cy = r.mul(uinv, bi);
    }
    return w;
}

std::vector<std::uint32_t> min_word_lengths(const FiniteRing& r, const std::vector<Point>& pts,
                                            std::uint32_t max_len) {
    std::unordered_map<std::uint64_t, std::uint32_t> point_index;
    for (std::uint32_t i = 0; i < pts.size(); ++i) point_index.emplace(pts[i].key(), i);
    std::vector<std::uint32_t> best(pts.size(), UINT32_MAX);

    auto record = [&](Elt x, Elt y, std::uint32_t len) {
        Point p = point_make(r, x, y);
        auto it = point_index.find(p.key());
        if (it != point_index.end() && best[it->second] == UINT32_MAX) best[it->second] = len;
    };

    // BFS over (previous pair, current pair) states; a state determines
    // all continuations, so revisiting one can never improve lengths
    struct State {
        Elt px, py, cx, cy;
    };
    auto key_of = [](const State& s) {
        return ((std::uint64_t)s.px << 48) | ((std::uint64_t)s.py << 32) | ((std::uint64_t)s.cx << 16) |
               s.cy;
    };
    std::vector<State> frontier{{r.zero(), r.neg(r.one()), r.one(), r.zero()}};
    std::unordered_set<std::uint64_t> seen{key_of(frontier[0])};
    record(r.one(), r.zero(), 0);
    for (std::uint32_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<State> next;
        for (const State& s : frontier)
            for (Elt t = 0; t < r.size(); ++t) {
                State ns{s.cx, s.cy, r.sub(r.mul(t, s.cx), s.px), r.sub(r.mul(t, s.cy), s.py)};
                if (!seen.insert(key_of(ns)).second) continue;
                record(ns.cx, ns.cy, len);
                next.push_back(ns);
            }
        frontier.swap(next);
    }
    return best;
}

} // namespace pline
