#include "pline/graph.hpp"

#include <algorithm>

namespace pline {

DistantGraph DistantGraph::build(RingPtr ring, int threads) {
    DistantGraph g;
    g.ring_ = std::move(ring);
    g.points_ = enumerate_points(*g.ring_);
    g.adj_ = adjacency(*g.ring_, g.points_, threads);
    for (std::uint32_t i = 0; i < g.points_.size(); ++i) g.index_.emplace(g.points_[i].key(), i);

    // components by DFS over the bit rows
    g.comp_.assign(g.points_.size(), UINT32_MAX);
    g.ncomp_ = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.points_.size(); ++s) {
        if (g.comp_[s] != UINT32_MAX) continue;
        std::uint32_t id = g.ncomp_++;
        g.comp_[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            const std::uint64_t* row = g.adj_.row(v);
            for (std::uint32_t w = 0; w < g.adj_.words; ++w) {
                std::uint64_t bitsw = row[w];
                while (bitsw) {
                    std::uint32_t u = w * 64 + (std::uint32_t)__builtin_ctzll(bitsw);
                    bitsw &= bitsw - 1;
                    if (g.comp_[u] == UINT32_MAX) {
                        g.comp_[u] = id;
                        stack.push_back(u);
                    }
                }
            }
        }
    }
    return g;
}

std::optional<std::uint32_t> DistantGraph::find_point(const Point& p) const {
    if (p.ring != ring_.get()) return std::nullopt;
    auto it = index_.find(p.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t DistantGraph::index_of_pair(Elt a, Elt b) const {
    Point p = point_make(*ring_, a, b);
    auto idx = find_point(p);
    if (!idx) throw internal_error("graph: canonical point missing from the enumeration");
    return *idx;
}

std::vector<std::vector<std::uint32_t>> DistantGraph::components() const {
    std::vector<std::vector<std::uint32_t>> out(ncomp_);
    for (std::uint32_t i = 0; i < comp_.size(); ++i) out[comp_[i]].push_back(i);
    return out;
}

std::optional<std::uint32_t> DistantGraph::dist(std::uint32_t i, std::uint32_t j) const {
    if (comp_[i] != comp_[j]) return std::nullopt;
    std::uint32_t d = bfs_distances(adj_, i)[j];
    if (d == UINT32_MAX) return std::nullopt; // unreachable within a component cannot happen
    return d;
}

std::uint32_t DistantGraph::diameter_of_component(std::uint32_t comp, int threads) const {
    auto ecc = eccentricities(adj_, threads);
    std::uint32_t best = 0;
    for (std::uint32_t i = 0; i < comp_.size(); ++i)
        if (comp_[i] == comp) best = std::max(best, ecc[i]);
    return best;
}

std::vector<std::uint32_t> DistantGraph::component_diameters(int threads) const {
    auto ecc = eccentricities(adj_, threads);
    std::vector<std::uint32_t> out(ncomp_, 0);
    for (std::uint32_t i = 0; i < comp_.size(); ++i)
        out[comp_[i]] = std::max(out[comp_[i]], ecc[i]);
    return out;
}

} // namespace pline
