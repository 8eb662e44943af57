#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pline/kernels.hpp"
#include "pline/points.hpp"
#include "pline/ring.hpp"

namespace pline {

/// The distant graph on the projective line of a finite ring: vertices
/// are canonical points, edges are distant pairs. Loops appear exactly
/// when 1 = 0. Immutable after build; queries are thread-safe.
class DistantGraph {
  public:
    static DistantGraph build(RingPtr ring, int threads = 1);

    const FiniteRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }

    std::uint32_t point_count() const { return (std::uint32_t)points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::uint32_t i) const { return points_[i]; }

    /// Index of a canonical point; nullopt if absent.
    std::optional<std::uint32_t> find_point(const Point& p) const;
    /// Canonicalize (a,b) and look it up; throws on inadmissible pairs.
    std::uint32_t index_of_pair(Elt a, Elt b) const;

    bool adjacent(std::uint32_t i, std::uint32_t j) const { return adj_.get(i, j); }
    bool has_loops() const { return ring_->trivial(); }
    const BitMatrix& adjacency_matrix() const { return adj_; }

    std::uint32_t component_of(std::uint32_t i) const { return comp_[i]; }
    std::uint32_t component_count() const { return ncomp_; }
    const std::vector<std::uint32_t>& component_ids() const { return comp_; }
    std::vector<std::vector<std::uint32_t>> components() const;
    bool connected() const { return ncomp_ <= 1; }

    /// Minimal edge count between two vertices; nullopt across components.
    std::optional<std::uint32_t> dist(std::uint32_t i, std::uint32_t j) const;
    std::vector<std::uint32_t> bfs_from(std::uint32_t i) const { return bfs_distances(adj_, i); }

    /// Supremum of distances inside one component.
    std::uint32_t diameter_of_component(std::uint32_t comp, int threads = 1) const;
    /// Per-component diameters, indexed by component id.
    std::vector<std::uint32_t> component_diameters(int threads = 1) const;

  private:
    DistantGraph() = default;

    RingPtr ring_;
    std::vector<Point> points_;
    BitMatrix adj_;
    std::vector<std::uint32_t> comp_;
    std::uint32_t ncomp_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

} // namespace pline
