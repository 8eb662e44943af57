#pragma once

#include <cstdint>
#include <vector>

#include "pline/points.hpp"
#include "pline/ring.hpp"

namespace pline {

// Data-parallel inner loops of the library. Every kernel ships in two
// implementations: a plain serial reference (the oracle for tests) and
// an OpenMP version parallelized over independent rows/chunks. Both
// produce bit-identical results; the *_serial entry points stay public
// so tests and the benchmark can compare them.

/// Dense symmetric bit matrix, row-major 64-bit words.
struct BitMatrix {
    std::uint32_t n = 0;
    std::uint32_t words = 0; // per row
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(std::uint32_t size = 0)
        : n(size), words((size + 63) / 64), bits((std::size_t)size * ((size + 63) / 64), 0) {}

    bool get(std::uint32_t i, std::uint32_t j) const {
        return (bits[(std::size_t)i * words + j / 64] >> (j % 64)) & 1;
    }
    void set(std::uint32_t i, std::uint32_t j) {
        bits[(std::size_t)i * words + j / 64] |= 1ull << (j % 64);
    }
    const std::uint64_t* row(std::uint32_t i) const { return bits.data() + (std::size_t)i * words; }

    bool operator==(const BitMatrix&) const = default;
};

/// Pairwise distant tests over the point list.
BitMatrix adjacency_serial(const FiniteRing& r, const std::vector<Point>& pts);
BitMatrix adjacency(const FiniteRing& r, const std::vector<Point>& pts, int threads);

/// Invertibility flag for every 2x2 matrix, indexed by
/// ((a*n + b)*n + c)*n + d over element indices. |R|^4 entries.
std::vector<std::uint8_t> invertibility_table_serial(const FiniteRing& r);
std::vector<std::uint8_t> invertibility_table(const FiniteRing& r, int threads);

/// Exhaustive unimodular/admissible classification of all |R|^2 pairs.
/// Unimodularity scans witnesses, admissibility scans completions; the
/// two routes stay independent of each other.
struct PairClasses {
    std::uint32_t n = 0;
    std::vector<std::uint8_t> unimodular, admissible;

    bool operator==(const PairClasses&) const = default;
};
PairClasses classify_pairs_serial(const FiniteRing& r);
PairClasses classify_pairs(const FiniteRing& r, int threads);

/// BFS distances from one source (UINT32_MAX = unreachable).
std::vector<std::uint32_t> bfs_distances(const BitMatrix& adj, std::uint32_t source);

/// Eccentricity of every vertex within its component (0 for isolated).
std::vector<std::uint32_t> eccentricities_serial(const BitMatrix& adj);
std::vector<std::uint32_t> eccentricities(const BitMatrix& adj, int threads);

} // namespace pline
