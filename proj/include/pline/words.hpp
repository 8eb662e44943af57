#pragma once

#include <cstdint>
#include <vector>

#include "pline/points.hpp"
#include "pline/ring.hpp"

namespace pline {

/// Parameter word (t_1, ..., t_n), n >= 0; params[0] = t_1. The word
/// denotes the row product (1,0)*E(t_n)*E(t_{n-1})*...*E(t_1).
struct EWord {
    std::vector<Elt> params;

    std::size_t length() const { return params.size(); }
    bool operator==(const EWord&) const = default;
};

/// Endpoint of a word together with its prefix trace: prefix[i] is the
/// point of the length-i prefix (t_1,...,t_i); prefix[0] = R(1,0) and
/// prefix[n] = end. Consecutive trace points are distant.
struct WordTrace {
    Point end;
    std::vector<Point> prefix;
};

WordTrace word_to_point(const FiniteRing& r, const EWord& w);

/// Invert a distant chain into a word via the normalization recursion:
/// seeds (x_-1,y_-1) = (0,-1), (x_0,y_0) = (1,0); step i factors
/// [[x_{i-1},y_{i-1}],[a_i,b_i]] against [[x_{i-1},y_{i-1}],[-x_{i-2},-y_{i-2}]]
/// and sets t_i = u_i^-1 s_i, (x_i,y_i) = u_i^-1 (a_i,b_i).
/// The chain must start at R(1,0) with consecutive points distant;
/// the word's prefix trace reproduces the chain pointwise.
EWord chain_to_word(const FiniteRing& r, const std::vector<Point>& chain);

/// Minimal word length realizing each canonical point, exploring all
/// words of length <= max_len (UINT32_MAX where none found). Index i of
/// the result refers to pts[i].
std::vector<std::uint32_t> min_word_lengths(const FiniteRing& r, const std::vector<Point>& pts,
                                            std::uint32_t max_len);

} // namespace pline
