#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssc/graph_color.hpp"
#include "ssc/pattern.hpp"
#include "ssc/rational.hpp"

namespace ssc::test {

/// Rows written compactly, e.g. {"*0?", "0**"}.
PatternMatrix pat(const std::vector<std::string>& rows);

/// Each entry 0, * or ? with the given weights.
PatternMatrix random_pattern(SplitMix64& rng, std::size_t p, std::size_t q,
                             unsigned w_zero = 1, unsigned w_star = 1,
                             unsigned w_q = 1);

/// Index-th of the 3^(p*q) patterns, base-3 digits row-major.
PatternMatrix pattern_from_index(std::size_t p, std::size_t q,
                                 std::size_t index);

/// Textbook rational Gaussian elimination.
std::size_t naive_rank(const RationalMatrix& m);

/// Textbook forcing: every node (any color) with exactly one white
/// out-neighbor over a * edge colors it, repeated until nothing changes.
/// Returns the black set as a bitmask-like bool vector over the q nodes.
std::vector<bool> naive_black_set(const PatternMatrix& m);

/// Depth-first search over every chronological list of the loopy rule on
/// `h`, starting from `initial`, that never uses i -> i for i in `banned`.
/// True iff some list turns every node black.
bool brute_force_loopy(const Digraph& h, const std::vector<std::size_t>& initial,
                       const std::vector<std::size_t>& banned);

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);

}  // namespace ssc::test
