#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ssc/graph_color.hpp"
#include "ssc/pattern.hpp"

namespace ssc {

/// Networked system: graph H on nodes 0..n-1 plus an ordered leader list.
/// Leader k drives node leaders[k] through input k.
struct LeaderNetwork {
  Digraph graph;
  std::vector<std::size_t> leaders;
  /// Whether the file declared `loops: forbidden` (selects the ?-diagonal
  /// family).
  bool loops_forbidden = false;

  std::size_t node_count() const noexcept { return graph.node_count; }
};

/// Checks leader distinctness and ranges. Throws UnknownNode / BadNetwork.
void validate(const LeaderNetwork& net);

/// A_ij = * iff (j, i) ∈ F, B_ij = * iff i = leaders[j].
StructuredSystem pattern_from_network_star(const LeaderNetwork& net);

/// As above but with A_ii = ?. Throws SelfLoopForbidden.
StructuredSystem pattern_from_network_qdiag(const LeaderNetwork& net);

/// Zero forcing characterization for the * family: the leaders are a loopy
/// zero forcing set of H, and of H with a self-loop on every node when the
/// original loop nodes may not force themselves.
bool td_controllability(const LeaderNetwork& net);

/// Ordinary zero forcing characterization for the ?-diagonal family.
/// Throws SelfLoopForbidden.
bool mzc_controllability(const LeaderNetwork& net);

/// Network file: edge list plus headers
///   leaders: 3 5
///   loops: allowed|forbidden
///   nodes: N            (optional; default is the largest id seen)
LeaderNetwork parse_network(std::string_view text);

}  // namespace ssc
