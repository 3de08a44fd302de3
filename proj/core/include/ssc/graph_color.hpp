#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssc/pattern.hpp"
#include "ssc/rational.hpp"

namespace ssc {

/// Directed edge between 0-based node indices.
struct Edge {
  std::size_t from;
  std::size_t to;

  auto operator<=>(const Edge&) const = default;
};

/// G(M) for a p×q pattern with p ≤ q. Node j stands for column j; nodes
/// 0..p-1 double as row nodes. Edge (j, i) exists iff M(i, j) ≠ 0, and lands
/// in `star_edges` or `qmark_edges` according to the symbol. Both edge lists
/// are sorted.
struct PatternGraph {
  std::size_t node_count = 0;
  std::size_t row_count = 0;
  std::vector<Edge> star_edges;
  std::vector<Edge> qmark_edges;
};

struct ColorChange {
  std::size_t forcer;
  std::size_t forced;

  bool operator==(const ColorChange&) const = default;
};

/// Chronological list of color changes plus the resulting black set
/// (sorted, 0-based).
struct ColorTrace {
  std::vector<ColorChange> changes;
  std::vector<std::size_t> black;
};

struct ColoringResult {
  bool complete = false;
  ColorTrace trace;
};

/// A member of P(M) together with a nonzero vector in its left kernel.
struct RankWitness {
  RationalMatrix instance;
  RationalVector left_null;
};

/// Plain digraph for the zero forcing variants. Self-loops allowed.
struct Digraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;

  bool has_self_loops() const;
};

/// Throws WideMatrixRequired when p > q.
PatternGraph build_graph(const PatternMatrix& m);

/// Runs the color change rule on G(M) from the all-white start: a node
/// (of any color) with exactly one white out-neighbor j, reached over a *
/// edge, colors j black. Returns complete = true iff every row node ends
/// black.
///
/// The verdict does not depend on the order in which changes are applied.
/// The reported trace is produced in rounds. In each round the candidate
/// forcers that are already settled (black, or column-only nodes that can
/// never turn black) are scanned in ascending index; only when none of them
/// applies are the remaining white forcers scanned. All changes found in a
/// round are valid against the state at the start of the round and are
/// applied in scan order; a node forced twice in one round keeps its first
/// forcer.
ColoringResult colorability(const PatternMatrix& m);
ColoringResult colorability(const PatternGraph& g);

/// Same rule, one change at a time: forcers are tried in `order` and the
/// first applicable change fires before the scan restarts. `order` must be
/// a permutation of 0..q-1.
ColoringResult colorability_in_order(const PatternMatrix& m,
                                     std::span<const std::size_t> order);

/// Replays `trace` from the all-white start and checks every step against
/// the color change rule, no node is forced twice, and `black` equals the
/// forced set.
bool is_valid_trace(const PatternMatrix& m, const ColorTrace& trace);

/// Builds a rank-deficient member of P(M) from a stalled coloring. Rows
/// that stayed white get column sums of zero; the remaining rows come from
/// sample_instance(M, 0). Throws WitnessUnavailable if the trace colors
/// every row or is not a fixpoint of the rule.
RankWitness rank_deficiency_witness(const PatternMatrix& m,
                                    const ColorTrace& trace);

/// Loopy zero forcing: nodes in `initial` start black; any node with
/// exactly one white out-neighbor forces it. `no_self_force` lists nodes
/// that may not force themselves (i → i). Throws UnknownNode.
ColoringResult loopy_zero_forcing(
    const Digraph& h, std::span<const std::size_t> initial,
    std::span<const std::size_t> no_self_force = {});

/// Ordinary zero forcing: only black nodes force. Throws SelfLoopForbidden
/// on a graph with self-loops, UnknownNode on a bad node id.
ColoringResult ordinary_zero_forcing(const Digraph& h,
                                     std::span<const std::size_t> initial);

/// Replay validator for the two zero forcing rules.
bool is_valid_zero_forcing_trace(const Digraph& h,
                                 std::span<const std::size_t> initial,
                                 const ColorTrace& trace,
                                 bool black_forcers_only,
                                 std::span<const std::size_t> no_self_force = {});

/// Graphviz text. Solid edges for *, dashed for ?; with a trace, black
/// nodes are filled. Node labels are 1-based.
std::string export_dot(const PatternGraph& g,
                       const std::optional<ColorTrace>& trace = std::nullopt);

/// Edge list: one `u v` pair per line, 1-based ids, `#` starts a comment.
/// The node count is the largest id seen, or `min_nodes` if larger.
Digraph parse_digraph(std::string_view text, std::size_t min_nodes = 0);

}  // namespace ssc
