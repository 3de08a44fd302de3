#include "ssc/graph_color.hpp"

#include <algorithm>
#include <sstream>

#include "ssc/error.hpp"

namespace ssc {
namespace {

struct Arc {
  std::size_t to;
  bool may_force;
};

// Shared state for every color-change variant in this file.
struct ForcingProblem {
  std::size_t nodes = 0;
  std::vector<std::vector<Arc>> out;
  std::vector<char> has_in_edge;
  std::vector<char> no_self_force;
  bool black_forcers_only = false;
};

ForcingProblem from_graph(const PatternGraph& g) {
  ForcingProblem p;
  p.nodes = g.node_count;
  p.out.resize(g.node_count);
  p.has_in_edge.assign(g.node_count, 0);
  p.no_self_force.assign(g.node_count, 0);
  for (const auto& e : g.star_edges) p.out[e.from].push_back({e.to, true});
  for (const auto& e : g.qmark_edges) p.out[e.from].push_back({e.to, false});
  for (auto& arcs : p.out) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
    for (const auto& a : arcs) p.has_in_edge[a.to] = 1;
  }
  return p;
}

ForcingProblem from_digraph(const Digraph& h, bool black_only,
                            std::span<const std::size_t> no_self_force) {
  ForcingProblem p;
  p.nodes = h.node_count;
  p.out.resize(h.node_count);
  p.has_in_edge.assign(h.node_count, 0);
  p.no_self_force.assign(h.node_count, 0);
  p.black_forcers_only = black_only;
  for (const auto& e : h.edges) {
    if (e.from >= h.node_count || e.to >= h.node_count) {
      throw Error(ErrorCode::kUnknownNode, "edge endpoint out of range");
    }
    auto& arcs = p.out[e.from];
    if (std::none_of(arcs.begin(), arcs.end(),
                     [&](const Arc& a) { return a.to == e.to; })) {
      arcs.push_back({e.to, true});
    }
    p.has_in_edge[e.to] = 1;
  }
  for (auto& arcs : p.out)
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  for (std::size_t v : no_self_force) {
    if (v >= h.node_count) {
      throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(v + 1) +
                                               " is not in the graph");
    }
    p.no_self_force[v] = 1;
  }
  return p;
}

// The single change `i` can make in the current coloring, if any.
std::optional<std::size_t> forced_by(const ForcingProblem& p,
                                     const std::vector<char>& black,
                                     std::size_t i) {
  if (p.black_forcers_only && !black[i]) return std::nullopt;
  const Arc* white = nullptr;
  for (const auto& a : p.out[i]) {
    if (black[a.to]) continue;
    if (white) return std::nullopt;
    white = &a;
  }
  if (!white || !white->may_force) return std::nullopt;
  if (white->to == i && p.no_self_force[i]) return std::nullopt;
  return white->to;
}

ColorTrace finish(std::vector<ColorChange> changes,
                  const std::vector<char>& black) {
  ColorTrace t{std::move(changes), {}};
  for (std::size_t v = 0; v < black.size(); ++v)
    if (black[v]) t.black.push_back(v);
  return t;
}

ColorTrace run_rounds(const ForcingProblem& p, std::vector<char> black) {
  std::vector<ColorChange> changes;
  std::vector<char> claimed(p.nodes, 0);
  for (;;) {
    std::vector<ColorChange> round;
    for (int pass = 0; pass < 2 && round.empty(); ++pass) {
      for (std::size_t i = 0; i < p.nodes; ++i) {
        const bool settled = black[i] || !p.has_in_edge[i];
        if (settled != (pass == 0)) continue;
        auto j = forced_by(p, black, i);
        if (j && !claimed[*j]) {
          claimed[*j] = 1;
          round.push_back({i, *j});
        }
      }
    }
    if (round.empty()) break;
    for (const auto& c : round) black[c.forced] = 1;
    changes.insert(changes.end(), round.begin(), round.end());
  }
  return finish(std::move(changes), black);
}

ColorTrace run_in_order(const ForcingProblem& p, std::vector<char> black,
                        std::span<const std::size_t> order) {
  std::vector<ColorChange> changes;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t i : order) {
      if (auto j = forced_by(p, black, i)) {
        black[*j] = 1;
        changes.push_back({i, *j});
        progressed = true;
        break;
      }
    }
  }
  return finish(std::move(changes), black);
}

bool replay(const ForcingProblem& p, std::vector<char> black,
            const ColorTrace& trace) {
  for (const auto& c : trace.changes) {
    if (c.forcer >= p.nodes || c.forced >= p.nodes) return false;
    if (black[c.forced]) return false;
    if (forced_by(p, black, c.forcer) != c.forced) return false;
    black[c.forced] = 1;
  }
  return finish({}, black).black == trace.black;
}

std::vector<char> initial_black(std::size_t nodes,
                                std::span<const std::size_t> initial) {
  std::vector<char> black(nodes, 0);
  for (std::size_t v : initial) {
    if (v >= nodes) {
      throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(v + 1) +
                                               " is not in the graph");
    }
    black[v] = 1;
  }
  return black;
}

bool rows_black(const ColorTrace& t, std::size_t rows) {
  // t.black is sorted and only row nodes can ever be forced.
  return t.black.size() == rows;
}

bool all_black(const ColorTrace& t, std::size_t nodes) {
  return t.black.size() == nodes;
}

}  // namespace

bool Digraph::has_self_loops() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const Edge& e) { return e.from == e.to; });
}

PatternGraph build_graph(const PatternMatrix& m) {
  if (m.rows() > m.cols()) {
    throw Error(ErrorCode::kWideMatrixRequired,
                "G(M) needs p <= q, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  PatternGraph g;
  g.node_count = m.cols();
  g.row_count = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == PatternSymbol::kNonzero) g.star_edges.push_back({j, i});
      if (m(i, j) == PatternSymbol::kArbitrary) g.qmark_edges.push_back({j, i});
    }
  }
  return g;
}

ColoringResult colorability(const PatternGraph& g) {
  auto trace = run_rounds(from_graph(g), std::vector<char>(g.node_count, 0));
  bool complete = rows_black(trace, g.row_count);
  return {complete, std::move(trace)};
}

ColoringResult colorability(const PatternMatrix& m) {
  return colorability(build_graph(m));
}

ColoringResult colorability_in_order(const PatternMatrix& m,
                                     std::span<const std::size_t> order) {
  auto g = build_graph(m);
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k || sorted.size() != g.node_count) {
      throw Error(ErrorCode::kUnknownNode, "scan order is not a permutation");
    }
  }
  auto trace = run_in_order(from_graph(g), std::vector<char>(g.node_count, 0),
                            order);
  bool complete = rows_black(trace, g.row_count);
  return {complete, std::move(trace)};
}

bool is_valid_trace(const PatternMatrix& m, const ColorTrace& trace) {
  auto g = build_graph(m);
  return replay(from_graph(g), std::vector<char>(g.node_count, 0), trace);
}

RankWitness rank_deficiency_witness(const PatternMatrix& m,
                                    const ColorTrace& trace) {
  const std::size_t p = m.rows();
  if (m.rows() > m.cols()) {
    throw Error(ErrorCode::kWideMatrixRequired, "witness needs p <= q");
  }
  std::vector<char> white(p, 1);
  for (std::size_t v : trace.black)
    if (v < p) white[v] = 0;
  if (std::none_of(white.begin(), white.end(), [](char w) { return w; })) {
    throw Error(ErrorCode::kWitnessUnavailable,
                "every row is colored; the pattern has full row rank");
  }

  RankWitness w{sample_instance(m, 0), RationalVector(p)};
  for (std::size_t i = 0; i < p; ++i) {
    if (white[i]) {
      w.left_null[i] = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) w.instance(i, j) = 0;
    }
  }

  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<std::size_t> stars, qmarks;
    for (std::size_t i = 0; i < p; ++i) {
      if (!white[i]) continue;
      if (m(i, j) == PatternSymbol::kNonzero) stars.push_back(i);
      if (m(i, j) == PatternSymbol::kArbitrary) qmarks.push_back(i);
    }
    if (stars.size() + qmarks.size() < 2) {
      if (!stars.empty()) {
        throw Error(ErrorCode::kWitnessUnavailable,
                    "trace is not a fixpoint: node " + std::to_string(j + 1) +
                        " can still force " + std::to_string(stars[0] + 1));
      }
      continue;  // all zero, or a lone ? left at 0
    }
    if (qmarks.empty()) {
      for (std::size_t i : stars) w.instance(i, j) = 1;
      w.instance(stars.back(), j) = -static_cast<long>(stars.size() - 1);
    } else {
      for (std::size_t i : stars) w.instance(i, j) = 1;
      w.instance(qmarks.front(), j) = -static_cast<long>(stars.size());
    }
  }
  return w;
}

ColoringResult loopy_zero_forcing(const Digraph& h,
                                  std::span<const std::size_t> initial,
                                  std::span<const std::size_t> no_self_force) {
  auto p = from_digraph(h, false, no_self_force);
  auto trace = run_rounds(p, initial_black(h.node_count, initial));
  bool complete = all_black(trace, h.node_count);
  return {complete, std::move(trace)};
}

ColoringResult ordinary_zero_forcing(const Digraph& h,
                                     std::span<const std::size_t> initial) {
  if (h.has_self_loops()) {
    throw Error(ErrorCode::kSelfLoopForbidden,
                "ordinary zero forcing is defined on loopless graphs");
  }
  auto p = from_digraph(h, true, {});
  auto trace = run_rounds(p, initial_black(h.node_count, initial));
  bool complete = all_black(trace, h.node_count);
  return {complete, std::move(trace)};
}

bool is_valid_zero_forcing_trace(const Digraph& h,
                                 std::span<const std::size_t> initial,
                                 const ColorTrace& trace,
                                 bool black_forcers_only,
                                 std::span<const std::size_t> no_self_force) {
  auto p = from_digraph(h, black_forcers_only, no_self_force);
  return replay(p, initial_black(h.node_count, initial), trace);
}

std::string export_dot(const PatternGraph& g,
                       const std::optional<ColorTrace>& trace) {
  std::vector<char> black(g.node_count, 0);
  if (trace) {
    for (std::size_t v : trace->black)
      if (v < g.node_count) black[v] = 1;
  }
  std::vector<std::pair<Edge, bool>> edges;
  for (const auto& e : g.star_edges) edges.push_back({e, true});
  for (const auto& e : g.qmark_edges) edges.push_back({e, false});
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph G {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.node_count; ++v) {
    out << "  " << v + 1;
    if (black[v]) {
      out << " [style=filled, fillcolor=black, fontcolor=white]";
    } else {
      out << " [style=filled, fillcolor=white, fontcolor=black]";
    }
    out << ";\n";
  }
  for (const auto& [e, solid] : edges) {
    out << "  " << e.from + 1 << " -> " << e.to + 1
        << (solid ? " [style=solid]" : " [style=dashed]") << ";\n";
  }
  out << "}\n";
  return out.str();
}

Digraph parse_digraph(std::string_view text, std::size_t min_nodes) {
  Digraph h;
  h.node_count = min_nodes;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(ErrorCode::kBadToken, h.edges.size(), tokens.size(),
                       line_no, line,
                       "line " + std::to_string(line_no) +
                           ": expected an edge 'u v'");
    }
    std::size_t ids[2];
    for (int k = 0; k < 2; ++k) {
      const auto& tok = tokens[static_cast<std::size_t>(k)];
      bool digits = !tok.empty() &&
                    std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                      return c >= '0' && c <= '9';
                    });
      unsigned long v = digits && tok.size() < 10 ? std::stoul(tok) : 0;
      if (v == 0) {
        throw ParseError(ErrorCode::kBadToken, h.edges.size(),
                         static_cast<std::size_t>(k), line_no, tok,
                         "line " + std::to_string(line_no) +
                             ": node ids are positive integers, got '" + tok +
                             "'");
      }
      ids[k] = v - 1;
      h.node_count = std::max<std::size_t>(h.node_count, v);
    }
    h.edges.push_back({ids[0], ids[1]});
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

}  // namespace ssc
