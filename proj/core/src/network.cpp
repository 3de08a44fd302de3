#include "ssc/network.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "ssc/error.hpp"

namespace ssc {
namespace {

PatternMatrix leader_input_pattern(const LeaderNetwork& net) {
  PatternMatrix b(net.node_count(), net.leaders.size());
  for (std::size_t k = 0; k < net.leaders.size(); ++k)
    b(net.leaders[k], k) = PatternSymbol::kNonzero;
  return b;
}

PatternMatrix adjacency_pattern(const LeaderNetwork& net) {
  PatternMatrix a(net.node_count(), net.node_count());
  for (const auto& e : net.graph.edges) a(e.to, e.from) = PatternSymbol::kNonzero;
  return a;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_header(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorCode::kBadNetwork, 0, 0, line, "",
                   "line " + std::to_string(line) + ": " + msg);
}

unsigned long positive_id(const std::string& tok, std::size_t line) {
  bool digits = !tok.empty() && tok.size() < 10 &&
                std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                  return c >= '0' && c <= '9';
                });
  unsigned long v = digits ? std::stoul(tok) : 0;
  if (v == 0) bad_header(line, "expected a positive node id, got '" + tok + "'");
  return v;
}

}  // namespace

void validate(const LeaderNetwork& net) {
  for (const auto& e : net.graph.edges) {
    if (e.from >= net.node_count() || e.to >= net.node_count()) {
      throw Error(ErrorCode::kUnknownNode, "edge endpoint out of range");
    }
  }
  std::vector<char> seen(net.node_count(), 0);
  for (std::size_t v : net.leaders) {
    if (v >= net.node_count()) {
      throw Error(ErrorCode::kUnknownNode,
                  "leader " + std::to_string(v + 1) + " is not in the graph");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kBadNetwork,
                  "leader " + std::to_string(v + 1) + " listed twice");
    }
    seen[v] = 1;
  }
}

StructuredSystem pattern_from_network_star(const LeaderNetwork& net) {
  validate(net);
  return StructuredSystem(adjacency_pattern(net), leader_input_pattern(net));
}

StructuredSystem pattern_from_network_qdiag(const LeaderNetwork& net) {
  validate(net);
  if (net.graph.has_self_loops()) {
    throw Error(ErrorCode::kSelfLoopForbidden,
                "the ?-diagonal family is built from loopless graphs");
  }
  auto a = adjacency_pattern(net);
  for (std::size_t i = 0; i < net.node_count(); ++i)
    a(i, i) = PatternSymbol::kArbitrary;
  return StructuredSystem(std::move(a), leader_input_pattern(net));
}

bool td_controllability(const LeaderNetwork& net) {
  validate(net);
  if (!loopy_zero_forcing(net.graph, net.leaders).complete) return false;

  Digraph looped = net.graph;
  std::vector<std::size_t> loop_nodes;
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    Edge self{v, v};
    if (std::find(net.graph.edges.begin(), net.graph.edges.end(), self) !=
        net.graph.edges.end()) {
      loop_nodes.push_back(v);
    } else {
      looped.edges.push_back(self);
    }
  }
  std::sort(looped.edges.begin(), looped.edges.end());
  // A move i → j stays available until j turns black, so pruning the
  // forbidden self-forces from a greedy run loses no chronological list.
  return loopy_zero_forcing(looped, net.leaders, loop_nodes).complete;
}

bool mzc_controllability(const LeaderNetwork& net) {
  validate(net);
  return ordinary_zero_forcing(net.graph, net.leaders).complete;
}

LeaderNetwork parse_network(std::string_view text) {
  std::string edges_only;
  std::vector<unsigned long> leader_ids;
  bool have_leaders = false;
  bool loops_forbidden = false;
  std::size_t declared_nodes = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
    auto colon = body.find(':');
    if (colon == std::string::npos) {
      edges_only += line;
      edges_only += '\n';
      continue;
    }
    edges_only += '\n';  // keep line numbers aligned
    std::string key = trim(body.substr(0, colon));
    std::istringstream values(body.substr(colon + 1));
    std::vector<std::string> tokens;
    for (std::string tok; values >> tok;) tokens.push_back(tok);

    if (key == "leaders") {
      if (have_leaders) bad_header(line_no, "duplicate 'leaders:' header");
      have_leaders = true;
      for (const auto& tok : tokens) leader_ids.push_back(positive_id(tok, line_no));
    } else if (key == "loops") {
      if (tokens.size() != 1 || (tokens[0] != "allowed" && tokens[0] != "forbidden")) {
        bad_header(line_no, "'loops:' takes 'allowed' or 'forbidden'");
      }
      loops_forbidden = tokens[0] == "forbidden";
    } else if (key == "nodes") {
      if (tokens.size() != 1) bad_header(line_no, "'nodes:' takes one count");
      declared_nodes = positive_id(tokens[0], line_no);
    } else {
      bad_header(line_no, "unknown header '" + key + "'");
    }
  }
  if (!have_leaders) bad_header(line_no, "missing 'leaders:' header");

  LeaderNetwork net;
  net.graph = parse_digraph(edges_only, declared_nodes);
  if (declared_nodes && net.graph.node_count > declared_nodes) {
    throw Error(ErrorCode::kUnknownNode,
                "edge uses node " + std::to_string(net.graph.node_count) +
                    " but 'nodes:' declares " + std::to_string(declared_nodes));
  }
  for (unsigned long id : leader_ids) {
    net.graph.node_count = std::max<std::size_t>(net.graph.node_count,
                                                 declared_nodes ? 0 : id);
    net.leaders.push_back(id - 1);
  }
  net.loops_forbidden = loops_forbidden;
  validate(net);
  if (loops_forbidden && net.graph.has_self_loops()) {
    throw Error(ErrorCode::kSelfLoopForbidden,
                "self-loop present under 'loops: forbidden'");
  }
  return net;
}

}  // namespace ssc
