#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "report_json.hpp"
#include "ssc/analysis.hpp"
#include "ssc/error.hpp"
#include "ssc/graph_color.hpp"
#include "ssc/network.hpp"
#include "ssc/oracle.hpp"
#include "ssc/pattern.hpp"

namespace ssc::cli {
namespace {

enum class Format { kHuman, kJson, kDot };

struct RunConfig {
  std::vector<std::string> paths;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  Format format = Format::kHuman;
  std::string dot_path;
  bool full_traces = false;
  std::size_t sweep = 0;
  std::vector<std::string> values;
};

// Raised for anything the user can fix: unreadable files, bad contents.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError(path + ": cannot write file");
}

// Runs a reader and turns library errors into "path:line:col: message".
template <typename F>
auto with_location(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    std::string msg = path + ":" + std::to_string(e.line()) + ":" +
                      std::to_string(e.col() + 1) + ": " +
                      to_string(e.code()) + ": " + e.what();
    throw InputError(msg);
  } catch (const Error& e) {
    throw InputError(path + ": " + to_string(e.code()) + ": " + e.what());
  }
}

StructuredSystem load_system(const std::vector<std::string>& paths) {
  if (paths.size() == 1) {
    const std::string text = read_file(paths[0]);
    return with_location(paths[0], [&] { return parse_system(text); });
  }
  const std::string a_text = read_file(paths[0]);
  const std::string b_text = read_file(paths[1]);
  PatternMatrix a = with_location(paths[0], [&] { return parse_pattern(a_text); });
  PatternMatrix b = with_location(paths[1], [&] { return parse_pattern(b_text); });
  return with_location(paths[0] + " + " + paths[1],
                       [&] { return StructuredSystem(a, b); });
}

std::string plain(const Rational& r) { return r.get_str(); }

void print_matrix(std::ostream& out, const std::string& name,
                  const RationalMatrix& m) {
  out << "  " << name << " =\n";
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(plain(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "   ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      out << ' ' << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
}

void print_vector(std::ostream& out, const std::string& name,
                  std::span<const Rational> v) {
  out << "  " << name << " = [";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << plain(v[i]);
  out << "]\n";
}

void print_trace(std::ostream& out, const ColorTrace& trace) {
  for (const auto& c : trace.changes)
    out << "  node " << c.forcer + 1 << " colors " << c.forced + 1 << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_condition(std::ostream& out, const std::string& label,
                     const ConditionResult& c) {
  out << label << ": " << yes_no(c.holds);
  if (c.implied) out << " (implied)";
  out << '\n';
  if (c.trace) print_trace(out, *c.trace);
}

void emit_dot(const RunConfig& cfg, std::ostream& out, const std::string& dot) {
  if (cfg.format == Format::kDot) out << dot;
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, dot);
}

// Both graphs of the two-condition test, condition 1 first.
std::string system_dot(const StructuredSystem& s, const AnalysisReport& r) {
  auto graph1 = build_graph(concat_horizontal(s.a(), s.b()));
  auto graph2 = build_graph(concat_horizontal(modified_diagonal(s.a()), s.b()));
  return export_dot(graph1, r.condition1.trace) +
         export_dot(graph2, r.condition2.trace);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_system(cfg.paths);
  AnalysisOptions opts;
  opts.full_traces = cfg.full_traces || cfg.format == Format::kDot ||
                     !cfg.dot_path.empty();
  const auto report = strong_controllability(s, opts);

  if (cfg.format == Format::kJson) {
    Json j;
    j["A"] = render_compact(s.a());
    j["B"] = render_compact(s.b());
    Json body = to_json(report);
    for (auto& [k, v] : body.items()) j[k] = v;
    out << j.dump(2) << '\n';
  } else if (cfg.format == Format::kHuman) {
    out << "states: " << s.states() << ", inputs: " << s.inputs() << '\n';
    print_condition(out, "condition 1, G([A B]) colorable", report.condition1);
    print_condition(out, "condition 2, G([Abar B]) colorable", report.condition2);
    if (report.shortcut_used) out << "shortcut: A has no zero diagonal entry\n";
    out << "verdict: "
        << (report.verdict ? "controllable" : "not controllable") << '\n';
    if (report.witness) {
      const auto& w = *report.witness;
      out << "witness: lambda = " << plain(w.lambda) << '\n';
      print_matrix(out, "A0", w.a0);
      print_matrix(out, "B0", w.b0);
      print_vector(out, "x", w.x);
    }
  }
  emit_dot(cfg, out, system_dot(s, report));
  return report.verdict ? kAffirmative : kNegative;
}

int cmd_colorable(const RunConfig& cfg, std::ostream& out) {
  const std::string& path = cfg.paths.front();
  const std::string text = read_file(path);
  const auto m = with_location(path, [&] { return parse_pattern(text); });
  const auto graph = with_location(path, [&] { return build_graph(m); });
  const auto result = colorability(graph);
  std::optional<RankWitness> witness;
  if (!result.complete) witness = rank_deficiency_witness(m, result.trace);

  if (cfg.format == Format::kJson) {
    Json j;
    j["M"] = render_compact(m);
    j["colorable"] = result.complete;
    j["trace"] = to_json(result.trace);
    if (witness) {
      j["rank_witness"] = Json{{"instance", to_json(witness->instance)},
                               {"left_null", to_json(witness->left_null)}};
    } else {
      j["rank_witness"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == Format::kHuman) {
    out << "M: " << m.rows() << "x" << m.cols() << '\n';
    print_trace(out, result.trace);
    out << "colorable: " << yes_no(result.complete) << '\n';
    if (witness) {
      out << "rank witness:\n";
      print_matrix(out, "M0", witness->instance);
      print_vector(out, "y", witness->left_null);
    }
  }
  emit_dot(cfg, out, export_dot(graph, result.trace));
  return result.complete ? kAffirmative : kNegative;
}

ValueGrid grid_from(const RunConfig& cfg) {
  if (cfg.values.empty()) return ValueGrid::standard();
  RationalVector vals;
  for (const auto& tok : cfg.values) {
    try {
      vals.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw InputError("--values: not a rational number: '" + tok + "'");
    }
  }
  auto grid = ValueGrid::from_list(vals);
  if (grid.nonzero.empty()) throw InputError("--values: no nonzero value given");
  return grid;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials == 0) throw InputError("--trials must be at least 1");
  const auto s = load_system(cfg.paths);
  const auto grid = grid_from(cfg);
  const auto report = strong_controllability(s);

  std::optional<ConcretePair> injected;
  if (report.witness) injected = ConcretePair{report.witness->a0, report.witness->b0};
  const auto mc = monte_carlo_ssc(s, cfg.trials, cfg.seed, report.verdict, injected);

  std::optional<OracleVerdict> exhaustive;
  const std::size_t free_entries =
      s.a().rows() * s.a().cols() - s.a().count(PatternSymbol::kZero) +
      s.b().rows() * s.b().cols() - s.b().count(PatternSymbol::kZero);
  if (free_entries <= kMaxFreeEntries)
    exhaustive = exhaustive_small(s, grid, report.verdict);

  const bool agrees = mc.agrees && (!exhaustive || exhaustive->agrees);
  if (cfg.format == Format::kJson) {
    Json j;
    j["verdict"] = report.verdict;
    j["seed"] = cfg.seed;
    j["monte_carlo"] = to_json(mc);
    j["exhaustive"] = exhaustive ? to_json(*exhaustive) : Json(nullptr);
    j["agrees"] = agrees;
    out << j.dump(2) << '\n';
  } else {
    out << "pattern verdict: "
        << (report.verdict ? "controllable" : "not controllable") << '\n';
    auto describe = [&](const std::string& name, const OracleVerdict& v) {
      out << name << ": " << v.trials
          << (v.mode == OracleMode::kMonteCarlo ? " trials" : " assignments");
      if (v.counterexample) {
        out << ", counterexample at index " << *v.counterexample_index << '\n';
        print_matrix(out, "A0", v.counterexample->a);
        print_matrix(out, "B0", v.counterexample->b);
      } else {
        out << ", no counterexample\n";
      }
    };
    describe("monte carlo (seed " + std::to_string(cfg.seed) + ")", mc);
    if (exhaustive) {
      describe("exhaustive", *exhaustive);
    } else {
      out << "exhaustive: skipped, " << free_entries << " free entries\n";
    }
    out << "oracle agrees: " << yes_no(agrees) << '\n';
  }
  return agrees ? kAffirmative : kInconsistent;
}

std::vector<SweepRow> sweep_rows(std::size_t max_nodes, std::ostream* log) {
  std::vector<SweepRow> rows;
  AnalysisOptions opts;
  opts.with_witness = false;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (bool qdiag : {false, true}) {
      SweepRow row{n, qdiag, 0, 0};
      std::vector<Edge> slots;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!qdiag || i != j) slots.push_back({i, j});
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        LeaderNetwork net;
        net.graph.node_count = n;
        net.loops_forbidden = qdiag;
        for (std::size_t k = 0; k < slots.size(); ++k)
          if (mask >> k & 1) net.graph.edges.push_back(slots[k]);
        for (std::uint64_t lead = 1; lead < (std::uint64_t{1} << n); ++lead) {
          net.leaders.clear();
          for (std::size_t v = 0; v < n; ++v)
            if (lead >> v & 1) net.leaders.push_back(v);
          const bool pattern =
              strong_controllability(qdiag ? pattern_from_network_qdiag(net)
                                           : pattern_from_network_star(net),
                                     opts)
                  .verdict;
          const bool graph =
              qdiag ? mzc_controllability(net) : td_controllability(net);
          ++row.cases;
          if (pattern != graph) {
            ++row.mismatches;
            if (log) *log << "mismatch: n=" << n << " edges=" << mask
                          << " leaders=" << lead << '\n';
          }
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

int cmd_net(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sweep) {
    const auto rows = sweep_rows(cfg.sweep, &err);
    std::size_t total = 0;
    for (const auto& r : rows) total += r.mismatches;
    if (cfg.format == Format::kJson) {
      Json j;
      j["sweep"] = cfg.sweep;
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"nodes", r.nodes},
                           {"family", r.qdiag ? "qdiag" : "star"},
                           {"test", r.qdiag ? "mzc" : "td"},
                           {"cases", r.cases},
                           {"mismatches", r.mismatches}});
      }
      j["rows"] = std::move(arr);
      j["mismatches"] = total;
      out << j.dump(2) << '\n';
    } else {
      out << "nodes  family  test  cases     mismatches\n";
      for (const auto& r : rows) {
        std::ostringstream line;
        line << r.nodes;
        std::string s = line.str();
        s.resize(7, ' ');
        s += r.qdiag ? "qdiag   mzc   " : "star    td    ";
        std::string cases = std::to_string(r.cases);
        cases.resize(10, ' ');
        out << s << cases << r.mismatches << '\n';
      }
      out << "total mismatches: " << total << '\n';
    }
    if (total) return kInconsistent;
    if (cfg.paths.empty()) return kAffirmative;
  }
  if (cfg.paths.empty()) throw InputError("net: a network file or --sweep N is required");

  const std::string& path = cfg.paths.front();
  const std::string text = read_file(path);
  const auto net = with_location(path, [&] { return parse_network(text); });
  const bool qdiag = net.loops_forbidden;
  const auto s = qdiag ? pattern_from_network_qdiag(net) : pattern_from_network_star(net);
  const auto report = strong_controllability(s);
  const bool graph = qdiag ? mzc_controllability(net) : td_controllability(net);
  const bool match = report.verdict == graph;

  if (cfg.format == Format::kJson) {
    Json j;
    j["family"] = qdiag ? "qdiag" : "star";
    j["nodes"] = net.node_count();
    Json leaders = Json::array();
    for (auto v : net.leaders) leaders.push_back(v + 1);
    j["leaders"] = std::move(leaders);
    j["A"] = render_compact(s.a());
    j["B"] = render_compact(s.b());
    j["pattern_verdict"] = report.verdict;
    j[qdiag ? "mzc" : "td"] = graph;
    j["match"] = match;
    out << j.dump(2) << '\n';
  } else {
    out << "family: " << (qdiag ? "?-diagonal (loops forbidden)" : "* (loops allowed)")
        << ", " << net.node_count() << " nodes, leaders";
    for (auto v : net.leaders) out << ' ' << v + 1;
    out << '\n';
    out << "pattern  " << (qdiag ? "mzc" : "td ") << "    match\n";
    out << (report.verdict ? "true   " : "false  ") << "  "
        << (graph ? "true   " : "false  ") << yes_no(match) << '\n';
  }
  if (!match) return kInconsistent;
  return report.verdict ? kAffirmative : kNegative;
}

int cmd_weak(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_system(cfg.paths);
  const bool reach = inputs_reach_all_states(s);
  const auto relaxed = concat_horizontal(weak_relaxation(s.a()), weak_relaxation(s.b()));
  const std::size_t rank = term_rank(relaxed);
  const bool weak = weak_controllability(s);
  if (cfg.format == Format::kJson) {
    Json j;
    j["weakly_controllable"] = weak;
    j["inputs_reach_all_states"] = reach;
    j["term_rank"] = rank;
    j["states"] = s.states();
    out << j.dump(2) << '\n';
  } else {
    out << "inputs reach all states: " << yes_no(reach) << '\n';
    out << "term rank of [A B]: " << rank << " of " << s.states() << '\n';
    out << "verdict: " << (weak ? "weakly controllable" : "not weakly controllable")
        << '\n';
  }
  return weak ? kAffirmative : kNegative;
}

}  // namespace

std::vector<SweepRow> sweep_networks(std::size_t max_nodes) {
  return sweep_rows(max_nodes, nullptr);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  std::string format = "human";

  CLI::App app{"Strong structural controllability of 0/*/? pattern systems", "ssc"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--dot", cfg.dot_path, "Also write the colored graph(s) here");
  app.add_flag("--full", cfg.full_traces, "Trace implied conditions too");
  app.add_option("--sweep", cfg.sweep, "net: exhaustive comparison up to N nodes")
      ->check(CLI::Range(1, 4));
  app.add_option("--values", cfg.values, "Exhaustive grid, e.g. -2,-1,1,2")
      ->delimiter(',')
      ->allow_extra_args(false);

  auto add = [&](const char* name, const char* help, std::size_t min_paths,
                 std::size_t max_paths, const char* path_help) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    auto* opt = sub->add_option("paths", cfg.paths, path_help)->expected(
        static_cast<int>(min_paths), static_cast<int>(max_paths));
    if (min_paths) opt->required();
    return sub;
  };
  auto* check = add("check", "Decide strong structural controllability", 1, 2,
                    "A and B files, or one combined 'A | B' file");
  auto* colorable = add("colorable", "Run the color change rule on G(M)", 1, 1,
                        "pattern file M");
  auto* oracle = add("oracle", "Cross-check the verdict numerically", 1, 2,
                     "A and B files, or one combined 'A | B' file");
  auto* net = add("net", "Compare with the zero forcing tests on a network", 0, 1,
                  "network file");
  auto* weak = add("weak", "Decide weak structural controllability", 1, 2,
                   "A and B files, or one combined 'A | B' file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kInputError;
  }
  cfg.format = format == "json" ? Format::kJson
               : format == "dot" ? Format::kDot
                                 : Format::kHuman;

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (colorable->parsed()) return cmd_colorable(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (net->parsed()) return cmd_net(cfg, out, err);
    if (weak->parsed()) return cmd_weak(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kInputError;
}

}  // namespace ssc::cli
