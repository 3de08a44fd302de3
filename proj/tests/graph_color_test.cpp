#include <gtest/gtest.h>

#include <algorithm>

#include "ssc/error.hpp"
#include "ssc/graph_color.hpp"
#include "ssc/oracle.hpp"
#include "support.hpp"

namespace ssc {
namespace {

using test::pat;

const PatternMatrix kM45 = pat({"00*00", "0**?*", "*0?00", "0*00?"});
const PatternMatrix kM46 = pat({"*000*0", "0?0*0*", "*00*00", "0?**00"});
// [Abar B] of the network example.
const PatternMatrix kNetworkBar = pat({"?0*0", "??00", "0***"});

bool contains(const std::vector<Edge>& edges, std::size_t from, std::size_t to) {
  return std::find(edges.begin(), edges.end(), Edge{from - 1, to - 1}) != edges.end();
}

TEST(BuildGraph, FourByFive) {
  auto g = build_graph(kM45);
  EXPECT_EQ(g.node_count, 5u);
  EXPECT_EQ(g.row_count, 4u);
  EXPECT_TRUE(contains(g.star_edges, 3, 1));
  EXPECT_TRUE(contains(g.qmark_edges, 3, 3));
  EXPECT_FALSE(contains(g.star_edges, 3, 3));
  EXPECT_EQ(g.star_edges.size() + g.qmark_edges.size(), 9u);
  for (const auto& e : g.star_edges) EXPECT_LT(e.to, g.row_count);
  for (const auto& e : g.qmark_edges) EXPECT_LT(e.to, g.row_count);
}

TEST(BuildGraph, Trivial) {
  auto g = build_graph(pat({"00"}));
  EXPECT_EQ(g.node_count, 2u);
  EXPECT_TRUE(g.star_edges.empty());
  EXPECT_TRUE(g.qmark_edges.empty());
  auto one = build_graph(pat({"*"}));
  ASSERT_EQ(one.star_edges.size(), 1u);
  EXPECT_EQ(one.star_edges[0], (Edge{0, 0}));
  try {
    build_graph(pat({"*", "*"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWideMatrixRequired);
  }
}

TEST(Colorability, FourBySixSequence) {
  auto r = colorability(kM46);
  ASSERT_TRUE(r.complete);
  const std::vector<ColorChange> expected{{4, 0}, {5, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(r.trace.changes, expected);
  EXPECT_EQ(r.trace.black, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(is_valid_trace(kM46, r.trace));
}

TEST(Colorability, SmallCases) {
  EXPECT_FALSE(colorability(pat({"?"})).complete);
  EXPECT_TRUE(colorability(pat({"*"})).complete);
  EXPECT_FALSE(colorability(kNetworkBar).complete);
  EXPECT_THROW(colorability(pat({"*", "*"})), Error);
}

TEST(Colorability, WhiteNodeMayForce) {
  // Column 1 has a single * out-edge and is never colored itself.
  auto r = colorability(pat({"*0", "**"}));
  EXPECT_TRUE(r.complete);
}

TEST(Colorability, InOrderValidatesPermutation) {
  std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4};
  EXPECT_THROW(colorability_in_order(kM46, bad), Error);
  std::vector<std::size_t> rev{5, 4, 3, 2, 1, 0};
  auto r = colorability_in_order(kM46, rev);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(is_valid_trace(kM46, r.trace));
}

TEST(Colorability, TraceValidatorRejectsIllegalSteps) {
  ColorTrace t;
  t.changes = {{3, 1}};  // node 4 has three white out-neighbors at the start
  t.black = {1};
  EXPECT_FALSE(is_valid_trace(kM46, t));
  ColorTrace dup;
  dup.changes = {{4, 0}, {0, 0}};
  dup.black = {0};
  EXPECT_FALSE(is_valid_trace(kM46, dup));
  ColorTrace wrong_black;
  wrong_black.changes = {{4, 0}};
  wrong_black.black = {1};
  EXPECT_FALSE(is_valid_trace(kM46, wrong_black));
}

TEST(Colorability, AgreesWithTextbookFixpoint) {
  SplitMix64 rng(21);
  for (int k = 0; k < 2000; ++k) {
    std::size_t p = 1 + rng.below(5);
    std::size_t q = p + rng.below(3);
    auto m = test::random_pattern(rng, p, q);
    auto r = colorability(m);
    auto black = test::naive_black_set(m);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < p; ++i)
      if (black[i]) expected.push_back(i);
    ASSERT_EQ(r.trace.black, expected) << render_pattern(m);
    EXPECT_EQ(r.complete, expected.size() == p);
    EXPECT_TRUE(is_valid_trace(m, r.trace));
  }
}

void expect_witness(const PatternMatrix& m, const RankWitness& w) {
  EXPECT_TRUE(is_member(w.instance, m));
  EXPECT_FALSE(is_zero(w.left_null));
  EXPECT_TRUE(is_zero(left_multiply(w.left_null, w.instance)));
  EXPECT_LT(test::naive_rank(w.instance), m.rows());
}

TEST(RankWitness, Examples) {
  auto q = pat({"?"});
  auto w = rank_deficiency_witness(q, colorability(q).trace);
  EXPECT_EQ(w.instance, RationalMatrix({{0}}));
  EXPECT_EQ(w.left_null, RationalVector{1});

  auto stars = pat({"**", "**"});
  auto r = colorability(stars);
  EXPECT_FALSE(r.complete);
  auto w2 = rank_deficiency_witness(stars, r.trace);
  EXPECT_EQ(w2.instance, RationalMatrix({{1, 1}, {-1, -1}}));
  EXPECT_EQ(w2.left_null, (RationalVector{1, 1}));

  auto w3 = rank_deficiency_witness(kNetworkBar, colorability(kNetworkBar).trace);
  expect_witness(kNetworkBar, w3);
  for (const auto& v : w3.left_null) EXPECT_TRUE(v == 0 || v == 1);
}

TEST(RankWitness, MixedColumn) {
  // Column with two * and two ? over white rows.
  auto m = pat({"*", "?", "*", "?"});
  PatternMatrix wide = concat_horizontal(m, PatternMatrix(4, 3));
  auto w = rank_deficiency_witness(wide, colorability(wide).trace);
  expect_witness(wide, w);
  EXPECT_EQ(w.instance(0, 0), 1);
  EXPECT_EQ(w.instance(1, 0), -2);
  EXPECT_EQ(w.instance(2, 0), 1);
  EXPECT_EQ(w.instance(3, 0), 0);
}

TEST(RankWitness, Unavailable) {
  try {
    rank_deficiency_witness(kM46, colorability(kM46).trace);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWitnessUnavailable);
  }
  // A prefix of a trace is not a fixpoint.
  auto m = pat({"*0", "**"});
  EXPECT_THROW(rank_deficiency_witness(m, ColorTrace{}), Error);
}

Digraph graph(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    --e.from;
    --e.to;
  }
  std::sort(edges.begin(), edges.end());
  return Digraph{n, edges};
}

TEST(ZeroForcing, Loopy) {
  auto path = graph(3, {{1, 2}, {2, 3}});
  std::vector<std::size_t> all{0, 1, 2};
  auto r = loopy_zero_forcing(path, all);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.trace.changes.empty());

  auto loop = graph(1, {{1, 1}});
  auto self = loopy_zero_forcing(loop, {});
  EXPECT_TRUE(self.complete);
  ASSERT_EQ(self.trace.changes.size(), 1u);
  EXPECT_EQ(self.trace.changes[0], (ColorChange{0, 0}));
  std::vector<std::size_t> banned{0};
  EXPECT_FALSE(loopy_zero_forcing(loop, {}, banned).complete);

  std::vector<std::size_t> bad{7};
  EXPECT_THROW(loopy_zero_forcing(path, bad), Error);
}

TEST(ZeroForcing, Ordinary) {
  auto path = graph(3, {{1, 2}, {2, 3}});
  std::vector<std::size_t> first{0};
  auto r = ordinary_zero_forcing(path, first);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.trace.changes, (std::vector<ColorChange>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_valid_zero_forcing_trace(path, first, r.trace, true));
  EXPECT_FALSE(ordinary_zero_forcing(path, {}).complete);
  try {
    ordinary_zero_forcing(graph(2, {{1, 1}, {1, 2}}), first);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfLoopForbidden);
  }
}

TEST(ZeroForcing, OrdinaryImpliesLoopy) {
  SplitMix64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = 1 + rng.below(6);
    Digraph h{n, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && rng.below(3) == 0) h.edges.push_back({i, j});
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(3) == 0) s.push_back(v);
    auto ord = ordinary_zero_forcing(h, s);
    auto loopy = loopy_zero_forcing(h, s);
    if (ord.complete) EXPECT_TRUE(loopy.complete);
    EXPECT_TRUE(is_valid_zero_forcing_trace(h, s, ord.trace, true));
    EXPECT_TRUE(is_valid_zero_forcing_trace(h, s, loopy.trace, false));
  }
}

TEST(ExportDot, DashedSelfLoop) {
  auto dot = export_dot(build_graph(kM45));
  EXPECT_NE(dot.find("  3 -> 3 [style=dashed];\n"), std::string::npos);
  EXPECT_NE(dot.find("  3 -> 1 [style=solid];\n"), std::string::npos);
}

TEST(ExportDot, Golden) {
  auto m = pat({"*?"});
  auto r = colorability(m);
  EXPECT_EQ(export_dot(build_graph(m), r.trace),
            "digraph G {\n"
            "  node [shape=circle];\n"
            "  1 [style=filled, fillcolor=black, fontcolor=white];\n"
            "  2 [style=filled, fillcolor=white, fontcolor=black];\n"
            "  1 -> 1 [style=solid];\n"
            "  2 -> 1 [style=dashed];\n"
            "}\n");
}

TEST(ExportDot, EmptyAndFilled) {
  auto empty = export_dot(build_graph(pat({"000"})));
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 6);
  EXPECT_EQ(empty.find("->"), std::string::npos);
  auto dot = export_dot(build_graph(kM46), colorability(kM46).trace);
  for (int v = 1; v <= 4; ++v) {
    EXPECT_NE(dot.find("  " + std::to_string(v) +
                       " [style=filled, fillcolor=black, fontcolor=white];"),
              std::string::npos);
  }
  EXPECT_NE(dot.find("  5 [style=filled, fillcolor=white"), std::string::npos);
}

TEST(ParseDigraph, Format) {
  auto h = parse_digraph("# comment\n1 2\n\n2 3  # trailing\n1 2\n", 4);
  EXPECT_EQ(h.node_count, 4u);
  EXPECT_EQ(h.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(parse_digraph("1\n"), ParseError);
  EXPECT_THROW(parse_digraph("0 1\n"), ParseError);
  EXPECT_THROW(parse_digraph("a b\n"), ParseError);
}

}  // namespace
}  // namespace ssc
