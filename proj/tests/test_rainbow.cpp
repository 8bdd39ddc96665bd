#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rx3/errors.hpp"
#include "rx3/rainbow.hpp"

namespace rx3 {
namespace {

struct ColoredEdge {
  Vertex u, v;
  Color c;
};

EdgeColoring paint(const Graph& g, const std::vector<ColoredEdge>& list) {
  std::vector<Color> colors(g.size(), 0);
  for (const auto& [u, v, c] : list) colors[g.edge_id(u, v)] = c;
  return EdgeColoring(g, colors);
}

// Colors the cycle edges (0,1), (1,2), ..., (t-1,0) in that order.
EdgeColoring paint_cycle(const Graph& g, const std::vector<Color>& around) {
  std::vector<ColoredEdge> list;
  const int t = static_cast<int>(around.size());
  for (int i = 0; i < t; ++i) list.push_back({i, (i + 1) % t, around[i]});
  return paint(g, list);
}

EdgeColoring random_coloring(const Graph& g, int palette, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, palette);
  std::vector<Color> colors(g.size());
  for (Color& c : colors) c = pick(rng);
  return EdgeColoring(g, colors);
}

TEST(RainbowTree, ClawExamples) {
  const Graph claw = build_named({FamilyKind::star, 3});
  const TerminalTriple leaves(1, 2, 3);
  const EdgeColoring distinct = paint(claw, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  const auto cert = find_rainbow_tree(claw, distinct, leaves);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(validate_certificate(claw, distinct, *cert));
  EXPECT_EQ(cert->edges.size(), 3u);

  const EdgeColoring repeated = paint(claw, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}});
  EXPECT_FALSE(find_rainbow_tree(claw, repeated, leaves));
  EXPECT_FALSE(oracle_rainbow_tree_exists(claw, repeated, leaves));
}

TEST(RainbowTree, SmallCycleAndPath) {
  const Graph c4 = build_named({FamilyKind::cycle, 4});
  EXPECT_TRUE(is_3rainbow(c4, paint_cycle(c4, {1, 2, 1, 2})).valid);

  const Graph p3 = build_named({FamilyKind::path, 3});
  const auto check = is_3rainbow(p3, EdgeColoring(p3, {1, 1}));
  EXPECT_FALSE(check.valid);
  ASSERT_TRUE(check.failing_triple);
  EXPECT_EQ(*check.failing_triple, TerminalTriple(0, 1, 2));
}

TEST(RainbowTree, FiveCycleWithThreeColors) {
  const Graph c5 = build_named({FamilyKind::cycle, 5});
  const EdgeColoring coloring = paint_cycle(c5, {1, 2, 3, 1, 2});
  bool oracle_all = true;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        oracle_all = oracle_all && oracle_rainbow_tree_exists(c5, coloring, TerminalTriple(a, b, c));
  EXPECT_TRUE(oracle_all);
  EXPECT_TRUE(is_3rainbow(c5, coloring).valid);
}

TEST(RainbowTree, Errors) {
  const Graph p3 = build_named({FamilyKind::path, 3});
  const Graph c4 = build_named({FamilyKind::cycle, 4});
  EXPECT_THROW(find_rainbow_tree(c4, EdgeColoring(p3, {1, 2}), TerminalTriple(0, 1, 2)),
               InputError);
  EXPECT_THROW(find_rainbow_tree(p3, EdgeColoring(p3, {1, 2}), TerminalTriple(0, 1, 5)),
               InputError);
  EXPECT_THROW(TerminalTriple(1, 1, 2), InputError);
  const std::vector<std::pair<int, int>> split{{0, 1}, {2, 3}};
  const Graph two = from_edge_list(4, split);
  EXPECT_THROW(is_3rainbow(two, EdgeColoring(two, {1, 2})), DisconnectedError);
  const Graph k5 = build_named({FamilyKind::complete, 5});
  const Graph k7 = build_named({FamilyKind::complete, 7});
  EXPECT_NO_THROW(oracle_rainbow_tree_exists(k5, EdgeColoring::all_distinct(k5),
                                             TerminalTriple(0, 1, 2)));
  EXPECT_THROW(oracle_rainbow_tree_exists(k7, EdgeColoring::all_distinct(k7),
                                          TerminalTriple(0, 1, 2)),
               CapExceededError);
}

TEST(RainbowTree, CertificateValidatorRejectsBadTrees) {
  const Graph c4 = build_named({FamilyKind::cycle, 4});
  const EdgeColoring coloring = paint_cycle(c4, {1, 2, 3, 1});
  const TerminalTriple s(0, 1, 2);
  EXPECT_TRUE(validate_certificate(c4, coloring, {{{0, 1}, {1, 2}}, s}));
  EXPECT_FALSE(validate_certificate(c4, coloring, {{{0, 1}, {0, 2}}, s}));          // non-edge
  EXPECT_FALSE(validate_certificate(c4, coloring, {{{0, 1}}, s}));                  // misses 2
  EXPECT_FALSE(validate_certificate(c4, coloring, {{{0, 3}, {2, 3}, {0, 1}}, s}));  // color 1 twice
  EXPECT_FALSE(validate_certificate(c4, coloring, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}, s}));  // cycle
}

TEST(RainbowTree, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(31);
  int positives = 0;
  int negatives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = oracle::random_connected(n, rng, 0.3);
    if (g.size() > kMaxOracleEdges) continue;
    const EdgeColoring coloring = random_coloring(g, 2 + trial % 4, rng);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          const TerminalTriple s(a, b, c);
          const auto cert = find_rainbow_tree(g, coloring, s);
          ASSERT_EQ(cert.has_value(), oracle_rainbow_tree_exists(g, coloring, s));
          if (cert) {
            EXPECT_TRUE(validate_certificate(g, coloring, *cert));
            ++positives;
          } else {
            ++negatives;
          }
        }
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 100);
}

TEST(RainbowCheck, FailingTripleIsLexicographicallyFirst) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 3;
    const Graph g = oracle::random_connected(n, rng, 0.3);
    const EdgeColoring coloring = random_coloring(g, 2 + trial % 3, rng);
    std::optional<TerminalTriple> first;
    for (int a = 0; a < n && !first; ++a)
      for (int b = a + 1; b < n && !first; ++b)
        for (int c = b + 1; c < n && !first; ++c)
          if (!oracle_rainbow_tree_exists(g, coloring, TerminalTriple(a, b, c)))
            first = TerminalTriple(a, b, c);
    const auto check = is_3rainbow(g, coloring);
    EXPECT_EQ(check.valid, !first);
    EXPECT_EQ(check.failing_triple, first);
  }
}

TEST(RainbowCheck, RefiningAColorClassPreservesValidity) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const Graph g = oracle::random_connected(4 + trial % 3, rng, 0.5);
    const EdgeColoring coloring = random_coloring(g, 3 + trial % 3, rng);
    if (!is_3rainbow(g, coloring).valid) continue;
    ++checked;
    std::vector<Color> refined = coloring.colors();
    std::uniform_int_distribution<int> edge(0, g.size() - 1);
    refined[edge(rng)] = coloring.max_color() + 1;
    EXPECT_TRUE(is_3rainbow(g, EdgeColoring(g, refined)).valid);
  }
  EXPECT_GE(checked, 30);
}

TEST(RainbowCheck, SpanningTreeColoringIsAlwaysValid) {
  for (int n = 3; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const EdgeColoring coloring = spanning_tree_coloring(g);
      EXPECT_LE(coloring.num_colors(), n - 1);
      EXPECT_TRUE(is_3rainbow(g, coloring).valid);
    });
  }
}

TEST(RainbowCheck, PalettesWiderThanOneWord) {
  const Graph k12 = build_named({FamilyKind::complete, 12});
  EXPECT_TRUE(is_3rainbow(k12, EdgeColoring::all_distinct(k12)).valid);

  const Graph p70 = build_named({FamilyKind::path, 70});
  std::vector<Color> colors(p70.size());
  for (int i = 0; i < p70.size(); ++i) colors[i] = i + 1;
  colors[p70.edge_id(68, 69)] = colors[p70.edge_id(0, 1)];
  const EdgeColoring coloring(p70, colors);
  EXPECT_EQ(coloring.num_colors(), 68);
  const auto check = is_3rainbow(p70, coloring);
  EXPECT_FALSE(check.valid);
  EXPECT_EQ(check.failing_triple, TerminalTriple(0, 1, 69));
}

}  // namespace
}  // namespace rx3
