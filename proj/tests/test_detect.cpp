#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "rx3/detect.hpp"
#include "rx3/errors.hpp"

namespace rx3 {
namespace {

Graph k(int n) {
  if (n >= 3) return build_named({FamilyKind::complete, n});
  if (n == 2) return build_named({FamilyKind::path, 2});
  return Graph(1);
}
Graph cycle(int n) { return build_named({FamilyKind::cycle, n}); }
Graph path(int n) { return build_named({FamilyKind::path, n}); }
Graph star(int t) { return build_named({FamilyKind::star, t}); }
Graph hairy(int t) { return build_named({FamilyKind::hairy_clique, t}); }

// K3 joined with two non-adjacent vertices.
Graph k3_join_two() {
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                               {2, 3}, {0, 4}, {1, 4}, {2, 4}};
  return from_edge_list(5, pairs);
}

// Exhaustive induced containment over all injective maps.
bool induced_bruteforce(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        ok = h.adjacent(a, b) == g.adjacent(perm[a], perm[b]);
    if (ok) return true;
    std::reverse(perm.begin() + k, perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(ContainsInduced, Examples) {
  const auto p4_in_c5 = contains_induced(cycle(5), path(4));
  ASSERT_TRUE(p4_in_c5);
  EXPECT_TRUE(is_induced_embedding(cycle(5), path(4), *p4_in_c5));
  EXPECT_FALSE(contains_induced(k(5), path(3)));
  EXPECT_FALSE(contains_induced(hairy(3), star(3)));
}

TEST(ContainsInduced, CapOnGenericSearch) {
  const Graph big_pattern = hairy(5);  // 10 vertices, neither star nor path
  EXPECT_THROW(contains_induced(hairy(6), big_pattern), CapExceededError);
  // Larger than the host: trivially absent, no cap needed.
  EXPECT_FALSE(contains_induced(k(5), big_pattern));
  // Paths and stars use dedicated searches with no cap.
  EXPECT_TRUE(contains_induced(cycle(12), path(10)));
  EXPECT_TRUE(contains_induced(star(9), star(9)));
}

TEST(ContainsInduced, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(17);
  const std::vector<Graph> patterns{path(3), path(4), star(3), cycle(4), k(3),
                                    from_edge_list(4, std::vector<std::pair<int, int>>{
                                                          {0, 1}, {1, 2}, {2, 0}, {2, 3}})};
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 5, rng, 0.35);
    for (const Graph& h : patterns) {
      const auto found = contains_induced(g, h);
      ASSERT_EQ(found.has_value(), induced_bruteforce(g, h));
      if (found) EXPECT_TRUE(is_induced_embedding(g, h, *found));
    }
  }
}

TEST(IsFree, Examples) {
  const std::vector<Graph> p3_only{path(3)};
  EXPECT_TRUE(is_free(k(6), p3_only).all_free());

  const std::vector<Graph> battery{star(3), hairy(3), path(5)};
  const auto report = is_free(cycle(7), battery);
  EXPECT_FALSE(report.all_free());
  EXPECT_TRUE(report.entries[0].free);
  EXPECT_TRUE(report.entries[1].free);
  ASSERT_FALSE(report.entries[2].free);
  EXPECT_EQ(report.first_violation(), 2);
  EXPECT_TRUE(is_induced_embedding(cycle(7), path(5), report.entries[2].witness));

  const std::vector<Graph> pair{path(4), star(3)};
  EXPECT_TRUE(is_free(k3_join_two(), pair).all_free());
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(k(5)), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(max_clique(cycle(5)).size(), 2u);
  EXPECT_EQ(max_clique(cycle(5)), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(max_clique(hairy(4)), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(MaxIndependentIn, Examples) {
  const Graph c6 = cycle(6);
  EXPECT_EQ(max_independent_in(c6, c6.all_vertices()), (std::vector<Vertex>{0, 2, 4}));
  const Graph k5 = k(5);
  EXPECT_EQ(max_independent_in(k5, k5.all_vertices()), (std::vector<Vertex>{0}));
  const std::vector<Vertex> pendants{3, 4, 5};
  EXPECT_EQ(max_independent_in(hairy(3), pendants), pendants);
}

TEST(MaxCliqueAndIndependent, AgreeWithSubsetEnumeration) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n) {
    int idx = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      if (n == 6 && idx++ % 25 != 0) return;
      const std::uint32_t all = (1u << n) - 1;
      EXPECT_EQ(max_clique(g),
                oracle::best_subset(g, all, [&](std::uint32_t m) { return oracle::is_clique(g, m); }));
      const std::uint32_t pool = static_cast<std::uint32_t>(rng()) & all;
      const auto expected =
          oracle::best_subset(g, pool, [&](std::uint32_t m) { return oracle::is_independent(g, m); });
      EXPECT_EQ(max_independent_in(g, oracle::mask_to_list(pool)), expected);
    });
  }
  // A sample at n = 7 as well.
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_connected(7, rng, 0.4);
    EXPECT_EQ(max_clique(g),
              oracle::best_subset(g, 127, [&](std::uint32_t m) { return oracle::is_clique(g, m); }));
    EXPECT_EQ(max_independent_in(g, g.all_vertices()),
              oracle::best_subset(g, 127, [&](std::uint32_t m) { return oracle::is_independent(g, m); }));
  }
}

TEST(RecognizePattern, Examples) {
  const auto p4 = recognize_pattern(path(4));
  EXPECT_EQ(p4.shape, Shape::p4);
  EXPECT_TRUE(p4.hairy_fragment);
  EXPECT_TRUE(contains_induced(hairy(3), path(4)));

  const auto claw = recognize_pattern(star(3));
  EXPECT_EQ(claw.shape, Shape::star);
  EXPECT_EQ(claw.param, 3);
  EXPECT_FALSE(claw.hairy_fragment);
  EXPECT_FALSE(contains_induced(hairy(3), star(3)));
  EXPECT_FALSE(contains_induced(hairy(4), star(3)));

  const auto k4 = recognize_pattern(k(4));
  EXPECT_EQ(k4.shape, Shape::hairy_fragment);
  EXPECT_TRUE(k4.hairy_fragment);
}

TEST(RecognizePattern, PrecedenceAndDegenerateCases) {
  EXPECT_EQ(recognize_pattern(path(3)).shape, Shape::p3);
  EXPECT_EQ(recognize_pattern(path(6)).shape, Shape::path);
  EXPECT_EQ(recognize_pattern(path(6)).param, 6);
  EXPECT_EQ(recognize_pattern(path(2)).shape, Shape::path);
  EXPECT_TRUE(recognize_pattern(path(2)).hairy_fragment);
  EXPECT_TRUE(recognize_pattern(Graph(1)).hairy_fragment);
  EXPECT_EQ(recognize_pattern(cycle(5)).shape, Shape::other);
  EXPECT_FALSE(recognize_pattern(path(5)).hairy_fragment);
  const std::vector<std::pair<int, int>> pairs{{0, 1}};
  EXPECT_THROW(recognize_pattern(from_edge_list(3, pairs)), DisconnectedError);
}

TEST(RecognizePattern, HairyFragmentMatchesEmbeddingOracle) {
  std::vector<Graph> hosts;
  for (int s = 3; s <= 6; ++s) hosts.push_back(hairy(s));
  for (int n = 1; n <= 6; ++n) {
    for_each_connected_graph(
        n,
        [&](const Graph& h) {
          bool embeds = false;
          for (const Graph& host : hosts) embeds = embeds || contains_induced(host, h).has_value();
          EXPECT_EQ(recognize_pattern(h).hairy_fragment, embeds)
              << "n=" << n << " m=" << h.size();
        },
        {.up_to_isomorphism = true});
  }
}

TEST(ClassifyFamily, Battery) {
  auto classify = [](std::vector<Graph> f) { return classify_family(f); };
  const auto f1 = classify({path(3)});
  EXPECT_TRUE(f1.bounded);
  EXPECT_EQ(f1.subfamily, 1);

  const auto f2 = classify({star(3), path(4)});
  EXPECT_TRUE(f2.bounded);
  EXPECT_EQ(f2.subfamily, 2);
  EXPECT_EQ(f2.members, (std::vector<int>{0, 1}));

  const auto f3 = classify({star(4), k(3), path(6)});
  EXPECT_TRUE(f3.bounded);
  EXPECT_EQ(f3.subfamily, 3);
  EXPECT_EQ(f3.members, (std::vector<int>{0, 1, 2}));

  EXPECT_FALSE(classify({star(3), cycle(4)}).bounded);
  EXPECT_FALSE(classify({k(4)}).bounded);
  EXPECT_FALSE(classify({path(5)}).bounded);
  EXPECT_FALSE(classify({star(3), path(5)}).bounded);
  EXPECT_FALSE(classify({star(3), cycle(5), path(5)}).bounded);
  EXPECT_TRUE(classify({star(3), hairy(3), path(7)}).bounded);
}

TEST(ClassifyFamily, RejectsDisconnectedMember) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}};
  std::vector<Graph> f{from_edge_list(3, pairs)};
  EXPECT_THROW(classify_family(f), DisconnectedError);
}

TEST(ClassifyFamily, MonotoneUnderAddition) {
  const std::vector<Graph> pool{path(3), path(4), path(5), path(6), star(3), star(4),
                                k(3),    k(4),    cycle(4), cycle(5), hairy(3), Graph(1)};
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Graph> family;
    const int size = 1 + trial % 4;
    for (int i = 0; i < size; ++i) family.push_back(pool[pick(rng)]);
    const bool before = classify_family(family).bounded;
    family.push_back(pool[pick(rng)]);
    if (before) EXPECT_TRUE(classify_family(family).bounded);
  }
}

}  // namespace
}  // namespace rx3
