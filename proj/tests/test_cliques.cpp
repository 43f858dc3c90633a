#include "enpt/cliques.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "enpt/generators.hpp"
#include "test_util.hpp"

using namespace enpt;

namespace {

std::vector<std::vector<int>> brute_maximal_cliques(const LabeledGraph& g) {
  std::vector<std::vector<int>> cliques;
  for (unsigned mask = 1; mask < (1u << g.n); mask++) {
    std::vector<int> s;
    for (int v = 0; v < g.n; v++)
      if (mask & (1u << v)) s.push_back(v);
    bool ok = true;
    for (size_t i = 0; i < s.size() && ok; i++)
      for (size_t j = i + 1; j < s.size() && ok; j++) ok = g.has_edge(s[i], s[j]);
    if (ok) cliques.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (const auto& c : cliques) {
    bool maximal = true;
    for (const auto& d : cliques)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Cliques, CliqueRepresentations) {
  auto cs = enumerate_maximal_cliques(rep_of_clique(4));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(max_clique(rep_of_clique(5)).size(), 5u);
}

TEST(Cliques, EvenCycleCliquesAreEdges) {
  auto cs = enumerate_maximal_cliques(rep_of_even_cycle(8));
  ASSERT_EQ(cs.size(), 8u);
  for (const auto& c : cs) ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(cs, brute_maximal_cliques(cycle_graph(8)));
  EXPECT_EQ(max_clique(rep_of_even_cycle(10)).size(), 2u);
}

TEST(Cliques, TreeRepresentation) {
  LabeledGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(max_clique(rep_of_tree(star)).size(), 2u);
}

TEST(Cliques, MatchesBruteForceOnRandomRepresentations) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; iter++) {
    Representation r = enpt::testutil::random_representation(rng, 9, 8);
    std::int64_t candidates = 0;
    auto cs = enumerate_maximal_cliques(r, &candidates);
    EXPECT_EQ(cs, brute_maximal_cliques(build_enpt(r)));
    std::int64_t tn = r.tree.size();
    EXPECT_LE(candidates, 4 * tn * tn * tn);
  }
}
