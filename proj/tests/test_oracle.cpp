#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "enpt/cliques.hpp"
#include "enpt/generators.hpp"
#include "enpt/minimal.hpp"
#include "enpt/oracle.hpp"
#include "enpt/verifier.hpp"
#include "test_util.hpp"

using namespace enpt;

TEST(EnumerateTrees, CountsPerSizeAndGuard) {
  EXPECT_EQ(enumerate_trees(2).size(), 1u);
  EXPECT_EQ(enumerate_trees(3).size(), 2u);
  EXPECT_EQ(enumerate_trees(6).size(), 13u);  // 1 + 1 + 2 + 3 + 6
  auto all8 = enumerate_trees(8);
  EXPECT_EQ(all8.size(), 47u);  // ... + 11 + 23
  std::set<std::string> forms;
  int prev_size = 0;
  for (const HostTree& t : all8) {
    EXPECT_GE(t.size(), prev_size);  // ordered by size
    prev_size = t.size();
    EXPECT_TRUE(forms.insert(detail::tree_canonical(t).first).second);  // no iso duplicates
  }
  EXPECT_THROW(enumerate_trees(11), Error);
}

TEST(EnumerateTrees, EmittedInstancesAreCanonical) {
  for (const HostTree& t : enumerate_trees(7)) {
    auto [form, map] = detail::tree_canonical(t);
    EXPECT_EQ(detail::decode_tree(form).edges(), t.edges());
  }
}

TEST(TreeAutomorphisms, SmallGroups) {
  EXPECT_EQ(tree_automorphisms(HostTree(2, {{0, 1}})).size(), 2u);
  EXPECT_EQ(tree_automorphisms(HostTree(3, {{0, 1}, {1, 2}})).size(), 2u);
  // star on 4 vertices: the 3 leaves permute freely
  EXPECT_EQ(tree_automorphisms(HostTree(4, {{0, 1}, {0, 2}, {0, 3}})).size(), 6u);
  // every member preserves adjacency
  HostTree spider(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}});
  for (const auto& a : tree_automorphisms(spider))
    for (const Edge& e : spider.edges())
      EXPECT_TRUE(spider.has_edge(a[static_cast<size_t>(e.first)], a[static_cast<size_t>(e.second)]));
}

TEST(EnumerateReps, ChordlessFourCycleHasNoRepresentation) {
  auto reps = enumerate_representations_of_pair(PairGC(4, {}), 7);
  EXPECT_TRUE(reps.empty());
}

TEST(EnumerateReps, CompleteFourOnFourCycle) {
  PairGC p(4, {{0, 2}, {1, 3}});
  auto reps = enumerate_representations_of_pair(p, 7);
  ASSERT_FALSE(reps.empty());
  std::vector<Representation> minimal;
  for (const Representation& r : reps) {
    EXPECT_TRUE(verify_representation(r, p).ok());
    if (is_minimal(r)) minimal.push_back(r);
  }
  // here even the label-respecting count is one: the double-star host's
  // automorphisms realize every symmetry of the pair
  ASSERT_EQ(minimal.size(), 1u);
  EXPECT_EQ(canonical_rep_key(minimal[0]), canonical_rep_key(detail::c4_k4_fixture()));
}

TEST(EnumerateReps, DiamondOnFourCycle) {
  PairGC p(4, {{1, 3}});
  auto reps = enumerate_representations_of_pair(p, 7);
  ASSERT_FALSE(reps.empty());
  std::vector<Representation> minimal;
  for (const Representation& r : reps) {
    EXPECT_TRUE(verify_representation(r, p).ok());
    if (is_minimal(r)) minimal.push_back(r);
  }
  // with labels pinned there are two minimal classes, mirror images under the
  // diamond's own symmetry swapping the two degree-2 vertices; as unlabeled
  // representations they are one — that is the uniqueness being certified
  ASSERT_EQ(minimal.size(), 2u);
  std::set<std::pair<std::string, std::vector<Edge>>> orbits;
  for (const Representation& r : minimal) orbits.insert(canonical_rep_key(r, p));
  EXPECT_EQ(orbits.size(), 1u);
  EXPECT_TRUE(orbits.count(canonical_rep_key(detail::c4_diamond_fixture(), p)));
  bool fixture_is_one_of_them =
      canonical_rep_key(minimal[0]) == canonical_rep_key(detail::c4_diamond_fixture()) ||
      canonical_rep_key(minimal[1]) == canonical_rep_key(detail::c4_diamond_fixture());
  EXPECT_TRUE(fixture_is_one_of_them);
}

TEST(EnumerateReps, TriforceMinimalAdmittedRepresentationIsTheStarTour) {
  PairGC p(6, {{0, 2}, {2, 4}, {0, 4}});
  OracleOptions pies;
  pies.require_p3 = true;
  auto reps = enumerate_representations_of_pair(p, 4, pies);
  ASSERT_EQ(reps.size(), 1u);  // on hosts this small, admitted at all means the star tour
  EXPECT_TRUE(is_minimal(reps[0]));
  EXPECT_EQ(canonical_rep_key(reps[0]), canonical_rep_key(rep_of_even_cycle(6)));
}

TEST(EnumerateReps, GeneratorOutputsAppearAfterCanonicalization) {
  // the 6-cycle star tour is found among representations of its pair
  PairGC triforce(6, {{0, 2}, {2, 4}, {0, 4}});
  auto reps = enumerate_representations_of_pair(triforce, 4);
  ASSERT_FALSE(reps.empty());
  std::set<std::pair<std::string, std::vector<Edge>>> keys;
  for (const Representation& r : reps) keys.insert(canonical_rep_key(r));
  EXPECT_EQ(keys.size(), reps.size());  // output is duplicate-free
  EXPECT_TRUE(keys.count(canonical_rep_key(rep_of_even_cycle(6))));

  // the triangle clique generator is found among representations of (K3, C3)
  auto k3reps = enumerate_representations_of_pair(PairGC(3, {}), 6);
  std::set<std::pair<std::string, std::vector<Edge>>> k3keys;
  for (const Representation& r : k3reps) k3keys.insert(canonical_rep_key(r));
  EXPECT_TRUE(k3keys.count(canonical_rep_key(rep_of_clique(3))));
}

TEST(EnumerateReps, OptionsFilterAndStop) {
  PairGC p(4, {{0, 2}, {1, 3}});
  OracleOptions first;
  first.stop_after_first = true;
  auto one = enumerate_representations_of_pair(p, 7, first);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(verify_representation(one[0], p).ok());

  PairGC triforce(6, {{0, 2}, {2, 4}, {0, 4}});
  OracleOptions pies;
  pies.require_p3 = true;
  auto admitted = enumerate_representations_of_pair(triforce, 4, pies);
  ASSERT_FALSE(admitted.empty());
  for (const Representation& r : admitted) EXPECT_TRUE(check_p3(r, triforce).ok);
  auto all = enumerate_representations_of_pair(triforce, 4);
  EXPECT_LE(admitted.size(), all.size());
}

TEST(EnumerateReps, ResourceGuards) {
  EXPECT_THROW(enumerate_representations_of_pair(PairGC(7, {}), 5), Error);
  EXPECT_THROW(enumerate_representations_of_pair(PairGC(4, {}), 9), Error);
  OracleOptions big;
  big.allow_large_n = true;
  big.stop_after_first = true;
  EXPECT_NO_THROW(enumerate_representations_of_pair(PairGC(7, {}), 4, big));
  EXPECT_THROW(search_enpt_representation(cycle_graph(7), 5), Error);
  EXPECT_THROW(search_enpt_representation(cycle_graph(4), 9), Error);
}

TEST(SearchEnpt, FindsSmallTargets) {
  LabeledGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  auto r3 = search_enpt_representation(k3, 5);
  ASSERT_TRUE(r3.has_value());
  EXPECT_EQ(build_enpt(*r3), k3);

  auto r4 = search_enpt_representation(cycle_graph(4), 7);
  ASSERT_TRUE(r4.has_value());
  EXPECT_EQ(build_enpt(*r4), cycle_graph(4));

  // a path target needs only parallel/splitting non-edges
  LabeledGraph p3(3, {{0, 1}, {1, 2}});
  auto rp = search_enpt_representation(p3, 4);
  ASSERT_TRUE(rp.has_value());
  EXPECT_EQ(build_enpt(*rp), p3);
}

TEST(SearchEnpt, FindsFiveWheel) {
  LabeledGraph wheel = wheel_w51();
  auto r = search_enpt_representation(wheel, 8);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(build_enpt(*r), wheel);
  EXPECT_LE(r->tree.size(), 8);
}

TEST(NoSmallerEquivalent, AgreesWithFixtures) {
  EXPECT_TRUE(no_smaller_equivalent(rep_of_even_cycle(6)));
  EXPECT_TRUE(no_smaller_equivalent(detail::c4_k4_fixture()));
  EXPECT_TRUE(no_smaller_equivalent(detail::c4_diamond_fixture()));
  EXPECT_TRUE(no_smaller_equivalent(detail::c5_fixture()));

  // pad the host with an unused branch: still the same graphs, not minimal
  Representation r = rep_of_even_cycle(6);
  std::vector<Edge> es = r.tree.edges();
  es.push_back(make_edge(r.tree.size(), 0));
  Representation padded{HostTree(r.tree.size() + 1, es), r.paths};
  for (TreePath& p : padded.paths) p = TreePath(padded.tree, p.verts());
  EXPECT_FALSE(no_smaller_equivalent(padded));
}

TEST(NoSmallerEquivalent, MatchesOneStepMinimalityOnRandomInputs) {
  std::mt19937 rng(20260814);
  int checked = 0;
  for (int it = 0; it < 150; it++) {
    Representation r = enpt::testutil::random_representation(rng, 6, 4);
    checked++;
    EXPECT_EQ(is_minimal(r), no_smaller_equivalent(r)) << "iteration " << it;
  }
  EXPECT_EQ(checked, 150);
}
