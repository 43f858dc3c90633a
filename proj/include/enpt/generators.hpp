#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {

// A tour of a tree with k leaves: k long paths between cyclically consecutive
// leaves (in the order pi) plus k short paths, one leaf edge per leaf.
struct Tour {
  HostTree tree;
  std::vector<int> leaf_order;   // pi
  std::vector<int> long_paths;   // labels into the representation
  std::vector<int> short_paths;  // labels into the representation
};

// Every tree is an ENPT graph: root the input at vertex 0, hang two auxiliary
// vertices above the root, and represent each vertex by the length-2 path to
// its ancestor at distance 2.
inline Representation rep_of_tree(const LabeledGraph& t) {
  int n = t.n;
  if (n < 1) throw Error(ErrorKind::MalformedInput, "empty input");
  HostTree input(n, t.edges);  // validates tree-ness
  std::vector<int> parent(static_cast<size_t>(n + 2), -1);
  {
    std::vector<int> order{0};
    std::vector<char> vis(static_cast<size_t>(n), 0);
    vis[0] = 1;
    for (size_t i = 0; i < order.size(); i++) {
      for (int w : input.neighbors(order[i]))
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          parent[static_cast<size_t>(w)] = order[i];
          order.push_back(w);
        }
    }
  }
  int rbar = n, rbarbar = n + 1;
  parent[0] = rbar;
  parent[static_cast<size_t>(rbar)] = rbarbar;
  std::vector<Edge> host_edges = t.edges;
  host_edges.push_back({0, rbar});
  host_edges.push_back({rbar, rbarbar});
  HostTree host(n + 2, host_edges);
  Representation r{host, {}};
  for (int v = 0; v < n; v++) {
    int p = parent[static_cast<size_t>(v)];
    int gp = parent[static_cast<size_t>(p)];
    r.paths.push_back(TreePath(host, {v, p, gp}));
  }
  return r;
}

// Tour construction; ENPT of the result is C_{2k} with labels in cycle order.
// Label 2i is the long path from pi_i to pi_{i+1}; label 2i+1 is the short
// path (leaf edge) at pi_{i+1}.
inline std::pair<Tour, Representation> make_tour(const HostTree& t, const std::vector<int>& pi) {
  std::vector<int> leaves = t.leaves();
  int k = static_cast<int>(leaves.size());
  if (k < 3) throw Error(ErrorKind::DegenerateTree, "tour needs a tree with at least 3 leaves");
  std::set<int> want(leaves.begin(), leaves.end());
  std::set<int> got(pi.begin(), pi.end());
  if (pi.size() != leaves.size() || want != got)
    throw Error(ErrorKind::MalformedInput, "leaf order is not a permutation of the leaves");
  Representation r{t, {}};
  Tour tour{t, pi, {}, {}};
  for (int i = 0; i < k; i++) {
    int a = pi[static_cast<size_t>(i)];
    int b = pi[static_cast<size_t>((i + 1) % k)];
    r.paths.push_back(TreePath(t, t.path_between(a, b)));
    tour.long_paths.push_back(2 * i);
    int leaf = b;
    r.paths.push_back(TreePath(t, {leaf, t.neighbors(leaf)[0]}));
    tour.short_paths.push_back(2 * i + 1);
  }
  return {tour, r};
}

// True iff some DFS traversal of the tree meets the leaves in the cyclic
// order pi; equivalently, for every tree edge the leaves on each side of it
// occupy a contiguous cyclic arc of pi.
inline bool is_planar_tour(const Tour& tour) {
  const HostTree& t = tour.tree;
  int k = static_cast<int>(tour.leaf_order.size());
  std::vector<int> pos(static_cast<size_t>(t.size()), -1);
  for (int i = 0; i < k; i++) pos[static_cast<size_t>(tour.leaf_order[static_cast<size_t>(i)])] = i;
  for (auto [a, b] : t.edges()) {
    // collect leaf positions on the a-side of edge {a,b}
    std::vector<char> arc(static_cast<size_t>(k), 0);
    std::vector<int> stack{a};
    std::vector<char> vis(static_cast<size_t>(t.size()), 0);
    vis[static_cast<size_t>(a)] = 1;
    vis[static_cast<size_t>(b)] = 1;  // blocked
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (pos[static_cast<size_t>(v)] >= 0) arc[static_cast<size_t>(pos[static_cast<size_t>(v)])] = 1;
      for (int w : t.neighbors(v))
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    int gaps = 0;
    for (int i = 0; i < k; i++)
      if (arc[static_cast<size_t>(i)] && !arc[static_cast<size_t>((i + 1) % k)]) gaps++;
    if (gaps > 1) return false;
  }
  return true;
}

// Tour of a star with n/2 leaves; ENPT = C_n.
inline Representation rep_of_even_cycle(int n) {
  if (n < 6 || n % 2 != 0)
    throw Error(ErrorKind::MalformedInput, "even cycle generator needs even n >= 6");
  int k = n / 2;
  std::vector<Edge> es;
  for (int i = 0; i < k; i++) es.push_back({i, k});
  HostTree star(k + 1, es);
  std::vector<int> pi(static_cast<size_t>(k));
  for (int i = 0; i < k; i++) pi[static_cast<size_t>(i)] = i;
  return make_tour(star, pi).second;
}

// Tour of a double star with one long path split into two edge-intersecting
// halves overlapping on the central edge; ENPT = C_n. The host has centers
// u = k, v = k+1, leaves 0,1 at u and 2..k-1 at v, where k = (n-1)/2.
// Spider host: center 2, two legs of length two (0-1-2 and 4-3-2) plus k-2
// pendant legs.  The tour visits leaf 0, then 4, then the pendants; the long
// path between 0 and 4 is split into two overlapping halves.  The length-two
// legs make each half stick out one edge beyond where the neighbouring long
// paths turn back, so neither half is edge-contained in a neighbour.
inline Representation rep_of_odd_cycle(int n) {
  if (n < 7 || n % 2 != 1)
    throw Error(ErrorKind::MalformedInput, "odd cycle generator needs odd n >= 7");
  int k = (n - 1) / 2;
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  for (int i = 0; i < k - 2; i++) es.push_back({2, 5 + i});
  HostTree t(k + 3, es);
  Representation r{t, {}};
  auto add = [&](std::vector<int> verts) { r.paths.push_back(TreePath(t, std::move(verts))); };
  add({0, 1, 2, 3});  // first half of the split long path
  add({1, 2, 3, 4});  // second half
  add({4, 3});        // short at 4
  add({4, 3, 2, 5});  // long 4-5
  add({5, 2});        // short at 5
  for (int i = 1; i < k - 2; i++) {
    add({4 + i, 2, 5 + i});  // long between consecutive pendants
    add({5 + i, 2});         // short
  }
  add({k + 2, 2, 1, 0});  // wrap back to leaf 0
  add({0, 1});            // short at 0
  return r;
}

// m staggered windows of length m on a host path of 2m vertices; all share
// the central edge and are pairwise collinear, so ENPT = EPT = K_m.
inline Representation rep_of_clique(int m) {
  if (m < 1) throw Error(ErrorKind::MalformedInput, "clique size must be positive");
  int len = std::max(2 * m, 2);
  std::vector<Edge> es;
  for (int i = 0; i + 1 < len; i++) es.push_back({i, i + 1});
  HostTree line(len, es);
  Representation r{line, {}};
  for (int i = 0; i < m; i++) {
    std::vector<int> verts;
    for (int j = i; j <= std::min(i + m, len - 1); j++) verts.push_back(j);
    r.paths.push_back(TreePath(line, verts));
  }
  return r;
}

inline LabeledGraph wheel_w51() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; i++) {
    es.push_back(make_edge(i, (i + 1) % 5));
    es.push_back({i, 5});
  }
  return LabeledGraph(6, es);
}

// Frozen fixture (bounded oracle search over host trees of <= 8 vertices
// certifies existence; the unit tests re-check ENPT = W_{5,1}).
inline Representation rep_of_w51() {
  HostTree t(8, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
  Representation r{t, {}};
  auto add = [&](std::vector<int> verts) { r.paths.push_back(TreePath(t, std::move(verts))); };
  add({2, 3});
  add({0, 2, 3, 4, 5, 6});
  add({4, 5});
  add({3, 4, 5, 7});
  add({1, 2, 3, 4});
  add({2, 3, 4, 5});  // hub
  return r;
}

namespace detail {

// Unique minimal representation of (K4, C4): double star, four length-2
// paths through the central edge (oracle-certified).
inline Representation c4_k4_fixture() {
  HostTree t(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  Representation r{t, {}};
  r.paths.push_back(TreePath(t, {2, 0, 1}));
  r.paths.push_back(TreePath(t, {0, 1, 4}));
  r.paths.push_back(TreePath(t, {3, 0, 1}));
  r.paths.push_back(TreePath(t, {0, 1, 5}));
  return r;
}

// Unique minimal representation of (C4 + chord {1,3}, C4) (oracle-certified).
inline Representation c4_diamond_fixture() {
  HostTree t(5, {{3, 0}, {4, 0}, {0, 1}, {1, 2}});
  Representation r{t, {}};
  r.paths.push_back(TreePath(t, {0, 1}));
  r.paths.push_back(TreePath(t, {3, 0, 1, 2}));
  r.paths.push_back(TreePath(t, {1, 2}));
  r.paths.push_back(TreePath(t, {4, 0, 1, 2}));
  return r;
}

// 5-path representation of C5 (oracle-confirmed; smallest hole needing a
// non-tour construction).
inline Representation c5_fixture() {
  HostTree t(8, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
  Representation r{t, {}};
  r.paths.push_back(TreePath(t, {2, 3}));
  r.paths.push_back(TreePath(t, {0, 2, 3, 4, 5, 6}));
  r.paths.push_back(TreePath(t, {4, 5}));
  r.paths.push_back(TreePath(t, {3, 4, 5, 7}));
  r.paths.push_back(TreePath(t, {1, 2, 3, 4}));
  return r;
}

}  // namespace detail

// ENPT representation of C_n for any n >= 3.
inline Representation rep_of_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::MalformedInput, "cycle needs n >= 3");
  if (n == 3) return rep_of_clique(3);
  if (n == 4) return detail::c4_k4_fixture();
  if (n == 5) return detail::c5_fixture();
  return n % 2 == 0 ? rep_of_even_cycle(n) : rep_of_odd_cycle(n);
}

}  // namespace enpt
