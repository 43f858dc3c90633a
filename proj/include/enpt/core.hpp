#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enpt {

enum class ErrorKind {
  MalformedInput,
  NotUnionable,
  CycleUnion,
  DegenerateTree,
  IllegalMinify,
  NotContractible,
  ResourceLimit,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Unrooted tree on vertices 0..n-1. Immutable after construction.
class HostTree {
 public:
  HostTree() : n_(0) {}

  HostTree(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 1) throw Error(ErrorKind::MalformedInput, "tree must have at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
      throw Error(ErrorKind::MalformedInput, "tree on " + std::to_string(n) + " vertices needs " +
                                                 std::to_string(n - 1) + " edges, got " +
                                                 std::to_string(edges.size()));
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw Error(ErrorKind::MalformedInput, "tree edge endpoint out of range");
      if (a == b) throw Error(ErrorKind::MalformedInput, "tree edge is a self-loop");
      if (!seen.insert(make_edge(a, b)).second)
        throw Error(ErrorKind::MalformedInput, "duplicate tree edge");
      adj_[static_cast<size_t>(a)].push_back(b);
      adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    // n-1 edges, no duplicates: connectivity check completes the tree test.
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[static_cast<size_t>(v)])
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          cnt++;
          q.push(w);
        }
    }
    if (cnt != n) throw Error(ErrorKind::MalformedInput, "tree edges do not form a connected graph");
  }

  int size() const { return n_; }

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  bool has_edge(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
    const auto& nb = adj_[static_cast<size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; v++)
      for (int w : adj_[static_cast<size_t>(v)])
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; v++)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

  // The unique simple path between a and b, as a vertex sequence.
  std::vector<int> path_between(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw Error(ErrorKind::MalformedInput, "path endpoint out of range");
    std::vector<int> parent(static_cast<size_t>(n_), -1);
    std::queue<int> q;
    q.push(a);
    parent[static_cast<size_t>(a)] = a;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == b) break;
      for (int w : adj_[static_cast<size_t>(v)])
        if (parent[static_cast<size_t>(w)] < 0) {
          parent[static_cast<size_t>(w)] = v;
          q.push(w);
        }
    }
    std::vector<int> rev;
    for (int v = b; v != a; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
    rev.push_back(a);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

// Non-trivial path in a host tree, stored as a vertex sequence with the
// smaller endpoint first so that equal paths compare equal.
class TreePath {
 public:
  TreePath() = default;

  TreePath(const HostTree& t, std::vector<int> verts) : verts_(std::move(verts)) {
    if (verts_.size() < 2)
      throw Error(ErrorKind::MalformedInput, "path must have at least one edge");
    std::set<int> distinct(verts_.begin(), verts_.end());
    if (distinct.size() != verts_.size())
      throw Error(ErrorKind::MalformedInput, "path repeats a vertex");
    for (size_t i = 0; i + 1 < verts_.size(); i++)
      if (!t.has_edge(verts_[i], verts_[i + 1]))
        throw Error(ErrorKind::MalformedInput,
                    "consecutive path vertices " + std::to_string(verts_[i]) + "," +
                        std::to_string(verts_[i + 1]) + " are not a tree edge");
    if (verts_.front() > verts_.back()) std::reverse(verts_.begin(), verts_.end());
  }

  const std::vector<int>& verts() const { return verts_; }

  int edge_count() const { return static_cast<int>(verts_.size()) - 1; }

  bool contains_vertex(int v) const {
    return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
  }

  bool contains_edge(int a, int b) const {
    for (size_t i = 0; i + 1 < verts_.size(); i++) {
      if ((verts_[i] == a && verts_[i + 1] == b) || (verts_[i] == b && verts_[i + 1] == a))
        return true;
    }
    return false;
  }

  std::vector<Edge> edge_set() const {
    std::vector<Edge> out;
    for (size_t i = 0; i + 1 < verts_.size(); i++) out.push_back(make_edge(verts_[i], verts_[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const TreePath& o) const { return verts_ == o.verts_; }
  bool operator!=(const TreePath& o) const { return verts_ != o.verts_; }
  bool operator<(const TreePath& o) const { return verts_ < o.verts_; }

 private:
  std::vector<int> verts_;
};

// A collection of paths in one host tree; path labels are vector indices.
struct Representation {
  HostTree tree;
  std::vector<TreePath> paths;
};

// Simple undirected graph on labels 0..n-1 with a sorted edge list.
struct LabeledGraph {
  int n = 0;
  std::vector<Edge> edges;  // normalized (a < b), sorted, unique

  LabeledGraph() = default;

  LabeledGraph(int nn, std::vector<Edge> es) : n(nn) {
    if (nn < 0) throw Error(ErrorKind::MalformedInput, "graph size negative");
    for (auto& [a, b] : es) {
      if (a < 0 || a >= nn || b < 0 || b >= nn)
        throw Error(ErrorKind::MalformedInput, "graph edge endpoint out of range");
      if (a == b) throw Error(ErrorKind::MalformedInput, "graph edge is a self-loop");
    }
    for (auto& e : es) e = make_edge(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    edges = std::move(es);
  }

  bool has_edge(int a, int b) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return out;
  }

  bool operator==(const LabeledGraph& o) const { return n == o.n && edges == o.edges; }
  bool operator!=(const LabeledGraph& o) const { return !(*this == o); }
};

inline LabeledGraph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; i++) es.push_back(make_edge(i, (i + 1) % n));
  return LabeledGraph(n, std::move(es));
}

// Graph g with a distinguished Hamiltonian cycle 0-1-...-(n-1)-0.
// Cycle edges are "blue"; the remaining edges of g are "red" chords.
struct PairGC {
  LabeledGraph g;

  PairGC() = default;

  explicit PairGC(LabeledGraph gg) : g(std::move(gg)) {
    if (g.n < 3) throw Error(ErrorKind::MalformedInput, "pair needs at least 3 vertices");
    for (int i = 0; i < g.n; i++)
      if (!g.has_edge(i, (i + 1) % g.n))
        throw Error(ErrorKind::MalformedInput,
                    "graph is missing cycle edge {" + std::to_string(i) + "," +
                        std::to_string((i + 1) % g.n) + "}");
  }

  PairGC(int n, const std::vector<Edge>& chords) {
    if (n < 3) throw Error(ErrorKind::MalformedInput, "pair needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) es.push_back(make_edge(i, (i + 1) % n));
    for (auto [a, b] : chords) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw Error(ErrorKind::MalformedInput, "chord endpoint out of range");
      int d = std::abs(a - b);
      if (a == b || d == 1 || d == n - 1)
        throw Error(ErrorKind::MalformedInput, "chord {" + std::to_string(a) + "," +
                                                   std::to_string(b) + "} is not a proper chord");
      es.push_back(make_edge(a, b));
    }
    g = LabeledGraph(n, std::move(es));
  }

  int n() const { return g.n; }

  bool is_cycle_edge(int a, int b) const {
    int d = std::abs(a - b);
    return a != b && (d == 1 || d == g.n - 1);
  }

  std::vector<Edge> chords() const {
    std::vector<Edge> out;
    for (auto [a, b] : g.edges)
      if (!is_cycle_edge(a, b)) out.emplace_back(a, b);
    return out;
  }

  bool operator==(const PairGC& o) const { return g == o.g; }
};

namespace detail {

inline std::vector<Edge> edge_union(const TreePath& p, const TreePath& q) {
  auto pe = p.edge_set();
  auto qe = q.edge_set();
  std::vector<Edge> u;
  std::set_union(pe.begin(), pe.end(), qe.begin(), qe.end(), std::back_inserter(u));
  return u;
}

inline std::vector<Edge> edge_intersection(const TreePath& p, const TreePath& q) {
  auto pe = p.edge_set();
  auto qe = q.edge_set();
  std::vector<Edge> i;
  std::set_intersection(pe.begin(), pe.end(), qe.begin(), qe.end(), std::back_inserter(i));
  return i;
}

}  // namespace detail

// Vertices of degree >= 3 in the union of the two paths.
inline std::vector<int> split_vertices(const HostTree&, const TreePath& p, const TreePath& q) {
  std::map<int, int> deg;
  for (auto [a, b] : detail::edge_union(p, q)) {
    deg[a]++;
    deg[b]++;
  }
  std::vector<int> out;
  for (auto [v, d] : deg)
    if (d >= 3) out.push_back(v);
  return out;
}

enum class Relation {
  Parallel,      // no shared edge
  NonSplitting,  // shared edge, union is a path
  Splitting,     // shared edge, union has a branch vertex
};

inline Relation relation(const HostTree& t, const TreePath& p, const TreePath& q) {
  if (detail::edge_intersection(p, q).empty()) return Relation::Parallel;
  return split_vertices(t, p, q).empty() ? Relation::NonSplitting : Relation::Splitting;
}

inline bool share_vertex(const TreePath& p, const TreePath& q) {
  for (int v : p.verts())
    if (q.contains_vertex(v)) return true;
  return false;
}

// VPT: edge per vertex-intersecting pair of paths.
inline LabeledGraph build_vpt(const Representation& r) {
  int n = static_cast<int>(r.paths.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (share_vertex(r.paths[static_cast<size_t>(i)], r.paths[static_cast<size_t>(j)]))
        es.emplace_back(i, j);
  return LabeledGraph(n, std::move(es));
}

// EPT: edge per edge-intersecting pair of paths.
inline LabeledGraph build_ept(const Representation& r) {
  int n = static_cast<int>(r.paths.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (!detail::edge_intersection(r.paths[static_cast<size_t>(i)], r.paths[static_cast<size_t>(j)])
               .empty())
        es.emplace_back(i, j);
  return LabeledGraph(n, std::move(es));
}

// ENPT: edge per edge-intersecting pair whose union has no branch vertex.
inline LabeledGraph build_enpt(const Representation& r) {
  int n = static_cast<int>(r.paths.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (relation(r.tree, r.paths[static_cast<size_t>(i)], r.paths[static_cast<size_t>(j)]) ==
          Relation::NonSplitting)
        es.emplace_back(i, j);
  return LabeledGraph(n, std::move(es));
}

// Union of two non-splitting paths as a single path.
inline TreePath path_union(const HostTree& t, const TreePath& p, const TreePath& q) {
  if (relation(t, p, q) != Relation::NonSplitting)
    throw Error(ErrorKind::NotUnionable, "paths are not edge-intersecting and non-splitting");
  auto ue = detail::edge_union(p, q);
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : ue) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int start = -1;
  for (auto& [v, nb] : adj)
    if (nb.size() == 1) {
      start = v;
      break;
    }
  if (start < 0) throw Error(ErrorKind::CycleUnion, "path union is a cycle");
  std::vector<int> verts{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) {
        next = w;
        break;
      }
    if (next < 0) break;
    verts.push_back(next);
    prev = cur;
    cur = next;
  }
  if (verts.size() != ue.size() + 1)
    throw Error(ErrorKind::CycleUnion, "path union is not a single path");
  return TreePath(t, std::move(verts));
}

}  // namespace enpt
