#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {

// a minifying step: contract one host-tree edge (rewriting every path using
// it) or drop one terminal edge of one path
struct MinifyOp {
  enum class Kind { ContractTreeEdge, RemoveTail };
  Kind kind;
  Edge edge{};      // ContractTreeEdge
  int label = -1;   // RemoveTail
  bool front = false;

  static MinifyOp contract_tree_edge(Edge e) { return {Kind::ContractTreeEdge, e, -1, false}; }
  static MinifyOp remove_tail(int label, bool front) {
    return {Kind::RemoveTail, Edge{}, label, front};
  }
};

inline Representation apply_minify(const Representation& r, const MinifyOp& op) {
  if (op.kind == MinifyOp::Kind::RemoveTail) {
    if (op.label < 0 || op.label >= static_cast<int>(r.paths.size()))
      throw Error(ErrorKind::MalformedInput, "no such path label");
    const TreePath& p = r.paths[static_cast<size_t>(op.label)];
    if (p.edge_count() < 2)
      throw Error(ErrorKind::IllegalMinify, "removing a tail would trivialize the path");
    std::vector<int> v = p.verts();
    if (op.front)
      v.erase(v.begin());
    else
      v.pop_back();
    Representation out = r;
    out.paths[static_cast<size_t>(op.label)] = TreePath(r.tree, std::move(v));
    return out;
  }
  Edge e = make_edge(op.edge.first, op.edge.second);
  if (!r.tree.has_edge(e.first, e.second))
    throw Error(ErrorKind::MalformedInput, "edge to contract is not in the host tree");
  int lo = e.first, hi = e.second;
  auto relabel = [&](int v) { return v == hi ? lo : v > hi ? v - 1 : v; };
  // every path through the contracted edge must keep at least one edge
  std::vector<std::vector<int>> new_paths;
  for (const TreePath& p : r.paths) {
    std::vector<int> v;
    for (int x : p.verts()) {
      int y = relabel(x);
      if (v.empty() || v.back() != y) v.push_back(y);
    }
    if (v.size() < 2)
      throw Error(ErrorKind::IllegalMinify, "contraction would trivialize a path");
    new_paths.push_back(std::move(v));
  }
  std::vector<Edge> tes;
  for (const Edge& te : r.tree.edges())
    if (te != e) tes.push_back(make_edge(relabel(te.first), relabel(te.second)));
  HostTree t(r.tree.size() - 1, tes);
  Representation out{t, {}};
  for (auto& v : new_paths) out.paths.push_back(TreePath(t, std::move(v)));
  return out;
}

// same pair under the identity correspondence on labels
inline bool is_equivalent(const Representation& a, const Representation& b) {
  if (a.paths.size() != b.paths.size()) return false;
  return build_ept(a) == build_ept(b) && build_enpt(a) == build_enpt(b);
}

inline std::vector<MinifyOp> legal_minify_ops(const Representation& r) {
  std::vector<MinifyOp> ops;
  for (const Edge& e : r.tree.edges()) {
    bool legal = r.tree.size() > 2;
    for (const TreePath& p : r.paths)
      legal = legal && !(p.edge_count() == 1 && p.contains_edge(e.first, e.second));
    if (legal) ops.push_back(MinifyOp::contract_tree_edge(e));
  }
  for (int l = 0; l < static_cast<int>(r.paths.size()); l++)
    if (r.paths[static_cast<size_t>(l)].edge_count() >= 2) {
      ops.push_back(MinifyOp::remove_tail(l, true));
      ops.push_back(MinifyOp::remove_tail(l, false));
    }
  return ops;
}

// no single minifying step yields an equivalent representation; one-step
// irreducibility is checked empirically against exhaustive search at small
// sizes, since the partial order is the closure of single steps
inline bool is_minimal(const Representation& r) {
  for (const MinifyOp& op : legal_minify_ops(r))
    if (is_equivalent(r, apply_minify(r, op))) return false;
  return true;
}

// contraction of a graph edge {p,q}: q merges into p, higher labels close
// the gap
inline LabeledGraph contract_graph_edge(const LabeledGraph& g, int p, int q) {
  if (p > q) std::swap(p, q);
  if (!g.has_edge(p, q)) throw Error(ErrorKind::MalformedInput, "contracting a non-edge");
  auto relabel = [&](int v) { return v == q ? p : v > q ? v - 1 : v; };
  std::vector<Edge> es;
  for (const Edge& e : g.edges) {
    int a = relabel(e.first), b = relabel(e.second);
    if (a != b) es.push_back(make_edge(a, b));
  }
  return LabeledGraph(g.n - 1, std::move(es));
}

// replace two non-splitting paths by their union; the union takes the
// smaller label and the edge-intersection graph contracts accordingly
// (asserted inline)
inline Representation contract_representation(const Representation& r, int p, int q) {
  int m = static_cast<int>(r.paths.size());
  if (p < 0 || q < 0 || p >= m || q >= m || p == q)
    throw Error(ErrorKind::MalformedInput, "bad labels for contraction");
  if (p > q) std::swap(p, q);
  const TreePath& pp = r.paths[static_cast<size_t>(p)];
  const TreePath& pq = r.paths[static_cast<size_t>(q)];
  if (relation(r.tree, pp, pq) != Relation::NonSplitting)
    throw Error(ErrorKind::NotUnionable, "paths must be non-splitting to contract");
  TreePath u = path_union(r.tree, pp, pq);
  Representation out{r.tree, {}};
  for (int l = 0; l < m; l++) {
    if (l == q) continue;
    out.paths.push_back(l == p ? u : r.paths[static_cast<size_t>(l)]);
  }
  if (build_ept(out) != contract_graph_edge(build_ept(r), p, q))
    throw std::logic_error("union did not contract the edge-intersection graph");
  return out;
}

}  // namespace enpt
