#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {

namespace detail {

// union of the given paths is a single path <=> no vertex has degree >= 3
// and the edges form one connected piece; callers pass pairwise
// edge-intersecting families, for which connectivity is automatic
inline bool union_is_path(const Representation& r, const std::vector<int>& labels) {
  std::vector<Edge> all;
  for (int l : labels) {
    auto es = r.paths[static_cast<size_t>(l)].edge_set();
    all.insert(all.end(), es.begin(), es.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::map<int, int> deg;
  for (const Edge& e : all) {
    if (++deg[e.first] > 2 || ++deg[e.second] > 2) return false;
  }
  return true;
}

}  // namespace detail

// All maximal cliques of the edge-intersecting non-splitting graph of r.
// Every clique lives inside some edge subcollection restricted to a
// leaf-to-leaf path of the subtree spanned by that subcollection, so the
// candidate pool (counted in *candidate_count when given) is cubic in the
// host tree size.  Returned sets are sorted; the list is sorted and
// inclusion-maximal.
inline std::vector<std::vector<int>> enumerate_maximal_cliques(const Representation& r,
                                                               std::int64_t* candidate_count = nullptr) {
  if (candidate_count) *candidate_count = 0;
  std::vector<std::vector<int>> candidates;
  int m = static_cast<int>(r.paths.size());
  for (const Edge& e : r.tree.edges()) {
    std::vector<int> through;
    for (int l = 0; l < m; l++)
      if (r.paths[static_cast<size_t>(l)].contains_edge(e.first, e.second)) through.push_back(l);
    if (through.empty()) continue;
    // subtree spanned by the paths through e: degree census of its edges
    std::vector<Edge> sub;
    for (int l : through) {
      auto es = r.paths[static_cast<size_t>(l)].edge_set();
      sub.insert(sub.end(), es.begin(), es.end());
    }
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    std::map<int, int> deg;
    for (const Edge& se : sub) {
      deg[se.first]++;
      deg[se.second]++;
    }
    std::vector<int> leaves;
    for (auto [v, d] : deg)
      if (d == 1) leaves.push_back(v);
    for (size_t i = 0; i < leaves.size(); i++) {
      for (size_t j = i + 1; j < leaves.size(); j++) {
        if (candidate_count) ++*candidate_count;
        TreePath corridor(r.tree, r.tree.path_between(leaves[i], leaves[j]));
        std::vector<int> members;
        for (int l : through) {
          const TreePath& p = r.paths[static_cast<size_t>(l)];
          bool inside = true;
          for (const Edge& pe : p.edge_set())
            if (!corridor.contains_edge(pe.first, pe.second)) {
              inside = false;
              break;
            }
          if (inside) members.push_back(l);
        }
        if (!members.empty()) candidates.push_back(std::move(members));
      }
    }
  }
  for (int l = 0; l < m; l++) candidates.push_back({l});  // isolated-vertex cliques
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < candidates.size(); i++) {
    bool maximal = true;
    for (size_t j = 0; j < candidates.size() && maximal; j++) {
      if (i == j || candidates[j].size() <= candidates[i].size()) continue;
      maximal = !std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(),
                               candidates[i].end());
    }
    if (maximal) out.push_back(candidates[i]);
  }
  for (const auto& c : out)
    if (!detail::union_is_path(r, c))
      throw std::logic_error("clique enumeration produced a set whose path union is not a path");
  return out;
}

// largest maximal clique; ties broken toward the lexicographically
// smallest label set, so the result is deterministic
inline std::vector<int> max_clique(const Representation& r) {
  std::vector<int> best;
  for (auto& c : enumerate_maximal_cliques(r))
    if (c.size() > best.size()) best = std::move(c);
  return best;
}

}  // namespace enpt
