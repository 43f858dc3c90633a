#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enpt/core.hpp"
#include "enpt/minimal.hpp"
#include "enpt/verifier.hpp"

namespace enpt {

namespace detail {

inline std::vector<std::vector<int>> tree_adj(const HostTree& t) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(t.size()));
  for (int v = 0; v < t.size(); v++) adj[static_cast<size_t>(v)] = t.neighbors(v);
  return adj;
}

inline std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> size(static_cast<size_t>(n), 1), best;
  int best_score = n + 1;
  std::function<void(int, int)> sizes = [&](int v, int par) {
    for (int w : adj[static_cast<size_t>(v)])
      if (w != par) {
        sizes(w, v);
        size[static_cast<size_t>(v)] += size[static_cast<size_t>(w)];
      }
  };
  sizes(0, -1);
  std::function<void(int, int)> walk = [&](int v, int par) {
    int score = n - size[static_cast<size_t>(v)];
    for (int w : adj[static_cast<size_t>(v)])
      if (w != par) score = std::max(score, size[static_cast<size_t>(w)]);
    if (score < best_score) {
      best_score = score;
      best = {v};
    } else if (score == best_score) {
      best.push_back(v);
    }
    for (int w : adj[static_cast<size_t>(v)])
      if (w != par) walk(w, v);
  };
  walk(0, -1);
  std::sort(best.begin(), best.end());
  return best;
}

inline std::string ahu_string(const std::vector<std::vector<int>>& adj, int v, int par) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<size_t>(v)])
    if (w != par) kids.push_back(ahu_string(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// rebuild the canonical labeled instance from a canonical string: labels are
// assigned in preorder, children in string order
inline HostTree decode_tree(const std::string& s) {
  std::vector<Edge> es;
  int next = 0;
  std::vector<int> stack;
  for (char c : s) {
    if (c == '(') {
      if (!stack.empty()) es.push_back(make_edge(stack.back(), next));
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return HostTree(next, es);
}

// canonical string of the tree plus one isomorphism onto decode_tree(string)
inline std::pair<std::string, std::vector<int>> tree_canonical(const HostTree& t) {
  auto adj = tree_adj(t);
  std::string best;
  int best_root = -1;
  for (int c : tree_centroids(adj)) {
    std::string s = ahu_string(adj, c, -1);
    if (best.empty() || s < best) {
      best = s;
      best_root = c;
    }
  }
  // preorder of the sorted rooted tree matches decode_tree's labeling
  std::vector<int> map(static_cast<size_t>(t.size()), -1);
  int next = 0;
  std::function<void(int, int)> assign = [&](int v, int par) {
    map[static_cast<size_t>(v)] = next++;
    std::vector<std::pair<std::string, int>> kids;
    for (int w : adj[static_cast<size_t>(v)])
      if (w != par) kids.push_back({ahu_string(adj, w, v), w});
    std::sort(kids.begin(), kids.end());
    for (auto& [s, w] : kids) assign(w, v);
  };
  assign(best_root, -1);
  return {best, map};
}

}  // namespace detail

// all trees on 2..max_vertices vertices, one canonically labeled instance
// per isomorphism class, ordered by size then canonical form
inline std::vector<HostTree> enumerate_trees(int max_vertices) {
  if (max_vertices > 10)
    throw Error(ErrorKind::ResourceLimit, "tree enumeration capped at 10 vertices");
  std::vector<HostTree> out;
  std::vector<HostTree> prev{HostTree(2, {{0, 1}})};
  if (max_vertices >= 2) out.push_back(prev[0]);
  for (int n = 3; n <= max_vertices; n++) {
    std::set<std::string> seen;
    std::vector<HostTree> cur;
    for (const HostTree& t : prev) {
      for (int v = 0; v < t.size(); v++) {
        std::vector<Edge> es = t.edges();
        es.push_back(make_edge(v, n - 1));
        HostTree grown(n, es);
        auto [s, map] = detail::tree_canonical(grown);
        if (seen.insert(s).second) cur.push_back(detail::decode_tree(s));
      }
    }
    std::sort(cur.begin(), cur.end(),
              [](const HostTree& a, const HostTree& b) { return a.edges() < b.edges(); });
    out.insert(out.end(), cur.begin(), cur.end());
    prev = std::move(cur);
  }
  return out;
}

// all adjacency-preserving permutations; vertices are matched along a BFS
// order so each step only tries neighbors of already-fixed images
inline std::vector<std::vector<int>> tree_automorphisms(const HostTree& t) {
  int n = t.size();
  std::vector<int> order{0};
  std::vector<int> parent(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < order.size(); i++)
    for (int w : t.neighbors(order[i]))
      if (w != parent[static_cast<size_t>(order[i])]) {
        parent[static_cast<size_t>(w)] = order[i];
        order.push_back(w);
      }
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == order.size()) {
      out.push_back(img);
      return;
    }
    int v = order[i];
    int par = parent[static_cast<size_t>(v)];
    for (int c = 0; c < n; c++) {
      if (used[static_cast<size_t>(c)] || t.degree(c) != t.degree(v)) continue;
      if (par >= 0 && !t.has_edge(img[static_cast<size_t>(par)], c)) continue;
      img[static_cast<size_t>(v)] = c;
      used[static_cast<size_t>(c)] = 1;
      go(i + 1);
      used[static_cast<size_t>(c)] = 0;
    }
    img[static_cast<size_t>(v)] = -1;
  };
  go(0);
  return out;
}

namespace detail {

// a path in a tree is its endpoint pair; a representation is its per-label
// endpoint list
inline std::vector<Edge> endpoint_encoding(const Representation& r) {
  std::vector<Edge> enc;
  for (const TreePath& p : r.paths) enc.push_back(make_edge(p.verts().front(), p.verts().back()));
  return enc;
}

inline std::vector<Edge> min_over_automorphisms(const std::vector<Edge>& enc,
                                                const std::vector<std::vector<int>>& auts) {
  std::vector<Edge> best = enc;
  std::vector<Edge> cur(enc.size());
  for (const auto& a : auts) {
    for (size_t i = 0; i < enc.size(); i++)
      cur[i] = make_edge(a[static_cast<size_t>(enc[i].first)], a[static_cast<size_t>(enc[i].second)]);
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace detail

// canonical identity of a representation: host tree canonical form plus the
// lexicographically least endpoint encoding over that tree's automorphisms
inline std::pair<std::string, std::vector<Edge>> canonical_rep_key(const Representation& r) {
  auto [s, map] = detail::tree_canonical(r.tree);
  HostTree canon = detail::decode_tree(s);
  std::vector<Edge> enc;
  for (const TreePath& p : r.paths)
    enc.push_back(make_edge(map[static_cast<size_t>(p.verts().front())],
                            map[static_cast<size_t>(p.verts().back())]));
  return {s, detail::min_over_automorphisms(enc, tree_automorphisms(canon))};
}

// label permutations preserving both the graph and its distinguished cycle
inline std::vector<std::vector<int>> pair_label_symmetries(const PairGC& p) {
  int n = p.n();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) perm[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; a++)
      for (int b = a + 1; b < n && ok; b++) {
        int ia = perm[static_cast<size_t>(a)], ib = perm[static_cast<size_t>(b)];
        ok = p.g.has_edge(a, b) == p.g.has_edge(ia, ib) &&
             p.is_cycle_edge(a, b) == p.is_cycle_edge(ia, ib);
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// canonical identity up to the pair's own label symmetries as well: two
// representations that differ only by a symmetry of (G, C) share this key
inline std::pair<std::string, std::vector<Edge>> canonical_rep_key(const Representation& r,
                                                                   const PairGC& p) {
  std::pair<std::string, std::vector<Edge>> best;
  bool first = true;
  for (const auto& sym : pair_label_symmetries(p)) {
    Representation relabeled{r.tree, {}};
    relabeled.paths.reserve(r.paths.size());
    std::vector<size_t> src(r.paths.size());
    for (size_t i = 0; i < r.paths.size(); i++) src[static_cast<size_t>(sym[i])] = i;
    for (size_t i = 0; i < r.paths.size(); i++) relabeled.paths.push_back(r.paths[src[i]]);
    auto key = canonical_rep_key(relabeled);
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  return best;
}

struct OracleOptions {
  bool require_p3 = false;     // keep only representations whose red triangles are pies
  bool stop_after_first = false;  // return as soon as one representation survives the filters
  bool allow_large_n = false;  // lift the n <= 6 guard (callers accept the cost)
};

// exhaustive: every representation of the pair on host trees up to the given
// size, one per tree-isomorphism class commuting with labels
inline std::vector<Representation> enumerate_representations_of_pair(const PairGC& p,
                                                                     int max_tree_vertices,
                                                                     OracleOptions opt = {}) {
  if (p.n() > 6 && !opt.allow_large_n)
    throw Error(ErrorKind::ResourceLimit, "pair enumeration capped at 6 vertices");
  if (max_tree_vertices > 8)
    throw Error(ErrorKind::ResourceLimit, "pair enumeration capped at 8-vertex host trees");
  int n = p.n();
  // required relation for every label pair
  std::vector<std::vector<Relation>> req(static_cast<size_t>(n),
                                         std::vector<Relation>(static_cast<size_t>(n)));
  for (int j = 0; j < n; j++)
    for (int k = 0; k < n; k++) {
      if (j == k) continue;
      req[static_cast<size_t>(j)][static_cast<size_t>(k)] =
          p.is_cycle_edge(j, k)    ? Relation::NonSplitting
          : p.g.has_edge(j, k)     ? Relation::Splitting
                                   : Relation::Parallel;
    }
  std::vector<Representation> out;
  for (const HostTree& t : enumerate_trees(max_tree_vertices)) {
    std::vector<TreePath> cand;
    for (int u = 0; u < t.size(); u++)
      for (int v = u + 1; v < t.size(); v++) cand.push_back(TreePath(t, t.path_between(u, v)));
    size_t m = cand.size();
    std::vector<std::vector<Relation>> rel(m, std::vector<Relation>(m));
    for (size_t a = 0; a < m; a++)
      for (size_t b = a; b < m; b++) rel[a][b] = rel[b][a] = relation(t, cand[a], cand[b]);
    auto auts = tree_automorphisms(t);
    std::map<std::vector<Edge>, Representation> found;
    std::vector<size_t> choice(static_cast<size_t>(n));
    std::function<bool(int)> dfs = [&](int j) -> bool {
      if (j == n) {
        Representation r{t, {}};
        for (size_t c : choice) r.paths.push_back(cand[c]);
        if (opt.require_p3 && !check_p3(r, p).ok) return false;
        auto key = detail::min_over_automorphisms(detail::endpoint_encoding(r), auts);
        found.emplace(std::move(key), std::move(r));
        return opt.stop_after_first;
      }
      for (size_t c = 0; c < m; c++) {
        bool ok = true;
        for (int k = 0; k < j && ok; k++)
          ok = rel[c][choice[static_cast<size_t>(k)]] ==
               req[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (!ok) continue;
        choice[static_cast<size_t>(j)] = c;
        if (dfs(j + 1)) return true;
      }
      return false;
    };
    bool stop = dfs(0);
    for (auto& [key, r] : found) out.push_back(std::move(r));
    if (stop) break;
  }
  return out;
}

// first representation whose non-splitting edge-intersection graph equals the
// target, scanning host trees small to large
inline std::optional<Representation> search_enpt_representation(const LabeledGraph& target,
                                                                int max_tree_vertices) {
  if (target.n > 6) throw Error(ErrorKind::ResourceLimit, "search capped at 6 vertices");
  if (max_tree_vertices > 8)
    throw Error(ErrorKind::ResourceLimit, "search capped at 8-vertex host trees");
  int n = target.n;
  for (const HostTree& t : enumerate_trees(max_tree_vertices)) {
    std::vector<TreePath> cand;
    for (int u = 0; u < t.size(); u++)
      for (int v = u + 1; v < t.size(); v++) cand.push_back(TreePath(t, t.path_between(u, v)));
    size_t m = cand.size();
    std::vector<std::vector<Relation>> rel(m, std::vector<Relation>(m));
    for (size_t a = 0; a < m; a++)
      for (size_t b = a; b < m; b++) rel[a][b] = rel[b][a] = relation(t, cand[a], cand[b]);
    std::vector<size_t> choice(static_cast<size_t>(n));
    std::function<bool(int)> dfs = [&](int j) -> bool {
      if (j == n) return true;
      for (size_t c = 0; c < m; c++) {
        bool ok = true;
        for (int k = 0; k < j && ok; k++) {
          bool want = target.has_edge(j, k);
          ok = want == (rel[c][choice[static_cast<size_t>(k)]] == Relation::NonSplitting);
        }
        if (!ok) continue;
        choice[static_cast<size_t>(j)] = c;
        if (dfs(j + 1)) return true;
      }
      return false;
    };
    if (dfs(0)) {
      Representation r{t, {}};
      for (size_t c : choice) r.paths.push_back(cand[c]);
      return r;
    }
  }
  return std::nullopt;
}

// ground-truth minimality: breadth-first closure over all minifying
// sequences; true iff no strictly smaller equivalent representation is
// reachable
inline bool no_smaller_equivalent(const Representation& r, std::int64_t max_states = 2000000) {
  LabeledGraph ept0 = build_ept(r), enpt0 = build_enpt(r);
  auto key = [](const Representation& s) {
    std::string k;
    for (const Edge& e : s.tree.edges())
      k += std::to_string(e.first) + "," + std::to_string(e.second) + ";";
    for (const TreePath& p : s.paths) {
      for (int v : p.verts()) k += std::to_string(v) + ",";
      k += "|";
    }
    return k;
  };
  std::set<std::string> visited{key(r)};
  std::deque<Representation> work{r};
  while (!work.empty()) {
    Representation s = std::move(work.front());
    work.pop_front();
    for (const MinifyOp& op : legal_minify_ops(s)) {
      Representation nxt = apply_minify(s, op);
      if (!visited.insert(key(nxt)).second) continue;
      if (static_cast<std::int64_t>(visited.size()) > max_states)
        throw Error(ErrorKind::ResourceLimit, "minify closure exceeded state budget");
      if (build_ept(nxt) == ept0 && build_enpt(nxt) == enpt0) return false;
      work.push_back(nxt);
    }
  }
  return true;
}

}  // namespace enpt
