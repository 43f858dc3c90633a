#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {

struct VerifyReport {
  bool ept_ok = false;
  bool enpt_ok = false;
  std::vector<Edge> ept_missing;   // edges of the pair absent from the rep's EPT graph
  std::vector<Edge> ept_extra;     // EPT edges the pair does not have
  std::vector<Edge> enpt_missing;  // cycle edges absent from the rep's ENPT graph
  std::vector<Edge> enpt_extra;    // ENPT edges beyond the cycle
  bool ok() const { return ept_ok && enpt_ok; }
};

// does r realize the pair: EPT graph = whole pair graph, ENPT graph = cycle
inline VerifyReport verify_representation(const Representation& r, const PairGC& p) {
  if (static_cast<int>(r.paths.size()) != p.n())
    throw Error(ErrorKind::MalformedInput, "representation has wrong number of paths for pair");
  LabeledGraph ept = build_ept(r), enpt = build_enpt(r), cyc = cycle_graph(p.n());
  VerifyReport rep;
  std::set_difference(p.g.edges.begin(), p.g.edges.end(), ept.edges.begin(), ept.edges.end(),
                      std::back_inserter(rep.ept_missing));
  std::set_difference(ept.edges.begin(), ept.edges.end(), p.g.edges.begin(), p.g.edges.end(),
                      std::back_inserter(rep.ept_extra));
  std::set_difference(cyc.edges.begin(), cyc.edges.end(), enpt.edges.begin(), enpt.edges.end(),
                      std::back_inserter(rep.enpt_missing));
  std::set_difference(enpt.edges.begin(), enpt.edges.end(), cyc.edges.begin(), cyc.edges.end(),
                      std::back_inserter(rep.enpt_extra));
  rep.ept_ok = rep.ept_missing.empty() && rep.ept_extra.empty();
  rep.enpt_ok = rep.enpt_missing.empty() && rep.enpt_extra.empty();
  return rep;
}

// Center of a pie formed by the given paths, if one exists: a tree vertex
// interior to every path such that the paths' edge-pairs at it chain into a
// single cycle through exactly |labels| incident edges.  For three paths this
// is the claw-clique condition.
inline std::optional<int> pie_center(const Representation& r, const std::vector<int>& labels) {
  for (int v = 0; v < r.tree.size(); v++) {
    std::map<int, int> use;  // neighbor of v -> how many paths turn through that edge
    bool all_interior = true;
    std::vector<std::pair<int, int>> pairs;
    for (int l : labels) {
      const auto& verts = r.paths[static_cast<size_t>(l)].verts();
      auto it = std::find(verts.begin(), verts.end(), v);
      if (it == verts.end() || it == verts.begin() || it + 1 == verts.end()) {
        all_interior = false;
        break;
      }
      int a = *(it - 1), b = *(it + 1);
      use[a]++;
      use[b]++;
      pairs.push_back(std::minmax(a, b));
    }
    if (!all_interior) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    if (use.size() != labels.size()) continue;
    bool two_each = true;
    for (auto [w, c] : use) two_each &= (c == 2);
    if (!two_each) continue;
    // pairs chain into one cycle: walk it
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : pairs) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    int start = adj.begin()->first, prev = -1, cur = start;
    size_t steps = 0;
    do {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      steps++;
    } while (cur != start && steps <= labels.size());
    if (steps == labels.size()) return v;
  }
  return std::nullopt;
}

struct P3Result {
  bool ok = true;
  std::array<int, 3> failing_triangle{-1, -1, -1};
  std::vector<std::pair<std::array<int, 3>, int>> pies;  // red triangle -> its center
};

// every all-chord (red) triangle of the pair must sit as a pie in the
// representation; callers normally verify r against p first, but the check
// itself only needs matching sizes
inline P3Result check_p3(const Representation& r, const PairGC& p) {
  P3Result res;
  int n = p.n();
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      for (int c = b + 1; c < n; c++) {
        if (!p.g.has_edge(a, b) || !p.g.has_edge(b, c) || !p.g.has_edge(a, c)) continue;
        if (p.is_cycle_edge(a, b) || p.is_cycle_edge(b, c) || p.is_cycle_edge(a, c)) continue;
        auto center = pie_center(r, {a, b, c});
        if (!center) {
          res.ok = false;
          res.failing_triangle = {a, b, c};
          return res;
        }
        res.pies.push_back({{a, b, c}, *center});
      }
  return res;
}

// all chordless cycles of length 4..max_len, canonical form: minimum vertex
// first, second vertex smaller than last
inline std::vector<std::vector<int>> find_holes(const LabeledGraph& g, int max_len = 10) {
  std::vector<std::vector<int>> holes;
  std::vector<int> path;
  std::vector<char> in_path(static_cast<size_t>(g.n), 0);
  auto dfs = [&](auto&& self, int s) -> void {
    int last = path.back();
    int len = static_cast<int>(path.size());
    if (len >= 3 && g.has_edge(last, s)) {
      if (len >= 4 && path[1] < last) holes.push_back(path);
      return;
    }
    if (len == max_len) return;
    for (int w : g.neighbors(last)) {
      if (w <= s || in_path[static_cast<size_t>(w)]) continue;
      bool chord = false;
      for (int i = 1; i + 1 < len && !chord; i++) chord = g.has_edge(w, path[static_cast<size_t>(i)]);
      if (chord) continue;
      path.push_back(w);
      in_path[static_cast<size_t>(w)] = 1;
      self(self, s);
      in_path[static_cast<size_t>(w)] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n; s++) {
    path = {s};
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[static_cast<size_t>(s)] = 1;
    dfs(dfs, s);
  }
  std::sort(holes.begin(), holes.end());
  return holes;
}

}  // namespace enpt
