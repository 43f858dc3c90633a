#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {

// triangles of a pair, named by their count of cycle ("blue") edges:
// Red = 0, BRR = 1, BBR = 2, Blue = 3
enum class TriangleKind { Red, BRR, BBR, Blue };

inline TriangleKind classify_triangle(const PairGC& p, std::array<int, 3> tri) {
  auto [a, b, c] = tri;
  if (a == b || b == c || a == c || !p.g.has_edge(a, b) || !p.g.has_edge(b, c) ||
      !p.g.has_edge(a, c))
    throw Error(ErrorKind::MalformedInput, "vertices do not induce a triangle");
  int blue = p.is_cycle_edge(a, b) + p.is_cycle_edge(b, c) + p.is_cycle_edge(a, c);
  switch (blue) {
    case 0: return TriangleKind::Red;
    case 1: return TriangleKind::BRR;
    case 2: return TriangleKind::BBR;
    default: return TriangleKind::Blue;
  }
}

// Cycle edges whose contraction keeps the pair well formed: {i,i+1} is
// contractible when neither {i-1,i+1} nor {i,i+2} is a chord.  Equivalently
// (and cross-checked here) the edge lies in no BBR triangle.
inline std::vector<Edge> contractible_edges(const PairGC& p) {
  int n = p.n();
  std::vector<Edge> out;
  for (int i = 0; i < n; i++) {
    int j = (i + 1) % n;
    Edge left = make_edge((i + n - 1) % n, j);
    Edge right = make_edge(i, (j + 1) % n);
    bool by_flip = !(p.g.has_edge(left.first, left.second) && !p.is_cycle_edge(left.first, left.second)) &&
                   !(p.g.has_edge(right.first, right.second) && !p.is_cycle_edge(right.first, right.second));
    bool in_bbr = false;
    for (int x = 0; x < n && !in_bbr; x++) {
      if (x == i || x == j || !p.g.has_edge(x, i) || !p.g.has_edge(x, j)) continue;
      in_bbr = classify_triangle(p, {i, j, x}) == TriangleKind::BBR;
    }
    if (by_flip != !in_bbr)
      throw std::logic_error("contractibility characterizations disagree");
    if (by_flip) out.push_back(make_edge(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// no 4-subset may induce a complete graph while the cycle induces a
// 3-edge path on it
inline bool is_k4p4_free(const PairGC& p) {
  int n = p.n();
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      for (int c = b + 1; c < n; c++)
        for (int d = c + 1; d < n; d++) {
          std::array<int, 4> s{a, b, c, d};
          bool k4 = true;
          for (int i = 0; i < 4 && k4; i++)
            for (int j = i + 1; j < 4 && k4; j++) k4 = p.g.has_edge(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]);
          if (!k4) continue;
          std::array<int, 4> deg{};
          int cyc = 0;
          for (int i = 0; i < 4; i++)
            for (int j = i + 1; j < 4; j++)
              if (p.is_cycle_edge(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)])) {
                cyc++;
                deg[static_cast<size_t>(i)]++;
                deg[static_cast<size_t>(j)]++;
              }
          if (cyc == 3 && *std::max_element(deg.begin(), deg.end()) == 2) return false;
        }
  return true;
}

namespace detail {

// chords with four distinct endpoints cross iff exactly one endpoint of f
// lies strictly inside the arc e.first..e.second; sharing an endpoint never
// crosses
inline bool chords_cross(int n, Edge e, Edge f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
    return false;
  auto inside = [&](int lo, int hi, int x) {
    // strictly between lo and hi walking forward around the cycle
    int span = (hi - lo + n) % n;
    int off = (x - lo + n) % n;
    return 0 < off && off < span;
  };
  return inside(e.first, e.second, f.first) != inside(e.first, e.second, f.second);
}

}  // namespace detail

inline bool is_outerplanar_with_outer_cycle(const PairGC& p) {
  auto ch = p.chords();
  for (size_t i = 0; i < ch.size(); i++)
    for (size_t j = i + 1; j < ch.size(); j++)
      if (detail::chords_cross(p.n(), ch[i], ch[j])) return false;
  return true;
}

// greedy: keep the cycle, then add chords in lexicographic order unless
// they cross one already kept
inline LabeledGraph maximal_outerplanar_subgraph(const PairGC& p) {
  std::vector<Edge> kept;
  for (const Edge& c : p.chords()) {
    bool ok = true;
    for (const Edge& k : kept)
      if (detail::chords_cross(p.n(), k, c)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(c);
  }
  std::vector<Edge> es = kept;
  for (int i = 0; i < p.n(); i++) es.push_back(make_edge(i, (i + 1) % p.n()));
  return LabeledGraph(p.n(), std::move(es));
}

enum class FaceKind { Leaf, Intermediate, Junction, Isolated };

// Dual of the bounded faces of the maximal outerplanar subgraph: one vertex
// per face, one edge per kept chord.  A chordless pair has a single
// Isolated face (the whole cycle interior).
struct WeakDualTree {
  int n = 0;                                   // cycle length of the source pair
  std::vector<std::vector<int>> faces;         // boundary cycles, canonical order
  std::vector<FaceKind> kinds;                 // by dual degree 1 / 2 / >=3 / 0
  std::vector<std::pair<int, int>> dual_edges; // face-index pairs, first < second
  std::vector<Edge> chord_of;                  // chord shared by dual_edges[k]

  int degree(int face) const {
    int d = 0;
    for (auto [a, b] : dual_edges) d += (a == face) + (b == face);
    return d;
  }
  int leaf_count() const { return count(FaceKind::Leaf); }
  int intermediate_count() const { return count(FaceKind::Intermediate); }
  int junction_count() const { return count(FaceKind::Junction); }
  // n = 2*leaves + intermediates; guaranteed only once every bounded face is
  // a triangle or an all-chord hole, so screened pairs assert it and raw
  // pairs merely report it
  bool satisfies_size_identity() const { return n == 2 * leaf_count() + intermediate_count(); }

 private:
  int count(FaceKind k) const {
    int c = 0;
    for (FaceKind f : kinds) c += (f == k);
    return c;
  }
};

namespace detail {

inline std::vector<int> canonical_cycle(std::vector<int> b) {
  auto m = std::min_element(b.begin(), b.end());
  std::rotate(b.begin(), m, b.end());
  if (b.size() > 2 && b[b.size() - 1] < b[1]) {
    std::reverse(b.begin() + 1, b.end());
  }
  return b;
}

}  // namespace detail

inline WeakDualTree weak_dual_tree(const PairGC& p) {
  int n = p.n();
  LabeledGraph o = maximal_outerplanar_subgraph(p);
  std::vector<Edge> chords;
  for (const Edge& e : o.edges)
    if (!p.is_cycle_edge(e.first, e.second)) chords.push_back(e);

  // split the polygon along chords; chords never cross, so each one cuts a
  // region into two smaller regions
  std::vector<std::vector<int>> faces;
  std::vector<std::pair<std::vector<int>, std::vector<Edge>>> stack;
  std::vector<int> whole(static_cast<size_t>(n));
  std::iota(whole.begin(), whole.end(), 0);
  stack.push_back({std::move(whole), chords});
  while (!stack.empty()) {
    auto [b, ch] = std::move(stack.back());
    stack.pop_back();
    if (ch.empty()) {
      faces.push_back(detail::canonical_cycle(std::move(b)));
      continue;
    }
    std::map<int, size_t> pos;
    for (size_t i = 0; i < b.size(); i++) pos[b[i]] = i;
    Edge cut = ch.back();
    ch.pop_back();
    size_t i = pos[cut.first], j = pos[cut.second];
    if (i > j) std::swap(i, j);
    std::vector<int> left(b.begin() + static_cast<long>(i), b.begin() + static_cast<long>(j) + 1);
    std::vector<int> right(b.begin() + static_cast<long>(j), b.end());
    right.insert(right.end(), b.begin(), b.begin() + static_cast<long>(i) + 1);
    std::vector<Edge> lch, rch;
    for (const Edge& c : ch) {
      size_t u = pos[c.first], v = pos[c.second];
      if (u > v) std::swap(u, v);
      if (i <= u && v <= j)
        lch.push_back(c);
      else
        rch.push_back(c);
    }
    stack.push_back({std::move(left), std::move(lch)});
    stack.push_back({std::move(right), std::move(rch)});
  }
  std::sort(faces.begin(), faces.end());

  WeakDualTree w;
  w.n = n;
  w.faces = std::move(faces);
  // a chord borders exactly the two faces whose boundary walks it
  auto on_face = [&](const std::vector<int>& f, const Edge& c) {
    for (size_t i = 0; i < f.size(); i++)
      if (make_edge(f[i], f[(i + 1) % f.size()]) == c) return true;
    return false;
  };
  for (const Edge& c : chords) {
    std::vector<int> touching;
    for (size_t f = 0; f < w.faces.size(); f++)
      if (on_face(w.faces[f], c)) touching.push_back(static_cast<int>(f));
    if (touching.size() != 2) throw std::logic_error("chord does not border exactly two faces");
    w.dual_edges.push_back({touching[0], touching[1]});
    w.chord_of.push_back(c);
  }
  for (size_t f = 0; f < w.faces.size(); f++) {
    int d = w.degree(static_cast<int>(f));
    w.kinds.push_back(d == 0   ? FaceKind::Isolated
                      : d == 1 ? FaceKind::Leaf
                      : d == 2 ? FaceKind::Intermediate
                               : FaceKind::Junction);
  }
  // dual must be a tree over the faces
  if (w.dual_edges.size() + 1 != w.faces.size())
    throw std::logic_error("weak dual is not a tree");
  return w;
}

// remove a degree-2 face and join its two neighbors; the joined dual edge
// keeps the lexicographically smaller of the two chords
inline WeakDualTree smooth_intermediate(const WeakDualTree& w, int face) {
  if (face < 0 || face >= static_cast<int>(w.faces.size()) || w.degree(face) != 2)
    throw Error(ErrorKind::MalformedInput, "face to smooth must have dual degree 2");
  int na = -1, nb = -1;
  Edge ca{}, cb{};
  for (size_t k = 0; k < w.dual_edges.size(); k++) {
    auto [a, b] = w.dual_edges[k];
    if (a != face && b != face) continue;
    int other = a == face ? b : a;
    if (na < 0) {
      na = other;
      ca = w.chord_of[k];
    } else {
      nb = other;
      cb = w.chord_of[k];
    }
  }
  WeakDualTree out;
  out.n = w.n;
  auto reindex = [&](int f) { return f > face ? f - 1 : f; };
  for (size_t f = 0; f < w.faces.size(); f++)
    if (static_cast<int>(f) != face) {
      out.faces.push_back(w.faces[f]);
      out.kinds.push_back(w.kinds[f]);
    }
  for (size_t k = 0; k < w.dual_edges.size(); k++) {
    auto [a, b] = w.dual_edges[k];
    if (a == face || b == face) continue;
    out.dual_edges.push_back({reindex(a), reindex(b)});
    out.chord_of.push_back(w.chord_of[k]);
  }
  int ja = reindex(na), jb = reindex(nb);
  out.dual_edges.push_back({std::min(ja, jb), std::max(ja, jb)});
  out.chord_of.push_back(std::min(ca, cb));
  std::vector<size_t> order(out.dual_edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return out.chord_of[x] < out.chord_of[y]; });
  WeakDualTree sorted = out;
  for (size_t k = 0; k < order.size(); k++) {
    sorted.dual_edges[k] = out.dual_edges[order[k]];
    sorted.chord_of[k] = out.chord_of[order[k]];
  }
  return sorted;
}

// contract a contractible cycle edge; the surviving labels are packed so the
// result is again a pair on n-1 vertices with vertex order preserved
inline PairGC contract_pair(const PairGC& p, Edge e) {
  int n = p.n();
  e = make_edge(e.first, e.second);
  if (!p.is_cycle_edge(e.first, e.second))
    throw Error(ErrorKind::MalformedInput, "can only contract a cycle edge");
  if (n == 3) throw Error(ErrorKind::MalformedInput, "cannot contract a triangle pair");
  auto ce = contractible_edges(p);
  if (!std::binary_search(ce.begin(), ce.end(), e))
    throw Error(ErrorKind::NotContractible, "edge is in a BBR triangle");
  // {i,i+1}: i+1 merges into i and higher labels close the gap; the wrap
  // edge {0,n-1} merges 0 into n-1, shifting every label down by one
  auto relabel = [&](int v) {
    if (e == make_edge(0, n - 1)) return v == 0 ? n - 2 : v - 1;
    return v <= e.first ? v : v - 1;
  };
  std::vector<Edge> chords;
  for (const Edge& c : p.chords()) chords.push_back(make_edge(relabel(c.first), relabel(c.second)));
  return PairGC(n - 1, chords);
}

}  // namespace enpt
