#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "enpt/core.hpp"
#include "enpt/generators.hpp"
#include "enpt/pairs.hpp"
#include "enpt/verifier.hpp"

namespace enpt {

// Reasons a pair is refused.  A pair can violate several conditions at once;
// the reported reason is the first failing check in the fixed order
// P1 -> P2 -> outerplanarity -> face shape.
enum class Refusal { P1Violated, P2Violated, NotOuterplanar, FaceNotBBR, BadN };

inline const char* refusal_text(Refusal r) {
  switch (r) {
    case Refusal::P1Violated: return "p1-violated: some cycle edge lies in no two-blue triangle";
    case Refusal::P2Violated: return "p2-violated: contains a complete 4-set carrying a 3-edge cycle path";
    case Refusal::NotOuterplanar: return "not-outerplanar: chords cross";
    case Refusal::FaceNotBBR: return "face-not-bbr: a face touching the cycle is not a two-blue triangle";
    case Refusal::BadN: return "bad-n: cycle length below 4";
  }
  return "unknown";
}

struct SolverOutcome {
  std::optional<Representation> rep;  // engaged on YES
  std::optional<Tour> tour;           // the tour behind rep, when one exists (n > 4)
  std::optional<Refusal> refusal;     // engaged on NO
  bool yes() const { return rep.has_value(); }

  static SolverOutcome no(Refusal r) {
    SolverOutcome o;
    o.refusal = r;
    return o;
  }
  static SolverOutcome found(Representation r, std::optional<Tour> t = std::nullopt) {
    SolverOutcome o;
    o.rep = std::move(r);
    o.tour = std::move(t);
    return o;
  }
};

// Length-4 cycles: only four chord sets exist.  The chordless cycle is a
// blue hole and unrepresentable; the two chordful graphs each have a unique
// minimal representation, returned from frozen fixtures (relabeled when the
// single chord is {0,2} instead of {1,3}).
inline SolverOutcome solve_c4(const PairGC& p) {
  if (p.n() != 4) throw Error(ErrorKind::MalformedInput, "length-4 solver needs n = 4");
  std::vector<Edge> ch = p.chords();
  if (ch.empty()) return SolverOutcome::no(Refusal::FaceNotBBR);
  if (ch.size() == 2) return SolverOutcome::found(detail::c4_k4_fixture());
  Representation fix = detail::c4_diamond_fixture();
  if (ch[0] == make_edge(1, 3)) return SolverOutcome::found(fix);
  // chord {0,2}: shift every label down by one against the fixture
  Representation out{fix.tree, {}};
  for (int i = 0; i < 4; i++) out.paths.push_back(fix.paths[static_cast<size_t>((i + 1) % 4)]);
  return SolverOutcome::found(out);
}

// Tour construction for n > 4.  Screens the pair, reads the weak dual tree,
// and realizes the representation as a tour of it: one leaf per two-blue
// triangle, ordered around the cycle by triangle apex; apex vertices carry
// the length-1 leaf paths and the alternating vertices carry the leaf-to-leaf
// paths.
inline SolverOutcome build_planar_tour(const PairGC& p) {
  int n = p.n();
  if (n <= 4) throw Error(ErrorKind::MalformedInput, "tour construction needs n > 4");
  if (!contractible_edges(p).empty()) return SolverOutcome::no(Refusal::P1Violated);
  if (!is_k4p4_free(p)) return SolverOutcome::no(Refusal::P2Violated);
  if (!is_outerplanar_with_outer_cycle(p)) return SolverOutcome::no(Refusal::NotOuterplanar);
  WeakDualTree w = weak_dual_tree(p);

  // every face bordering the cycle must be a triangle with two cycle edges
  std::vector<std::pair<int, int>> apex_face;  // (apex cycle vertex, face index)
  for (size_t f = 0; f < w.faces.size(); f++) {
    const std::vector<int>& b = w.faces[f];
    int m = static_cast<int>(b.size());
    std::vector<Edge> blue;
    for (int i = 0; i < m; i++) {
      Edge e = make_edge(b[static_cast<size_t>(i)], b[static_cast<size_t>((i + 1) % m)]);
      if (p.is_cycle_edge(e.first, e.second)) blue.push_back(e);
    }
    if (blue.empty()) continue;
    if (m != 3 || blue.size() != 2) return SolverOutcome::no(Refusal::FaceNotBBR);
    int apex = (blue[0].first == blue[1].first || blue[0].first == blue[1].second)
                   ? blue[0].first
                   : blue[0].second;
    apex_face.push_back({apex, static_cast<int>(f)});
  }
  std::sort(apex_face.begin(), apex_face.end());

  int k = static_cast<int>(apex_face.size());
  if (2 * k != n) throw std::logic_error("screened pair with wrong triangle count");
  for (int j = 0; j < k; j++)
    if (apex_face[static_cast<size_t>(j)].first != apex_face[0].first + 2 * j)
      throw std::logic_error("screened pair with non-alternating apexes");

  std::vector<Edge> host_edges;
  for (auto [a, b] : w.dual_edges) host_edges.push_back(make_edge(a, b));
  HostTree host(static_cast<int>(w.faces.size()), host_edges);
  std::vector<int> leaf_order;
  for (auto [apex, f] : apex_face) leaf_order.push_back(f);
  {
    std::vector<int> want = host.leaves(), got = leaf_order;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw std::logic_error("triangle faces differ from host leaves");
  }
  auto [tour, trep] = make_tour(host, leaf_order);

  // tour label 2j is the leaf-to-leaf path v_j..v_{j+1} and belongs to the
  // cycle vertex after apex_j; tour label 2j+1 is the leaf path at v_{j+1}
  // and belongs to apex_{j+1}
  int a0 = apex_face[0].first;
  std::vector<size_t> src(static_cast<size_t>(n));
  for (int j = 0; j < k; j++) {
    src[static_cast<size_t>((a0 + 2 * j + 1) % n)] = static_cast<size_t>(2 * j);
    src[static_cast<size_t>((a0 + 2 * j + 2) % n)] = static_cast<size_t>(2 * j + 1);
  }
  Representation out{host, {}};
  for (int i = 0; i < n; i++) out.paths.push_back(trep.paths[src[static_cast<size_t>(i)]]);

  if (!verify_representation(out, p).ok() || !check_p3(out, p).ok)
    throw std::logic_error("tour output failed verification");
  return SolverOutcome::found(std::move(out), std::move(tour));
}

inline SolverOutcome solve(const PairGC& p) {
  if (p.n() < 4) return SolverOutcome::no(Refusal::BadN);
  return p.n() == 4 ? solve_c4(p) : build_planar_tour(p);
}

}  // namespace enpt
