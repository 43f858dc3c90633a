#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "enpt/core.hpp"

namespace enpt {
namespace io {

namespace detail {

[[noreturn]] inline void syntax_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] inline void semantic_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line) + ": " + msg);
}

// line-oriented tokenizer; skips blank lines, tracks line numbers
struct LineReader {
  std::istream& is;
  int lineno = 0;

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is, line)) {
      lineno++;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

inline int parse_int(const LineReader& r, const std::string& tok, const char* what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    syntax_fail(r.lineno, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    syntax_fail(r.lineno, std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

inline int vertex_in_range(const LineReader& r, const std::string& tok, int n, const char* what) {
  int v = parse_int(r, tok, what);
  if (v < 0 || v >= n)
    semantic_fail(r.lineno, std::string(what) + " " + tok + " out of range 0.." + std::to_string(n - 1));
  return v;
}

}  // namespace detail

// `pair <n>` then `chord <u> <v>` lines; cycle edges are implicit
inline PairGC parse_pair(std::istream& is) {
  detail::LineReader r{is};
  std::vector<std::string> t;
  if (!r.next(t)) detail::syntax_fail(1, "empty input, expected 'pair <n>'");
  if (t[0] != "pair" || t.size() != 2)
    detail::syntax_fail(r.lineno, "expected 'pair <n>'");
  int n = detail::parse_int(r, t[1], "cycle length");
  if (n < 3) detail::semantic_fail(r.lineno, "cycle length must be at least 3");
  PairGC probe(n, {});
  std::vector<Edge> chords;
  while (r.next(t)) {
    if (t[0] != "chord" || t.size() != 3)
      detail::syntax_fail(r.lineno, "expected 'chord <u> <v>'");
    int u = detail::vertex_in_range(r, t[1], n, "chord endpoint");
    int v = detail::vertex_in_range(r, t[2], n, "chord endpoint");
    if (u == v) detail::semantic_fail(r.lineno, "chord endpoints coincide");
    if (probe.is_cycle_edge(u, v))
      detail::semantic_fail(r.lineno, "chord duplicates a cycle edge");
    chords.push_back(make_edge(u, v));
  }
  return PairGC(n, chords);
}

// `tree <t>`, `tedge <a> <b>` lines, then `path <label>: <v0> ... <vk>` lines
inline Representation parse_representation(std::istream& is) {
  detail::LineReader r{is};
  std::vector<std::string> t;
  if (!r.next(t)) detail::syntax_fail(1, "empty input, expected 'tree <t>'");
  if (t[0] != "tree" || t.size() != 2) detail::syntax_fail(r.lineno, "expected 'tree <t>'");
  int n = detail::parse_int(r, t[1], "tree size");
  if (n < 2) detail::semantic_fail(r.lineno, "host tree needs at least 2 vertices");

  std::vector<Edge> edges;
  std::vector<TreePath> paths;
  std::optional<HostTree> tree;
  auto build_tree = [&]() {
    if (tree.has_value()) return;
    try {
      tree.emplace(n, edges);
    } catch (const Error& e) {
      detail::semantic_fail(r.lineno, std::string("host edges do not form a tree (") + e.what() + ")");
    }
  };

  while (r.next(t)) {
    if (t[0] == "tedge") {
      if (tree.has_value())
        detail::syntax_fail(r.lineno, "'tedge' lines must precede 'path' lines");
      if (t.size() != 3) detail::syntax_fail(r.lineno, "expected 'tedge <a> <b>'");
      int a = detail::vertex_in_range(r, t[1], n, "tree vertex");
      int b = detail::vertex_in_range(r, t[2], n, "tree vertex");
      if (a == b) detail::semantic_fail(r.lineno, "tree edge endpoints coincide");
      edges.push_back(make_edge(a, b));
    } else if (t[0] == "path") {
      if (t.size() < 4) detail::syntax_fail(r.lineno, "expected 'path <label>: <v0> <v1> ...'");
      std::string lab = t[1];
      if (lab.empty() || lab.back() != ':')
        detail::syntax_fail(r.lineno, "expected ':' after the path label");
      lab.pop_back();
      int label = detail::parse_int(r, lab, "path label");
      if (label != static_cast<int>(paths.size()))
        detail::semantic_fail(r.lineno, "path labels must be dense from 0; expected " +
                                            std::to_string(paths.size()));
      build_tree();
      std::vector<int> verts;
      for (size_t i = 2; i < t.size(); i++)
        verts.push_back(detail::vertex_in_range(r, t[i], n, "path vertex"));
      try {
        paths.push_back(TreePath(*tree, verts));
      } catch (const Error& e) {
        detail::semantic_fail(r.lineno, std::string("invalid path (") + e.what() + ")");
      }
    } else {
      detail::syntax_fail(r.lineno, "expected 'tedge' or 'path', got '" + t[0] + "'");
    }
  }
  build_tree();
  return Representation{*tree, paths};
}

// `graph <n>` then `edge <u> <v>` lines
inline LabeledGraph parse_graph(std::istream& is) {
  detail::LineReader r{is};
  std::vector<std::string> t;
  if (!r.next(t)) detail::syntax_fail(1, "empty input, expected 'graph <n>'");
  if (t[0] != "graph" || t.size() != 2) detail::syntax_fail(r.lineno, "expected 'graph <n>'");
  int n = detail::parse_int(r, t[1], "vertex count");
  if (n < 1) detail::semantic_fail(r.lineno, "graph needs at least 1 vertex");
  std::vector<Edge> edges;
  while (r.next(t)) {
    if (t[0] != "edge" || t.size() != 3) detail::syntax_fail(r.lineno, "expected 'edge <u> <v>'");
    int u = detail::vertex_in_range(r, t[1], n, "edge endpoint");
    int v = detail::vertex_in_range(r, t[2], n, "edge endpoint");
    if (u == v) detail::semantic_fail(r.lineno, "edge endpoints coincide");
    edges.push_back(make_edge(u, v));
  }
  return LabeledGraph(n, edges);
}

inline std::string emit_pair(const PairGC& p) {
  std::ostringstream os;
  os << "pair " << p.n() << "\n";
  for (const Edge& c : p.chords()) os << "chord " << c.first << " " << c.second << "\n";
  return os.str();
}

inline std::string emit_representation(const Representation& r) {
  std::ostringstream os;
  os << "tree " << r.tree.size() << "\n";
  std::vector<Edge> es = r.tree.edges();
  std::sort(es.begin(), es.end());
  for (const Edge& e : es) os << "tedge " << e.first << " " << e.second << "\n";
  for (size_t i = 0; i < r.paths.size(); i++) {
    os << "path " << i << ":";
    for (int v : r.paths[i].verts()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

inline std::string emit_graph(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph " << g.n << "\n";
  for (const Edge& e : g.edges) os << "edge " << e.first << " " << e.second << "\n";
  return os.str();
}

// host tree in black, each path as a colored parallel edge chain
inline std::string dot_of_representation(const Representation& r) {
  static const char* palette[10] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                    "#42d4f4", "#f032e6", "#9a6324", "#800000", "#000075"};
  std::ostringstream os;
  os << "graph host {\n";
  std::vector<Edge> es = r.tree.edges();
  std::sort(es.begin(), es.end());
  for (const Edge& e : es) os << "  " << e.first << " -- " << e.second << ";\n";
  for (size_t i = 0; i < r.paths.size(); i++) {
    const std::vector<int>& v = r.paths[i].verts();
    for (size_t j = 0; j + 1 < v.size(); j++) {
      os << "  " << v[j] << " -- " << v[j + 1] << " [color=\"" << palette[i % 10] << "\"";
      if (j == 0) os << ", label=\"p" << i << "\"";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

// cycle edges blue, chords red and dashed
inline std::string dot_of_pair(const PairGC& p) {
  std::ostringstream os;
  os << "graph pair {\n";
  int n = p.n();
  for (int i = 0; i < n; i++)
    os << "  " << i << " -- " << (i + 1) % n << " [color=blue];\n";
  for (const Edge& c : p.chords())
    os << "  " << c.first << " -- " << c.second << " [color=red, style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace io
}  // namespace enpt
