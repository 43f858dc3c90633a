#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enpt/cliques.hpp"
#include "enpt/core.hpp"
#include "enpt/generators.hpp"
#include "enpt/io.hpp"
#include "enpt/minimal.hpp"
#include "enpt/oracle.hpp"
#include "enpt/pairs.hpp"
#include "enpt/solver.hpp"
#include "enpt/verifier.hpp"

namespace enpt {
namespace cli {

// exit codes: 0 = success / YES; 1 = usage or input error; 2 = semantic NO
// (solver refusal, failed verification, reducible representation, search miss)
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_no = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
  f << text;
}

inline PairGC load_pair(const std::string& path) {
  std::istringstream is(read_file(path));
  return io::parse_pair(is);
}

inline Representation load_representation(const std::string& path) {
  std::istringstream is(read_file(path));
  return io::parse_representation(is);
}

inline LabeledGraph load_graph(const std::string& path) {
  std::istringstream is(read_file(path));
  return io::parse_graph(is);
}

inline void print_edge_section(std::ostream& out, const char* name, const LabeledGraph& g) {
  out << name << " " << g.edges.size() << "\n";
  for (const Edge& e : g.edges) out << "edge " << e.first << " " << e.second << "\n";
}

inline const char* kind_text(FaceKind k) {
  switch (k) {
    case FaceKind::Leaf: return "leaf";
    case FaceKind::Intermediate: return "intermediate";
    case FaceKind::Junction: return "junction";
    case FaceKind::Isolated: return "isolated";
  }
  return "unknown";
}

}  // namespace detail

// Dispatches one invocation; streams are injectable for testing.  `args`
// excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream&, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"edge-intersecting non-splitting paths in a tree: representations of hole pairs"};
  app.require_subcommand(1);
  int rc = exit_ok;

  // gen tree|cycle|clique|w51
  auto* gen = app.add_subcommand("gen", "generate a representation");
  gen->require_subcommand(1);
  std::string gen_out, gen_tree_file;
  int gen_n = 0, gen_m = 0;
  auto* gen_tree = gen->add_subcommand("tree", "represent a tree as its own intersection graph");
  gen_tree->add_option("graph-file", gen_tree_file, "graph file holding a tree")->required();
  gen_tree->add_option("-o,--output", gen_out, "write the representation here");
  gen_tree->callback([&] {
    detail::write_output(io::emit_representation(rep_of_tree(detail::load_graph(gen_tree_file))),
                         gen_out, out);
  });
  auto* gen_cycle = gen->add_subcommand("cycle", "represent a cycle");
  gen_cycle->add_option("n", gen_n, "cycle length (>= 3)")->required();
  gen_cycle->add_option("-o,--output", gen_out, "write the representation here");
  gen_cycle->callback(
      [&] { detail::write_output(io::emit_representation(rep_of_cycle(gen_n)), gen_out, out); });
  auto* gen_clique = gen->add_subcommand("clique", "represent a complete graph");
  gen_clique->add_option("m", gen_m, "clique size (>= 1)")->required();
  gen_clique->add_option("-o,--output", gen_out, "write the representation here");
  gen_clique->callback(
      [&] { detail::write_output(io::emit_representation(rep_of_clique(gen_m)), gen_out, out); });
  auto* gen_w51 = gen->add_subcommand("w51", "represent the 5-wheel with one spoke span");
  gen_w51->add_option("-o,--output", gen_out, "write the representation here");
  gen_w51->callback(
      [&] { detail::write_output(io::emit_representation(rep_of_w51()), gen_out, out); });

  // graphs
  std::string graphs_file;
  auto* graphs = app.add_subcommand("graphs", "print the three intersection graphs of a representation");
  graphs->add_option("rep-file", graphs_file)->required();
  graphs->callback([&] {
    Representation r = detail::load_representation(graphs_file);
    detail::print_edge_section(out, "vpt", build_vpt(r));
    detail::print_edge_section(out, "ept", build_ept(r));
    detail::print_edge_section(out, "enpt", build_enpt(r));
  });

  // solve
  std::string solve_file, solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "find the minimal admitted representation of a pair");
  solve_cmd->add_option("pair-file", solve_file)->required();
  solve_cmd->add_option("-o,--output", solve_out, "write the representation here");
  solve_cmd->callback([&] {
    SolverOutcome o = solve(detail::load_pair(solve_file));
    if (o.yes()) {
      detail::write_output(io::emit_representation(*o.rep), solve_out, out);
    } else {
      err << refusal_text(*o.refusal) << "\n";
      rc = exit_no;
    }
  });

  // verify
  std::string verify_rep, verify_pair;
  bool verify_p3 = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a representation against a pair");
  verify_cmd->add_option("rep-file", verify_rep)->required();
  verify_cmd->add_option("pair-file", verify_pair)->required();
  verify_cmd->add_flag("--p3", verify_p3, "also require every red triangle to be a pie");
  verify_cmd->callback([&] {
    Representation r = detail::load_representation(verify_rep);
    PairGC p = detail::load_pair(verify_pair);
    VerifyReport rep = verify_representation(r, p);
    out << "ept " << (rep.ept_ok ? "ok" : "mismatch") << "\n";
    for (const Edge& e : rep.ept_missing) out << "ept-missing " << e.first << " " << e.second << "\n";
    for (const Edge& e : rep.ept_extra) out << "ept-extra " << e.first << " " << e.second << "\n";
    out << "enpt " << (rep.enpt_ok ? "ok" : "mismatch") << "\n";
    for (const Edge& e : rep.enpt_missing)
      out << "enpt-missing " << e.first << " " << e.second << "\n";
    for (const Edge& e : rep.enpt_extra) out << "enpt-extra " << e.first << " " << e.second << "\n";
    bool ok = rep.ok();
    if (verify_p3) {
      P3Result p3 = check_p3(r, p);
      out << "p3 " << (p3.ok ? "ok" : "violated") << "\n";
      if (!p3.ok)
        out << "p3-failing-triangle " << p3.failing_triangle[0] << " " << p3.failing_triangle[1]
            << " " << p3.failing_triangle[2] << "\n";
      ok = ok && p3.ok;
    }
    if (!ok) rc = exit_no;
  });

  // maxclique
  std::string clique_file;
  auto* clique_cmd = app.add_subcommand("maxclique", "largest non-splitting intersection clique");
  clique_cmd->add_option("rep-file", clique_file)->required();
  clique_cmd->callback([&] {
    Representation r = detail::load_representation(clique_file);
    std::int64_t candidates = 0;
    auto cliques = enumerate_maximal_cliques(r, &candidates);
    auto best = max_clique(r);
    out << "clique " << best.size() << ":";
    for (int l : best) out << " " << l;
    out << "\n";
    out << "maximal-cliques " << cliques.size() << "\n";
    out << "candidates " << candidates << "\n";
  });

  // wdt
  std::string wdt_file;
  auto* wdt_cmd = app.add_subcommand("wdt", "weak dual tree of a pair");
  wdt_cmd->add_option("pair-file", wdt_file)->required();
  wdt_cmd->callback([&] {
    WeakDualTree w = weak_dual_tree(detail::load_pair(wdt_file));
    out << "faces " << w.faces.size() << "\n";
    for (size_t i = 0; i < w.faces.size(); i++) {
      out << "face " << i << " " << detail::kind_text(w.kinds[i]) << ":";
      for (int v : w.faces[i]) out << " " << v;
      out << "\n";
    }
    for (size_t k = 0; k < w.dual_edges.size(); k++)
      out << "dualedge " << w.dual_edges[k].first << " " << w.dual_edges[k].second << " chord "
          << w.chord_of[k].first << " " << w.chord_of[k].second << "\n";
    out << "leaves " << w.leaf_count() << "\n";
    out << "intermediates " << w.intermediate_count() << "\n";
    out << "junctions " << w.junction_count() << "\n";
    out << "size-identity " << (w.satisfies_size_identity() ? "holds" : "fails") << "\n";
  });

  // minimal
  std::string minimal_file;
  auto* minimal_cmd = app.add_subcommand("minimal", "check one-step minimality");
  minimal_cmd->add_option("rep-file", minimal_file)->required();
  minimal_cmd->callback([&] {
    if (is_minimal(detail::load_representation(minimal_file))) {
      out << "minimal\n";
    } else {
      out << "reducible\n";
      rc = exit_no;
    }
  });

  // oracle enumerate | search
  auto* oracle = app.add_subcommand("oracle", "exhaustive small-host search");
  oracle->require_subcommand(1);
  std::string oracle_pair_file, oracle_graph_file;
  int oracle_max_tree = 0;
  auto* oracle_enum = oracle->add_subcommand("enumerate", "all representations of a pair");
  oracle_enum->add_option("pair-file", oracle_pair_file)->required();
  oracle_enum->add_option("--max-tree", oracle_max_tree, "largest host tree size")->required();
  oracle_enum->callback([&] {
    auto reps = enumerate_representations_of_pair(detail::load_pair(oracle_pair_file),
                                                  oracle_max_tree);
    out << "found " << reps.size() << "\n";
    for (const Representation& r : reps) out << "\n" << io::emit_representation(r);
  });
  auto* oracle_search = oracle->add_subcommand("search", "one representation of a target graph");
  oracle_search->add_option("graph-file", oracle_graph_file)->required();
  oracle_search->add_option("--max-tree", oracle_max_tree, "largest host tree size")->required();
  oracle_search->callback([&] {
    auto found = search_enpt_representation(detail::load_graph(oracle_graph_file), oracle_max_tree);
    if (found.has_value()) {
      out << io::emit_representation(*found);
    } else {
      err << "no representation within bounds\n";
      rc = exit_no;
    }
  });

  // dot
  std::string dot_file, dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "export a representation or pair for rendering");
  dot_cmd->add_option("file", dot_file, "representation or pair file")->required();
  dot_cmd->add_option("-o,--output", dot_out, "write the DOT text here");
  dot_cmd->callback([&] {
    std::string text = detail::read_file(dot_file);
    std::istringstream sniff(text);
    std::string first;
    sniff >> first;
    std::istringstream is(text);
    if (first == "tree") {
      detail::write_output(io::dot_of_representation(io::parse_representation(is)), dot_out, out);
    } else if (first == "pair") {
      detail::write_output(io::dot_of_pair(io::parse_pair(is)), dot_out, out);
    } else {
      throw Error(ErrorKind::Parse, "line 1: expected a 'tree' or 'pair' file");
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return rc;
}

}  // namespace cli
}  // namespace enpt
