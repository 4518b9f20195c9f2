// Command-line front end for the SDS toolkit: graph invariants, phase
// spaces, equivalence checks, orientation classification, verification.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sds/sds.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_invalid = 2;
constexpr int exit_cap = 3;

struct GraphSource {
  std::string family;
  std::string file;

  sds::Graph resolve() const {
    if (!family.empty() && !file.empty())
      throw std::invalid_argument("give either --family or --graph, not both");
    if (!family.empty()) return sds::parse_family(family);
    if (!file.empty()) return sds::read_graph_file(file);
    throw std::invalid_argument("a graph is required: --family name:param or --graph file");
  }
};

void add_graph_options(CLI::App* cmd, GraphSource* src) {
  cmd->add_option("--family", src->family,
                  "graph family spec, e.g. circle:4, circulant2:7, star:3, complete:5, "
                  "hypercube:3, path:5, empty:3");
  cmd->add_option("--graph", src->file, "graph JSON file {\"n\":..., \"edges\":[[u,v],...]}");
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      word.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("word '" + text + "' must be a comma-separated vertex list");
    }
  }
  if (word.empty()) throw std::invalid_argument("word must not be empty");
  return word;
}

struct Caps {
  std::uint64_t max_states = sds::default_state_cap;
  int max_edges_enum = sds::default_enum_edge_cap;
  int max_aut_n = 10;
};

void add_cap_options(CLI::App* cmd, Caps* caps) {
  cmd->add_option("--max-states", caps->max_states, "phase-space state cap (default 2^24)");
  cmd->add_option("--max-edges-enum", caps->max_edges_enum,
                  "orientation enumeration edge cap (default 28)");
  cmd->add_option("--max-aut-n", caps->max_aut_n,
                  "automorphism search vertex cap (default 10)");
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    sds::write_text_file(path, text);
}

// ---- invariants -------------------------------------------------------

int cmd_invariants(const GraphSource& src, const Caps& caps, bool symmetry,
                   const std::string& json_out) {
  sds::Graph y = src.resolve();
  std::int64_t a = sds::alpha(y, caps.max_edges_enum);
  auto cc = sds::classify(y, caps.max_edges_enum);
  std::int64_t kr = sds::kappa_recursive(y);
  if (kr != cc.kappa) {
    std::cerr << "method disagreement: classify kappa=" << cc.kappa
              << " vs recursive kappa=" << kr << "\n";
    return exit_verification;
  }
  std::cout << "alpha=" << a << " kappa=" << cc.kappa << " delta=" << cc.delta << "\n";
  sds::json j{{"alpha", a}, {"kappa", cc.kappa}, {"delta", cc.delta}};
  if (symmetry) {
    sds::SymmetryReport rep = sds::symmetry_report(y, caps.max_aut_n, caps.max_edges_enum);
    std::cout << "aut_order=" << rep.aut_order << " alpha_bar=" << rep.alpha_bar
              << " kappa_bar=" << rep.kappa_bar << " delta_bar=" << rep.delta_bar << "\n";
    j.update(sds::symmetry_report_to_json(rep));
  }
  if (!json_out.empty()) sds::write_text_file(json_out, j.dump(2) + "\n");
  return exit_ok;
}

// ---- phase-space ------------------------------------------------------

struct SystemSource {
  std::string system_file;
  GraphSource graph;
  std::string rule;
  std::string word_text;
  int q = 2;

  sds::SdsSystem resolve() const {
    if (!system_file.empty())
      return sds::system_from_json_text(sds::read_text_file(system_file));
    if (rule.empty() || word_text.empty())
      throw std::invalid_argument("either --system file or --rule plus --word is required");
    return sds::make_system(graph.resolve(), q, rule, parse_word(word_text));
  }
};

void add_system_options(CLI::App* cmd, SystemSource* src) {
  cmd->add_option("--system", src->system_file, "system JSON file");
  add_graph_options(cmd, &src->graph);
  cmd->add_option("--rule", src->rule, "builtin rule name (nor, nand, parity, majority, zero, one)");
  cmd->add_option("--word", src->word_text, "update word, e.g. 1,2,3,4");
  cmd->add_option("--q", src->q, "state set size (default 2)");
}

int cmd_phase_space(const SystemSource& src, const Caps& caps, const std::string& out_prefix,
                    bool dot) {
  sds::SdsSystem sys = src.resolve();
  sds::PhaseSpace ps = sds::phase_space(sys, caps.max_states);
  sds::json summary = sds::cycle_summary_to_json(ps);
  std::cout << "states=" << ps.size << " periodic=" << ps.periodic.size()
            << " cycles=" << summary["cycles"].dump() << "\n";
  if (!out_prefix.empty()) {
    sds::write_text_file(out_prefix + ".succ.txt", sds::phase_space_to_text(ps));
    sds::write_text_file(out_prefix + ".cycles.json", summary.dump(2) + "\n");
    if (dot) sds::write_text_file(out_prefix + ".dot", sds::phase_space_to_dot(ps));
  }
  return exit_ok;
}

// ---- cycle-check ------------------------------------------------------

int cmd_cycle_check(const SystemSource& first, const std::string& system2,
                    const std::string& word2, const Caps& caps) {
  sds::SdsSystem a = first.resolve();
  std::optional<sds::SdsSystem> b;
  if (!system2.empty())
    b = sds::system_from_json_text(sds::read_text_file(system2));
  else if (!word2.empty())
    b = a.with_word(parse_word(word2));
  else
    throw std::invalid_argument("second system required: --system2 file or --word2 list");

  bool functional = sds::functionally_equivalent(a, *b, caps.max_states);
  bool fcycle = sds::functionally_cycle_equivalent(a, *b, caps.max_states);
  bool cyc = sds::cycle_equivalent(sds::phase_space(a, caps.max_states),
                                   sds::phase_space(*b, caps.max_states));
  std::cout << "functional: " << (functional ? "yes" : "no") << "\n"
            << "functional-cycle: " << (fcycle ? "yes" : "no") << "\n"
            << "cycle: " << (cyc ? "yes" : "no") << "\n";
  return exit_ok;
}

// ---- classify ---------------------------------------------------------

int cmd_classify(const GraphSource& src, const Caps& caps, int source_vertex,
                 const std::string& json_out) {
  sds::Graph y = src.resolve();
  auto cc = sds::classify(y, caps.max_edges_enum);
  std::cout << "alpha=" << cc.masks.size() << " kappa=" << cc.kappa << " delta=" << cc.delta
            << "\nclass_sizes=";
  for (int s : cc.kappa_class_sizes()) std::cout << " " << s;
  std::cout << "\n";
  std::vector<sds::Orientation> reps;
  if (source_vertex > 0) {
    reps = sds::unique_source_representatives(y, source_vertex, caps.max_edges_enum);
    std::cout << "unique_source_representatives(v=" << source_vertex << ")=" << reps.size()
              << "\n";
    for (const auto& o : reps) std::cout << "  " << sds::orientation_bitmask(o) << "\n";
  }
  if (!json_out.empty()) {
    sds::json j = sds::classification_to_json(cc, source_vertex > 0 ? &reps : nullptr);
    sds::write_text_file(json_out, j.dump(2) + "\n");
  }
  return exit_ok;
}

// ---- verify -----------------------------------------------------------

int cmd_verify(std::uint64_t seed, bool quick) {
  sds::verify::Options opt;
  opt.seed = seed;
  opt.quick = quick;
  auto results = sds::verify::run_all(opt);
  sds::verify::print_report(std::cout, results);
  return sds::verify::all_passed(results) ? exit_ok : exit_verification;
}

// ---- export -----------------------------------------------------------

int cmd_export(const GraphSource& src, const std::string& format, const std::string& orient_perm,
               const std::string& orient_mask, const std::string& out) {
  sds::Graph y = src.resolve();
  std::optional<sds::Orientation> orient;
  if (!orient_perm.empty() && !orient_mask.empty())
    throw std::invalid_argument("give either --orient-perm or --orient-mask, not both");
  if (!orient_perm.empty())
    orient = sds::orientation_of_permutation(y, parse_word(orient_perm));
  if (!orient_mask.empty()) orient = sds::orientation_from_bitmask(y, orient_mask);

  if (format == "json") {
    if (orient) throw std::invalid_argument("json export covers graphs only; use dot or mask");
    write_or_print(out, sds::graph_to_json(y).dump(2) + "\n");
  } else if (format == "dot") {
    write_or_print(out, orient ? sds::orientation_to_dot(*orient) : sds::graph_to_dot(y));
  } else if (format == "mask") {
    if (!orient) throw std::invalid_argument("mask export needs --orient-perm or --orient-mask");
    write_or_print(out, sds::orientation_bitmask(*orient) + "\n");
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (json, dot, mask)");
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential dynamical systems toolkit"};
  app.require_subcommand(1);

  GraphSource inv_src;
  Caps inv_caps;
  bool inv_symmetry = false;
  std::string inv_json;
  auto* inv = app.add_subcommand("invariants", "alpha/kappa/delta report for a graph");
  add_graph_options(inv, &inv_src);
  add_cap_options(inv, &inv_caps);
  inv->add_flag("--symmetry", inv_symmetry, "also report aut order and alpha/kappa/delta bars");
  inv->add_option("--json", inv_json, "write the report as JSON to this file");

  SystemSource ps_src;
  Caps ps_caps;
  std::string ps_out;
  bool ps_dot = false;
  auto* psc = app.add_subcommand("phase-space", "build the phase space of an SDS");
  add_system_options(psc, &ps_src);
  add_cap_options(psc, &ps_caps);
  psc->add_option("--out", ps_out, "output prefix (.succ.txt, .cycles.json, .dot)");
  psc->add_flag("--dot", ps_dot, "also write a DOT rendering of the successor graph");

  SystemSource cc_src;
  Caps cc_caps;
  std::string cc_system2, cc_word2;
  auto* ccc = app.add_subcommand("cycle-check", "equivalence verdicts for two systems");
  add_system_options(ccc, &cc_src);
  add_cap_options(ccc, &cc_caps);
  ccc->add_option("--system2", cc_system2, "second system JSON file");
  ccc->add_option("--word2", cc_word2, "second update word over the same system");

  GraphSource cl_src;
  Caps cl_caps;
  int cl_source = 0;
  std::string cl_json;
  auto* clc = app.add_subcommand("classify", "click classification of acyclic orientations");
  add_graph_options(clc, &cl_src);
  add_cap_options(clc, &cl_caps);
  clc->add_option("--source", cl_source, "also list unique-source representatives for this vertex");
  clc->add_option("--json", cl_json, "write the classification as JSON to this file");

  std::uint64_t vf_seed = 1;
  bool vf_quick = false;
  auto* vfc = app.add_subcommand("verify", "run the whole verification suite");
  vfc->add_option("--seed", vf_seed, "seed for the randomized property checks");
  vfc->add_flag("--quick", vf_quick, "skip the hypercube symmetry checks");

  GraphSource ex_src;
  std::string ex_format = "json", ex_perm, ex_mask, ex_out;
  auto* exc = app.add_subcommand("export", "write a graph or orientation as JSON/DOT/bitmask");
  add_graph_options(exc, &ex_src);
  exc->add_option("--format", ex_format, "json (graph), dot, or mask");
  exc->add_option("--orient-perm", ex_perm, "orient edges by this permutation order");
  exc->add_option("--orient-mask", ex_mask, "orient edges by this bitmask string");
  exc->add_option("-o,--out", ex_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_src, inv_caps, inv_symmetry, inv_json);
    if (psc->parsed()) return cmd_phase_space(ps_src, ps_caps, ps_out, ps_dot);
    if (ccc->parsed()) return cmd_cycle_check(cc_src, cc_system2, cc_word2, cc_caps);
    if (clc->parsed()) return cmd_classify(cl_src, cl_caps, cl_source, cl_json);
    if (vfc->parsed()) return cmd_verify(vf_seed, vf_quick);
    if (exc->parsed()) return cmd_export(ex_src, ex_format, ex_perm, ex_mask, ex_out);
  } catch (const sds::cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
