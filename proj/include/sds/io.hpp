#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sds/classify.hpp"
#include "sds/graph.hpp"
#include "sds/orientation.hpp"
#include "sds/phase_space.hpp"
#include "sds/symmetry.hpp"
#include "sds/system.hpp"

namespace sds {

using nlohmann::json;

// ---- graphs ----------------------------------------------------------
//
// Graph JSON: {"n": <int>, "edges": [[u, v], ...]} with 1-based vertices.

inline json graph_to_json(const Graph& y) {
  json j;
  j["n"] = y.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : y.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph json: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph json: missing integer field 'n'");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph json: missing array field 'edges'");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw std::invalid_argument("graph json: edges[" + std::to_string(k) +
                                  "] is not a pair of integers");
    edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    ++k;
  }
  return Graph(n, std::move(edges));
}

// Parse errors surface the byte position reported by the JSON parser.
inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

inline Graph graph_from_json_text(const std::string& text) {
  return graph_from_json(parse_json_text(text, "graph json"));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

inline Graph read_graph_file(const std::string& path) {
  return graph_from_json_text(read_text_file(path));
}

inline std::string graph_to_dot(const Graph& y) {
  std::ostringstream out;
  out << "graph Y {\n";
  for (int v = 1; v <= y.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : y.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

// ---- orientations ----------------------------------------------------

inline std::string orientation_to_dot(const Orientation& o) {
  std::ostringstream out;
  out << "digraph O {\n";
  for (int v = 1; v <= o.graph().vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : o.graph().edges()) {
    auto [tail, head] = o.direction(e);
    out << "  " << tail << " -> " << head << ";\n";
  }
  out << "}\n";
  return out.str();
}

// One character per canonical edge: '0' = low -> high, '1' = high -> low.
inline std::string orientation_bitmask(const Orientation& o) {
  std::string bits(static_cast<std::size_t>(o.graph().edge_count()), '0');
  for (int i = 0; i < o.graph().edge_count(); ++i)
    if (o.edge_reversed(i)) bits[static_cast<std::size_t>(i)] = '1';
  return bits;
}

inline Orientation orientation_from_bitmask(const Graph& y, const std::string& bits) {
  if (static_cast<int>(bits.size()) != y.edge_count())
    throw std::invalid_argument("orientation bitmask: expected " +
                                std::to_string(y.edge_count()) + " characters, got " +
                                std::to_string(bits.size()));
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      mask |= 1ull << i;
    else if (bits[i] != '0')
      throw std::invalid_argument("orientation bitmask: invalid character at position " +
                                  std::to_string(i));
  }
  return Orientation(y, mask);
}

// ---- systems ---------------------------------------------------------
//
// System JSON:
//   {"graph": {...} (or "graph_file": "path"),
//    "q": 2,
//    "rules": "nor" | [per-vertex entries],
//    "word": [1,2,3,4]}
// A per-vertex entry is a builtin name or an explicit table given as the
// q^arity outputs in lexicographic input order.

inline json system_to_json(const SdsSystem& sys) {
  json j;
  j["graph"] = graph_to_json(sys.graph());
  j["q"] = sys.q();
  j["rules"] = json::array();
  for (int v = 1; v <= sys.graph().vertex_count(); ++v) j["rules"].push_back(sys.rule(v).table());
  j["word"] = sys.word();
  return j;
}

inline SdsSystem system_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("system json: expected an object");
  Graph graph;
  if (j.contains("graph"))
    graph = graph_from_json(j["graph"]);
  else if (j.contains("graph_file") && j["graph_file"].is_string())
    graph = read_graph_file(j["graph_file"].get<std::string>());
  else
    throw std::invalid_argument("system json: missing 'graph' or 'graph_file'");
  if (!j.contains("q") || !j["q"].is_number_integer())
    throw std::invalid_argument("system json: missing integer field 'q'");
  int q = j["q"].get<int>();

  if (!j.contains("rules"))
    throw std::invalid_argument("system json: missing field 'rules'");
  int n = graph.vertex_count();
  std::vector<RuleTable> rules;
  auto rule_from_entry = [&](const json& entry, int v) -> RuleTable {
    int arity = graph.degree(v) + 1;
    if (entry.is_string()) return builtin_rule(entry.get<std::string>(), arity, q);
    if (entry.is_array()) {
      std::vector<int> table;
      for (const auto& x : entry) {
        if (!x.is_number_integer())
          throw std::invalid_argument("system json: rule table for vertex " +
                                      std::to_string(v) + " has a non-integer entry");
        table.push_back(x.get<int>());
      }
      return RuleTable(arity, q, std::move(table));
    }
    throw std::invalid_argument("system json: rule for vertex " + std::to_string(v) +
                                " must be a name or a table");
  };
  if (j["rules"].is_string()) {
    for (int v = 1; v <= n; ++v) rules.push_back(rule_from_entry(j["rules"], v));
  } else if (j["rules"].is_array()) {
    if (static_cast<int>(j["rules"].size()) != n)
      throw std::invalid_argument("system json: expected " + std::to_string(n) +
                                  " rule entries, got " + std::to_string(j["rules"].size()));
    for (int v = 1; v <= n; ++v) rules.push_back(rule_from_entry(j["rules"][v - 1], v));
  } else {
    throw std::invalid_argument("system json: 'rules' must be a name or an array");
  }

  if (!j.contains("word") || !j["word"].is_array())
    throw std::invalid_argument("system json: missing array field 'word'");
  std::vector<int> word;
  for (const auto& x : j["word"]) {
    if (!x.is_number_integer())
      throw std::invalid_argument("system json: word entries must be integers");
    word.push_back(x.get<int>());
  }
  return SdsSystem(std::move(graph), q, std::move(rules), std::move(word));
}

inline SdsSystem system_from_json_text(const std::string& text) {
  return system_from_json(parse_json_text(text, "system json"));
}

// ---- phase spaces ----------------------------------------------------

// Successor table as "index -> index" lines, one per state.
inline std::string phase_space_to_text(const PhaseSpace& ps) {
  std::ostringstream out;
  for (std::uint64_t i = 0; i < ps.size; ++i) out << i << " -> " << ps.successor[i] << "\n";
  return out.str();
}

inline std::string phase_space_to_dot(const PhaseSpace& ps) {
  std::ostringstream out;
  out << "digraph P {\n";
  for (std::uint64_t i = 0; i < ps.size; ++i)
    out << "  " << i << " -> " << ps.successor[i] << ";\n";
  out << "}\n";
  return out.str();
}

inline json cycle_summary_to_json(const PhaseSpace& ps) {
  json j;
  j["cycles"] = cycle_multiset(ps);
  j["periodic_count"] = ps.periodic.size();
  return j;
}

struct CycleSummary {
  std::vector<std::uint64_t> cycles;
  std::uint64_t periodic_count = 0;

  bool operator==(const CycleSummary&) const = default;
};

inline CycleSummary cycle_summary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cycles") || !j.contains("periodic_count"))
    throw std::invalid_argument("cycle summary json: expected {cycles, periodic_count}");
  CycleSummary cs;
  for (const auto& x : j["cycles"]) cs.cycles.push_back(x.get<std::uint64_t>());
  cs.periodic_count = j["periodic_count"].get<std::uint64_t>();
  return cs;
}

// ---- classification & symmetry reports -------------------------------

inline json classification_to_json(const ClickClassification& cc,
                                   const std::vector<Orientation>* representatives = nullptr) {
  json j;
  j["alpha"] = cc.masks.size();
  j["kappa"] = cc.kappa;
  j["delta"] = cc.delta;
  j["class_sizes"] = cc.kappa_class_sizes();
  j["representatives"] = json::array();
  if (representatives)
    for (const Orientation& o : *representatives)
      j["representatives"].push_back(orientation_bitmask(o));
  return j;
}

struct ClassificationSummary {
  std::int64_t alpha = 0;
  std::int64_t kappa = 0;
  std::int64_t delta = 0;
  std::vector<int> class_sizes;
  std::vector<std::string> representatives;

  bool operator==(const ClassificationSummary&) const = default;
};

inline ClassificationSummary classification_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("kappa") || !j.contains("delta"))
    throw std::invalid_argument("classification json: expected {alpha, kappa, delta, ...}");
  ClassificationSummary cs;
  cs.alpha = j["alpha"].get<std::int64_t>();
  cs.kappa = j["kappa"].get<std::int64_t>();
  cs.delta = j["delta"].get<std::int64_t>();
  if (j.contains("class_sizes"))
    for (const auto& x : j["class_sizes"]) cs.class_sizes.push_back(x.get<int>());
  if (j.contains("representatives"))
    for (const auto& x : j["representatives"]) cs.representatives.push_back(x.get<std::string>());
  return cs;
}

inline json symmetry_report_to_json(const SymmetryReport& rep) {
  json j;
  j["aut_order"] = rep.aut_order;
  j["alpha_bar"] = rep.alpha_bar;
  j["kappa_bar"] = rep.kappa_bar;
  j["delta_bar"] = rep.delta_bar;
  return j;
}

inline SymmetryReport symmetry_report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("aut_order") || !j.contains("alpha_bar") ||
      !j.contains("kappa_bar") || !j.contains("delta_bar"))
    throw std::invalid_argument("symmetry json: expected {aut_order, alpha_bar, kappa_bar, delta_bar}");
  SymmetryReport rep;
  rep.aut_order = j["aut_order"].get<std::int64_t>();
  rep.alpha_bar = j["alpha_bar"].get<std::int64_t>();
  rep.kappa_bar = j["kappa_bar"].get<std::int64_t>();
  rep.delta_bar = j["delta_bar"].get<std::int64_t>();
  return rep;
}

}  // namespace sds
