#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/common.hpp"
#include "sds/graph.hpp"
#include "sds/permutation.hpp"
#include "sds/rules.hpp"

namespace sds {

// A system state: per-vertex values plus the mixed-radix index with vertex 1
// as the least significant digit. The two fields are kept consistent by the
// construction helpers below.
struct State {
  std::vector<int> values;  // values[v-1] = state of vertex v
  std::uint64_t index = 0;

  bool operator==(const State&) const = default;
};

inline std::uint64_t state_index(const std::vector<int>& values, int q) {
  std::uint64_t idx = 0;
  for (std::size_t i = values.size(); i-- > 0;)
    idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(values[i]);
  return idx;
}

inline State state_from_values(std::vector<int> values, int q) {
  for (int x : values)
    if (x < 0 || x >= q)
      throw std::invalid_argument("state value " + std::to_string(x) + " outside 0.." +
                                  std::to_string(q - 1));
  std::uint64_t idx = state_index(values, q);
  return State{std::move(values), idx};
}

inline State state_from_index(std::uint64_t index, int n, int q) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::uint64_t rest = index;
  for (int v = 0; v < n; ++v) {
    values[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
    rest /= static_cast<std::uint64_t>(q);
  }
  if (rest != 0) throw std::invalid_argument("state index out of range for q^n");
  return State{std::move(values), index};
}

// Graph + per-vertex rule tables + update word. The rule of vertex v is
// applied to the states of its ordered closed neighborhood (ascending vertex
// labels, v included in place), so rules[v] must have arity degree(v) + 1.
class SdsSystem {
 public:
  SdsSystem(Graph graph, int q, std::vector<RuleTable> rules, std::vector<int> word)
      : graph_(std::move(graph)), q_(q), rules_(std::move(rules)), word_(std::move(word)) {
    int n = graph_.vertex_count();
    if (q < 1) throw std::invalid_argument("SdsSystem: q must be >= 1");
    if (static_cast<int>(rules_.size()) != n)
      throw std::invalid_argument("SdsSystem: expected one rule per vertex, got " +
                                  std::to_string(rules_.size()) + " for n = " +
                                  std::to_string(n));
    for (int v = 1; v <= n; ++v) {
      const RuleTable& r = rules_[static_cast<std::size_t>(v - 1)];
      if (r.q() != q)
        throw std::invalid_argument("SdsSystem: rule of vertex " + std::to_string(v) +
                                    " has mismatched q");
      if (r.arity() != graph_.degree(v) + 1)
        throw std::invalid_argument("SdsSystem: rule of vertex " + std::to_string(v) +
                                    " has arity " + std::to_string(r.arity()) +
                                    ", expected degree+1 = " +
                                    std::to_string(graph_.degree(v) + 1));
    }
    for (int v : word_) graph_.check_vertex(v);
    neighborhoods_.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) neighborhoods_.push_back(graph_.closed_neighborhood(v));
  }

  const Graph& graph() const { return graph_; }
  int q() const { return q_; }
  const std::vector<int>& word() const { return word_; }
  const RuleTable& rule(int v) const { return rules_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<RuleTable>& rules() const { return rules_; }
  const std::vector<int>& neighborhood(int v) const {
    return neighborhoods_[static_cast<std::size_t>(v - 1)];
  }

  std::uint64_t state_count() const {
    return checked_pow(static_cast<std::uint64_t>(q_), graph_.vertex_count());
  }

  SdsSystem with_word(std::vector<int> word) const {
    return SdsSystem(graph_, q_, rules_, std::move(word));
  }

  // New value of coordinate v given current values. The scratch buffer is
  // caller-owned so the system itself stays shareable across threads.
  int local_value(int v, const std::vector<int>& values, std::vector<int>& scratch) const {
    const auto& nb = neighborhood(v);
    scratch.clear();
    for (int w : nb) scratch.push_back(values[static_cast<std::size_t>(w - 1)]);
    return rule(v).eval(scratch);
  }

  int local_value(int v, const std::vector<int>& values) const {
    std::vector<int> scratch;
    return local_value(v, values, scratch);
  }

  void apply_local_inplace(int v, std::vector<int>& values, std::vector<int>& scratch) const {
    values[static_cast<std::size_t>(v - 1)] = local_value(v, values, scratch);
  }

  // Sequential composition F_{w_m} o ... o F_{w_1} applied in place.
  void apply_word_inplace(std::vector<int>& values, std::vector<int>& scratch) const {
    for (int v : word_) apply_local_inplace(v, values, scratch);
  }

  void apply_word_inplace(std::vector<int>& values) const {
    std::vector<int> scratch;
    apply_word_inplace(values, scratch);
  }

 private:
  Graph graph_;
  int q_;
  std::vector<RuleTable> rules_;
  std::vector<int> word_;
  std::vector<std::vector<int>> neighborhoods_;
};

// Convenience builder: the same named rule on every vertex, arity matching
// each vertex degree.
inline SdsSystem make_system(const Graph& graph, int q, const std::string& rule_name,
                             std::vector<int> word) {
  std::vector<RuleTable> rules;
  rules.reserve(static_cast<std::size_t>(graph.vertex_count()));
  for (int v = 1; v <= graph.vertex_count(); ++v)
    rules.push_back(builtin_rule(rule_name, graph.degree(v) + 1, q));
  return SdsSystem(graph, q, std::move(rules), std::move(word));
}

inline State apply_local(const SdsSystem& sys, int v, const State& s) {
  sys.graph().check_vertex(v);
  std::vector<int> values = s.values;
  values[static_cast<std::size_t>(v - 1)] = sys.local_value(v, s.values);
  return state_from_values(std::move(values), sys.q());
}

inline State apply_sds(const SdsSystem& sys, const State& s) {
  std::vector<int> values = s.values;
  sys.apply_word_inplace(values);
  return state_from_values(std::move(values), sys.q());
}

// Synchronous update: every vertex reads the same input state.
inline State apply_parallel(const SdsSystem& sys, const State& s) {
  int n = sys.graph().vertex_count();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) values[static_cast<std::size_t>(v - 1)] = sys.local_value(v, s.values);
  return state_from_values(std::move(values), sys.q());
}

// s-fold cyclic shift: the first s entries move to the end, so
// shift_word(w, 1) = (w_2, ..., w_m, w_1).
inline std::vector<int> shift_word(std::vector<int> w, int s) {
  if (w.empty()) return w;
  if (s < 0) throw std::invalid_argument("shift_word: negative shift");
  s %= static_cast<int>(w.size());
  std::rotate(w.begin(), w.begin() + s, w.end());
  return w;
}

inline std::vector<int> reflect_word(std::vector<int> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Entrywise application: gamma * w = (gamma(w_1), ..., gamma(w_m)).
inline std::vector<int> permute_word(const VertexPermutation& gamma, std::vector<int> w) {
  for (int& v : w) {
    if (v < 1 || v > gamma.size())
      throw std::invalid_argument("permute_word: word entry outside permutation domain");
    v = gamma(v);
  }
  return w;
}

// gamma . (y_1, ..., y_n) places the old value of vertex v at gamma(v).
inline State permute_state(const VertexPermutation& gamma, const State& s, int q) {
  std::vector<int> values(s.values.size());
  for (int v = 1; v <= gamma.size(); ++v)
    values[static_cast<std::size_t>(gamma(v) - 1)] = s.values[static_cast<std::size_t>(v - 1)];
  return state_from_values(std::move(values), q);
}

// Table-level check of gamma o F_v = F_{gamma(v)} o gamma for every vertex
// and every supplied automorphism.
inline bool rules_aut_invariant(const SdsSystem& sys,
                                const std::vector<VertexPermutation>& autos) {
  const Graph& g = sys.graph();
  int q = sys.q();
  for (const auto& gamma : autos) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
      int w = gamma(v);
      const auto& nv = sys.neighborhood(v);
      const auto& nw = sys.neighborhood(w);
      int k = static_cast<int>(nv.size());
      // position in n[w] of the image of each member of n[v]
      std::vector<int> pos(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        int img = gamma(nv[static_cast<std::size_t>(i)]);
        auto it = std::lower_bound(nw.begin(), nw.end(), img);
        pos[static_cast<std::size_t>(i)] = static_cast<int>(it - nw.begin());
      }
      std::vector<int> x(static_cast<std::size_t>(k), 0), z(static_cast<std::size_t>(k), 0);
      std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), k);
      for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t rest = t;
        for (int i = k - 1; i >= 0; --i) {
          x[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
          rest /= static_cast<std::uint64_t>(q);
        }
        for (int i = 0; i < k; ++i)
          z[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] =
              x[static_cast<std::size_t>(i)];
        if (sys.rule(v).eval(x) != sys.rule(w).eval(z)) return false;
      }
    }
  }
  return true;
}

}  // namespace sds
