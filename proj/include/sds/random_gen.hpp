#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "sds/graph.hpp"
#include "sds/rules.hpp"
#include "sds/system.hpp"

namespace sds {

using Rng = std::mt19937_64;

// Bounded draws are done by hand (not std::uniform_int_distribution) so that
// seeded runs reproduce bit-exactly across standard libraries.
inline int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  return p;
}

inline std::vector<int> random_word(int n, int max_len, Rng& rng) {
  int len = uniform_int(rng, 1, max_len);
  std::vector<int> w(static_cast<std::size_t>(len));
  for (int& v : w) v = uniform_int(rng, 1, n);
  return w;
}

inline RuleTable random_rule_table(int arity, int q, Rng& rng) {
  std::uint64_t size = checked_pow(static_cast<std::uint64_t>(q), arity);
  std::vector<int> table(size);
  for (int& out : table) out = uniform_int(rng, 0, q - 1);
  return RuleTable(arity, q, std::move(table));
}

inline SdsSystem random_system(const Graph& graph, int q, std::vector<int> word, Rng& rng) {
  std::vector<RuleTable> rules;
  rules.reserve(static_cast<std::size_t>(graph.vertex_count()));
  for (int v = 1; v <= graph.vertex_count(); ++v)
    rules.push_back(random_rule_table(graph.degree(v) + 1, q, rng));
  return SdsSystem(graph, q, std::move(rules), std::move(word));
}

// Random labeled tree: each vertex beyond the first attaches to a uniformly
// chosen earlier vertex.
inline Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(uniform_int(rng, 1, v - 1), v);
  return Graph(n, std::move(edges));
}

// Random graph with an edge count drawn from 0..max_m (clamped to the number
// of vertex pairs); may be disconnected.
inline Graph random_graph(int n, int max_m, Rng& rng) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  int limit = std::min<int>(max_m, static_cast<int>(all.size()));
  int m = uniform_int(rng, 0, limit);
  for (int i = 0; i < m; ++i) {
    int j = uniform_int(rng, i, static_cast<int>(all.size()) - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
  }
  all.resize(static_cast<std::size_t>(m));
  return Graph(n, std::move(all));
}

// Random connected graph: a random spanning tree plus extra random edges up
// to max_m total (clamped).
inline Graph random_connected_graph(int n, int max_m, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::vector<Edge> rest;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!tree.has_edge(u, v)) rest.emplace_back(u, v);
  int limit = std::min<int>(max_m, static_cast<int>(edges.size() + rest.size()));
  int extra = limit <= static_cast<int>(edges.size())
                  ? 0
                  : uniform_int(rng, 0, limit - static_cast<int>(edges.size()));
  for (int i = 0; i < extra; ++i) {
    int j = uniform_int(rng, i, static_cast<int>(rest.size()) - 1);
    std::swap(rest[static_cast<std::size_t>(i)], rest[static_cast<std::size_t>(j)]);
    edges.push_back(rest[static_cast<std::size_t>(i)]);
  }
  return Graph(n, std::move(edges));
}

}  // namespace sds
