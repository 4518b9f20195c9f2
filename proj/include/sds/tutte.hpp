#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sds/common.hpp"
#include "sds/graph.hpp"

namespace sds {

namespace detail {

// Working multigraph for the Tutte recursion: loops (u == v) and parallel
// edges are kept, contraction turns the other copies of the contracted edge
// into loops. Vertex labels are not compacted; only incidence matters.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline bool multi_connected_without(const MultiGraph& g, std::size_t skip, int from, int to) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip) continue;
    auto [a, b] = g.edges[i];
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.n) + 1, false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

inline std::int64_t tutte_rec(MultiGraph g, std::int64_t x, std::int64_t y) {
  std::int64_t factor = 1;
  for (;;) {
    if (g.edges.empty()) return factor;
    std::size_t i = g.edges.size() - 1;
    auto [a, b] = g.edges[i];
    if (a == b) {  // loop: T = y * T(G - e)
      if (y == 0) return 0;
      factor *= y;
      g.edges.pop_back();
      continue;
    }
    if (!multi_connected_without(g, i, a, b)) {  // bridge: T = x * T(G / e)
      if (x == 0) return 0;
      factor *= x;
      g.edges.pop_back();
      for (auto& [p, q] : g.edges) {
        if (p == b) p = a;
        if (q == b) q = a;
      }
      continue;
    }
    // Ordinary edge: T = T(G - e) + T(G / e).
    MultiGraph del = g;
    del.edges.pop_back();
    MultiGraph con = std::move(g);
    con.edges.pop_back();
    for (auto& [p, q] : con.edges) {
      if (p == b) p = a;
      if (q == b) q = a;
    }
    return factor * (tutte_rec(std::move(del), x, y) + tutte_rec(std::move(con), x, y));
  }
}

}  // namespace detail

// Exact Tutte polynomial evaluation at integer points by multigraph
// deletion-contraction. Kept separate from the simple-graph kappa recursion
// so that kappa(Y) = T(Y,1,0) and alpha(Y) = T(Y,2,0) are independent
// cross-checks.
inline std::int64_t tutte(const Graph& y, std::int64_t x, std::int64_t y_arg, int max_n = 12,
                          int max_m = 20) {
  if (y.vertex_count() > max_n || y.edge_count() > max_m)
    throw cap_error("tutte: graph exceeds caps (n <= " + std::to_string(max_n) + ", m <= " +
                    std::to_string(max_m) + ")");
  detail::MultiGraph g;
  g.n = y.vertex_count();
  g.edges.reserve(y.edges().size());
  for (const Edge& e : y.edges()) g.edges.emplace_back(e.u, e.v);
  return detail::tutte_rec(std::move(g), x, y_arg);
}

}  // namespace sds
