#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sds/graph.hpp"

namespace sds {

namespace detail {
inline void require_min(const std::string& family, int n, int min) {
  if (n < min)
    throw std::invalid_argument(family + " requires parameter >= " + std::to_string(min) +
                                ", got " + std::to_string(n));
}
}  // namespace detail

inline Graph empty_graph(int n) {
  detail::require_min("empty", n, 1);
  return Graph(n, {});
}

inline Graph path_graph(int n) {
  detail::require_min("path", n, 1);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph circle_graph(int n) {
  detail::require_min("circle", n, 3);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

// Circ_{n,2}: edges between vertices at circular distance 1 or 2.
inline Graph circulant2_graph(int n) {
  detail::require_min("circulant2", n, 5);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int d = 1; d <= 2; ++d) edges.emplace_back(i, (i - 1 + d) % n + 1);
  return Graph(n, std::move(edges));
}

// Circ'_{n,2}: Circ_{n,2} with the edge {2,n} removed.
inline Graph circulant2_open_graph(int n) {
  detail::require_min("circulant2_open", n, 5);
  return delete_edge(circulant2_graph(n), Edge(2, n));
}

// Star with n leaves on n+1 vertices; hub relabeled to vertex 1.
inline Graph star_graph(int n) {
  detail::require_min("star", n, 1);
  std::vector<Edge> edges;
  for (int i = 2; i <= n + 1; ++i) edges.emplace_back(1, i);
  return Graph(n + 1, std::move(edges));
}

inline Graph complete_graph(int n) {
  detail::require_min("complete", n, 1);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

// Binary d-cube on 2^d vertices; vertex i corresponds to bit pattern i-1.
inline Graph hypercube_graph(int d) {
  detail::require_min("hypercube", d, 1);
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b) {
      int v = u ^ (1 << b);
      if (u < v) edges.emplace_back(u + 1, v + 1);
    }
  return Graph(n, std::move(edges));
}

// Parse "name:param" family specs as used on the command line,
// e.g. "circle:4", "circulant2:7", "star:3", "complete:5", "hypercube:3".
inline Graph parse_family(const std::string& spec) {
  auto pos = spec.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("family spec must look like name:param, got '" + spec + "'");
  std::string name = spec.substr(0, pos);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(pos + 1), &used);
    if (used != spec.size() - pos - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("family spec '" + spec + "' has a non-integer parameter");
  }
  if (name == "circle") return circle_graph(n);
  if (name == "circulant2" || name == "circulant_radius2") return circulant2_graph(n);
  if (name == "circulant2_open" || name == "circulant_radius2_open")
    return circulant2_open_graph(n);
  if (name == "star") return star_graph(n);
  if (name == "complete") return complete_graph(n);
  if (name == "hypercube") return hypercube_graph(n);
  if (name == "path") return path_graph(n);
  if (name == "empty") return empty_graph(n);
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

}  // namespace sds
