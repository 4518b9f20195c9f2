#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sds/automorphisms.hpp"
#include "sds/classify.hpp"
#include "sds/common.hpp"
#include "sds/graph.hpp"
#include "sds/orientation.hpp"
#include "sds/permutation.hpp"

namespace sds {

// Quotient of a graph by the cyclic group generated by one automorphism.
// Orbit i of <gamma> on the vertices becomes vertex i+1 of the quotient;
// a loop flag records orbits joined to themselves by a base edge (the
// quotient Graph itself stays simple and loop-free).
struct OrbitGraph {
  Graph base;
  VertexPermutation generator;
  std::vector<std::vector<int>> orbits;  // sorted members, orbit of vertex 1 first
  std::vector<bool> loop;                // per orbit
  Graph quotient;
};

inline OrbitGraph orbit_graph(const Graph& y, const VertexPermutation& gamma) {
  int n = y.vertex_count();
  if (gamma.size() != n)
    throw std::invalid_argument("orbit_graph: permutation size does not match graph");
  OrbitGraph out;
  out.base = y;
  out.generator = gamma;

  std::vector<int> orbit_of(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (orbit_of[static_cast<std::size_t>(v)] != 0) continue;
    int id = static_cast<int>(out.orbits.size()) + 1;
    std::vector<int> members;
    int w = v;
    do {
      orbit_of[static_cast<std::size_t>(w)] = id;
      members.push_back(w);
      w = gamma(w);
    } while (w != v);
    std::sort(members.begin(), members.end());
    out.orbits.push_back(std::move(members));
  }

  int k = static_cast<int>(out.orbits.size());
  out.loop.assign(static_cast<std::size_t>(k), false);
  std::vector<Edge> qedges;
  for (const Edge& e : y.edges()) {
    int a = orbit_of[static_cast<std::size_t>(e.u)], b = orbit_of[static_cast<std::size_t>(e.v)];
    if (a == b)
      out.loop[static_cast<std::size_t>(a - 1)] = true;
    else
      qedges.emplace_back(a, b);
  }
  out.quotient = Graph(k, std::move(qedges));
  return out;
}

// alpha of an orbit graph: a looped orbit admits no acyclic orientation, so
// any loop forces 0; otherwise alpha of the simple quotient.
inline std::int64_t orbit_graph_alpha(const OrbitGraph& og) {
  for (bool l : og.loop)
    if (l) return 0;
  return alpha_recursive(og.quotient);
}

// Relabel a directed edge set by an automorphism: arc (t -> h) becomes
// (gamma(t) -> gamma(h)) on the same underlying graph.
inline Orientation act(const VertexPermutation& gamma, const Orientation& o) {
  const Graph& g = o.graph();
  if (gamma.size() != g.vertex_count())
    throw std::invalid_argument("act: permutation size does not match graph");
  std::uint64_t mask = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    auto [tail, head] = o.direction(e);
    int gt = gamma(tail), gh = gamma(head);
    Edge image(gt, gh);
    int j = g.edge_index(image);
    if (j < 0)
      throw std::invalid_argument("act: permutation is not an automorphism of the graph");
    if (gt > gh) mask |= 1ull << j;
  }
  return Orientation(g, mask);
}

namespace detail {

inline std::uint64_t act_mask(const Graph& g, const VertexPermutation& gamma,
                              std::uint64_t mask) {
  return act(gamma, Orientation(g, mask)).mask();
}

}  // namespace detail

// Number of orbits of Aut(Y) acting on Acyc(Y), counted directly.
inline std::int64_t orbit_count_acyc(const Graph& y, int max_aut_n = 10,
                                     int max_edges = default_enum_edge_cap) {
  auto autos = automorphisms(y, max_aut_n);
  auto masks = detail::enumerate_acyclic_masks(y, max_edges);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(masks.size() * 2);
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);
  detail::UnionFind uf(masks.size());
  for (const auto& gamma : autos) {
    if (gamma == autos.front()) continue;  // identity fixes everything
    for (std::size_t i = 0; i < masks.size(); ++i)
      uf.unite(i, index.at(detail::act_mask(y, gamma, masks[i])));
  }
  int count = 0;
  detail::dense_classes(uf, masks.size(), &count);
  return count;
}

// The same count through Burnside's lemma: the orientations fixed by gamma
// are exactly the acyclic orientations of the orbit graph of <gamma>.
inline std::int64_t burnside_alpha_bar(const Graph& y, int max_aut_n = 10) {
  auto autos = automorphisms(y, max_aut_n);
  std::int64_t sum = 0;
  for (const auto& gamma : autos) sum += orbit_graph_alpha(orbit_graph(y, gamma));
  if (sum % static_cast<std::int64_t>(autos.size()) != 0)
    throw std::logic_error("burnside_alpha_bar: fixed-point sum not divisible by group order");
  return sum / static_cast<std::int64_t>(autos.size());
}

namespace detail {

// Orbits of the induced Aut(Y) action on the given per-orientation class ids.
inline std::int64_t class_orbit_count(const Graph& y, const std::vector<std::uint64_t>& masks,
                                      const std::vector<int>& cls, int class_count,
                                      const std::vector<VertexPermutation>& autos) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(masks.size() * 2);
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);
  UnionFind uf(static_cast<std::size_t>(class_count));
  for (const auto& gamma : autos) {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::size_t j = index.at(act_mask(y, gamma, masks[i]));
      uf.unite(static_cast<std::size_t>(cls[i]), static_cast<std::size_t>(cls[j]));
    }
  }
  int count = 0;
  dense_classes(uf, static_cast<std::size_t>(class_count), &count);
  return count;
}

}  // namespace detail

// Orbits of Aut(Y) on the click classes of Acyc(Y). Well-defined because
// automorphisms commute with clicks.
inline std::int64_t kappa_bar(const Graph& y, int max_aut_n = 10,
                              int max_edges = default_enum_edge_cap) {
  auto cc = classify(y, max_edges);
  auto autos = automorphisms(y, max_aut_n);
  return detail::class_orbit_count(y, cc.masks, cc.kappa_class, cc.kappa, autos);
}

// Orbits of Aut(Y) on the click+reflection classes.
inline std::int64_t delta_bar(const Graph& y, int max_aut_n = 10,
                              int max_edges = default_enum_edge_cap) {
  auto cc = classify(y, max_edges);
  auto autos = automorphisms(y, max_aut_n);
  return detail::class_orbit_count(y, cc.masks, cc.delta_class, cc.delta, autos);
}

struct SymmetryReport {
  std::int64_t aut_order = 0;
  std::int64_t alpha_bar = 0;
  std::int64_t kappa_bar = 0;
  std::int64_t delta_bar = 0;
};

inline SymmetryReport symmetry_report(const Graph& y, int max_aut_n = 10,
                                      int max_edges = default_enum_edge_cap) {
  auto cc = classify(y, max_edges);
  auto autos = automorphisms(y, max_aut_n);
  SymmetryReport rep;
  rep.aut_order = static_cast<std::int64_t>(autos.size());
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(cc.masks.size() * 2);
  for (std::size_t i = 0; i < cc.masks.size(); ++i) index.emplace(cc.masks[i], i);
  detail::UnionFind uf(cc.masks.size());
  for (const auto& gamma : autos)
    for (std::size_t i = 0; i < cc.masks.size(); ++i)
      uf.unite(i, index.at(detail::act_mask(y, gamma, cc.masks[i])));
  int count = 0;
  detail::dense_classes(uf, cc.masks.size(), &count);
  rep.alpha_bar = count;
  rep.kappa_bar = detail::class_orbit_count(y, cc.masks, cc.kappa_class, cc.kappa, autos);
  rep.delta_bar = detail::class_orbit_count(y, cc.masks, cc.delta_class, cc.delta, autos);
  return rep;
}

}  // namespace sds
