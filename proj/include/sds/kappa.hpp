#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sds/graph.hpp"
#include "sds/orientation.hpp"

namespace sds {

namespace detail {

inline std::int64_t kappa_impl(const Graph& g, GraphMemo& memo) {
  if (g.edge_count() == 0) return 1;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    std::int64_t prod = 1;
    for (const auto& comp : comps)
      if (comp.size() > 1) prod *= kappa_impl(induced_subgraph(g, comp), memo);
    return prod;
  }
  // Bridges never change kappa; dropping them splits off the cyclic cores.
  std::vector<Edge> br = bridges(g);
  if (!br.empty()) {
    Graph stripped = g;
    for (const Edge& e : br) stripped = delete_edge(stripped, e);
    return kappa_impl(stripped, memo);
  }
  if (const std::int64_t* hit = memo.find(g)) return *hit;
  // Every remaining edge is a cycle-edge; recurse on the lowest-index one.
  const Edge e = g.edges().front();
  std::int64_t val = kappa_impl(delete_edge(g, e), memo) + kappa_impl(contract_edge(g, e), memo);
  memo.store(g, val);
  return val;
}

}  // namespace detail

// Number of click classes of Acyc(Y), computed by the deletion-contraction
// recursion kappa(Y) = kappa(Y - e) + kappa(Y / e) over cycle-edges, with
// multiplicativity over components and bridge removal. Never enumerates
// orientations.
inline std::int64_t kappa_recursive(const Graph& y) {
  detail::GraphMemo memo;
  return detail::kappa_impl(y, memo);
}

// delta from kappa for connected graphs: kappa/2 if an odd cycle exists,
// (kappa+1)/2 otherwise.
inline std::int64_t delta_from_kappa(const Graph& y) {
  if (!is_connected(y))
    throw std::invalid_argument("delta_from_kappa: graph must be connected");
  std::int64_t k = kappa_recursive(y);
  return is_bipartite(y) ? (k + 1) / 2 : k / 2;
}

struct Circ2Values {
  std::int64_t kappa_circ2 = 0;       // kappa(Circ_{n,2})
  std::int64_t kappa_circ2_open = 0;  // kappa(Circ'_{n,2})
};

namespace detail {

inline void require_circ2_n(std::int64_t n) {
  if (n < 5)
    throw std::invalid_argument("circ2 formulas require n >= 5, got " + std::to_string(n));
  if (n > 60) throw std::overflow_error("circ2 formulas overflow past n = 60");
}

}  // namespace detail

// Closed forms for the kappas of the radius-2 circulant and its opened
// variant:
//   kappa(Circ'_{n,2}) = [(3n-5) 2^n - 4(-1)^n] / 18
//   kappa(Circ_{n,2})  = [(2n-6) 2^n + 9 - (2n-3)(-1)^n] / 6
inline Circ2Values circ2_closed_forms(std::int64_t n) {
  detail::require_circ2_n(n);
  __int128 pw = static_cast<__int128>(1) << n;
  __int128 sign = (n % 2 == 0) ? 1 : -1;
  __int128 open_num = (3 * static_cast<__int128>(n) - 5) * pw - 4 * sign;
  __int128 closed_num = (2 * static_cast<__int128>(n) - 6) * pw + 9 - (2 * n - 3) * sign;
  if (open_num % 18 != 0 || closed_num % 6 != 0)
    throw std::logic_error("circ2_closed_forms: non-integral value, formula misapplied");
  return {static_cast<std::int64_t>(closed_num / 6), static_cast<std::int64_t>(open_num / 18)};
}

// Same quantities through the recurrences
//   c_n = c_{n-1} + 2 c_{n-2} + 2^{n-2},  g_n = g_{n-2} + c_n + 2 c_{n-2}
// seeded with c_5 = 18, c_6 = 46, g_5 = 24, g_6 = 64. Independent
// cross-check route for the closed forms.
inline Circ2Values circ2_recurrence(std::int64_t n) {
  detail::require_circ2_n(n);
  std::vector<std::int64_t> c{18, 46};  // c_5, c_6, ...
  std::vector<std::int64_t> g{24, 64};
  for (std::int64_t k = 7; k <= n; ++k) {
    std::size_t i = static_cast<std::size_t>(k - 5);
    c.push_back(c[i - 1] + 2 * c[i - 2] + (std::int64_t{1} << (k - 2)));
    g.push_back(g[i - 2] + c[i] + 2 * c[i - 2]);
  }
  std::size_t i = static_cast<std::size_t>(n - 5);
  return {g[i], c[i]};
}

}  // namespace sds
