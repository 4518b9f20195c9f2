#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sds/automorphisms.hpp"
#include "sds/classify.hpp"
#include "sds/families.hpp"
#include "sds/graph.hpp"
#include "sds/kappa.hpp"
#include "sds/orientation.hpp"
#include "sds/phase_space.hpp"
#include "sds/random_gen.hpp"
#include "sds/symmetry.hpp"
#include "sds/system.hpp"
#include "sds/tutte.hpp"

namespace sds::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 1;
  bool quick = false;  // skip the hypercube symmetry quantities
};

namespace detail {

class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    if (!failures_.empty()) failures_ += "; ";
    failures_ += what;
  }

  template <typename A, typename B>
  void require_eq(const A& actual, const B& expected, const std::string& what) {
    if (actual == static_cast<A>(expected)) return;
    std::ostringstream ss;
    ss << what << ": got " << actual << ", expected " << expected;
    require(false, ss.str());
  }

  CheckResult result(const std::string& name, const std::string& summary) const {
    return {name, ok_, ok_ ? summary : failures_};
  }

  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
  std::string failures_;
};

inline Rng seeded(const Options& opt, std::uint64_t salt) {
  return Rng(opt.seed * 0x9e3779b97f4a7c15ull + salt);
}

inline std::vector<std::uint64_t> star_nor_expected(int leaves) {
  std::vector<std::uint64_t> expect(static_cast<std::size_t>((1 << (leaves - 1)) - 1), 2);
  expect.push_back(3);
  return expect;
}

}  // namespace detail

// 1. Circle-of-four ledger: alpha, kappa, delta and the update graph count.
inline CheckResult check_circ4_invariants(const Options&) {
  detail::Checker c;
  Graph y = circle_graph(4);
  c.require_eq(alpha(y), 14, "alpha(Circ_4)");
  auto cc = classify(y);
  c.require_eq(static_cast<std::int64_t>(cc.kappa), 3, "kappa(Circ_4)");
  c.require_eq(static_cast<std::int64_t>(cc.delta), 2, "delta(Circ_4)");
  c.require_eq(update_graph_components(y), 14, "update graph components(Circ_4)");
  return c.result("circ4-invariants", "alpha=14 kappa=3 delta=2 update-components=14");
}

// 2. Binary 3-cube ledger with kappa reproduced by three routes.
inline CheckResult check_q23_ledger(const Options& opt) {
  detail::Checker c;
  Graph y = hypercube_graph(3);
  c.require_eq(alpha(y), 1862, "alpha(Q_2^3)");
  auto cc = classify(y);
  c.require_eq(static_cast<std::int64_t>(cc.kappa), 133, "kappa(Q_2^3) via click BFS");
  c.require_eq(static_cast<std::int64_t>(cc.delta), 67, "delta(Q_2^3) via click BFS");
  c.require_eq(kappa_recursive(y), 133, "kappa(Q_2^3) via deletion-contraction");
  c.require_eq(tutte(y, 1, 0), 133, "kappa(Q_2^3) via Tutte T(1,0)");
  c.require_eq(delta_from_kappa(y), 67, "delta(Q_2^3) from kappa");
  std::string summary = "alpha=1862 kappa=133(x3 routes) delta=67";
  if (!opt.quick) {
    auto autos = automorphisms(y);
    c.require_eq(static_cast<std::int64_t>(autos.size()), 48, "|Aut(Q_2^3)|");
    c.require_eq(orbit_count_acyc(y), 54, "alpha_bar(Q_2^3) direct");
    c.require_eq(burnside_alpha_bar(y), 54, "alpha_bar(Q_2^3) Burnside");
    c.require_eq(kappa_bar(y), 8, "kappa_bar(Q_2^3)");
    c.require_eq(delta_bar(y), 8, "delta_bar(Q_2^3)");
    summary += " aut=48 alpha_bar=54 kappa_bar=delta_bar=8";
  } else {
    summary += " (symmetry skipped)";
  }
  return c.result("q23-ledger", summary);
}

// 3. Complete graphs and circles.
inline CheckResult check_families(const Options&) {
  detail::Checker c;
  for (int n = 2; n <= 6; ++n) {
    Graph k = complete_graph(n);
    c.require_eq(alpha(k), factorial(n), "alpha(K_" + std::to_string(n) + ")");
    c.require_eq(kappa_recursive(k), factorial(n - 1), "kappa(K_" + std::to_string(n) + ")");
  }
  for (int n = 3; n <= 9; ++n)
    c.require_eq(kappa_recursive(circle_graph(n)), n - 1, "kappa(Circ_" + std::to_string(n) + ")");
  return c.result("complete-and-circle", "alpha(K_n)=n!, kappa(K_n)=(n-1)! for n=2..6; kappa(Circ_n)=n-1 for n=3..9");
}

// 4. Radius-2 circulant closed forms vs recurrence vs deletion-contraction.
inline CheckResult check_circ2_family(const Options&) {
  detail::Checker c;
  auto v5 = circ2_closed_forms(5);
  auto v6 = circ2_closed_forms(6);
  c.require_eq(v5.kappa_circ2_open, 18, "c_5");
  c.require_eq(v6.kappa_circ2_open, 46, "c_6");
  c.require_eq(v5.kappa_circ2, 24, "g_5");
  c.require_eq(v6.kappa_circ2, 64, "g_6");
  for (int n = 5; n <= 10; ++n) {
    auto closed = circ2_closed_forms(n);
    auto rec = circ2_recurrence(n);
    c.require_eq(closed.kappa_circ2, rec.kappa_circ2, "g_" + std::to_string(n) + " recurrence");
    c.require_eq(closed.kappa_circ2_open, rec.kappa_circ2_open,
                 "c_" + std::to_string(n) + " recurrence");
    c.require_eq(kappa_recursive(circulant2_graph(n)), closed.kappa_circ2,
                 "kappa(Circ_{" + std::to_string(n) + ",2})");
    c.require_eq(kappa_recursive(circulant2_open_graph(n)), closed.kappa_circ2_open,
                 "kappa(Circ'_{" + std::to_string(n) + ",2})");
  }
  return c.result("circ2-family", "c5=18 c6=46 g5=24 g6=64; closed=recurrence=deletion-contraction for n=5..10");
}

// 5. Nor over stars: one 3-cycle plus 2^{n-1}-1 two-cycles under any
// permutation order.
inline CheckResult check_star_nor(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 5);
  for (int leaves = 2; leaves <= 5; ++leaves) {
    Graph y = star_graph(leaves);
    auto expect = detail::star_nor_expected(leaves);
    for (int rep = 0; rep < 10; ++rep) {
      auto word = random_permutation(y.vertex_count(), rng);
      auto ps = phase_space(make_system(y, 2, "nor", word));
      c.require(cycle_multiset(ps) == expect,
                "star " + std::to_string(leaves) + " rep " + std::to_string(rep) +
                    ": wrong cycle multiset");
    }
  }
  return c.result("star-nor-orbits", "Star_n nor: {3^1, 2^(2^(n-1)-1)} for n=2..5, 10 random orders each");
}

// 6. Pointwise values of the worked example.
inline CheckResult check_circ4_pointwise(const Options&) {
  detail::Checker c;
  auto sys = make_system(circle_graph(4), 2, "nor", {1, 2, 3, 4});
  State zero = state_from_values({0, 0, 0, 0}, 2);
  c.require(apply_sds(sys, zero).values == std::vector<int>({1, 0, 1, 0}),
            "[Nor,(1,2,3,4)](0,0,0,0) != (1,0,1,0)");
  c.require(apply_parallel(sys, zero).values == std::vector<int>({1, 1, 1, 1}),
            "parallel nor (0,0,0,0) != (1,1,1,1)");
  return c.result("circ4-pointwise", "sequential (0,0,0,0)->(1,0,1,0), parallel ->(1,1,1,1)");
}

// 7. Shift invariance: cyclic shifts of the word preserve the cycle
// multiset and the periodic count.
inline CheckResult check_shift_theorem(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 7);
  int failures = 0;
  for (int it = 0; it < 200; ++it) {
    int n = uniform_int(rng, 2, 5);
    int q = uniform_int(rng, 0, 1) ? 2 : 3;
    Graph y = random_graph(n, n * (n - 1) / 2, rng);
    auto word = random_word(n, 8, rng);
    SdsSystem sys = random_system(y, q, word, rng);
    auto base = phase_space(sys);
    auto base_ms = cycle_multiset(base);
    for (int s = 1; s < static_cast<int>(word.size()); ++s) {
      auto shifted = phase_space(sys.with_word(shift_word(word, s)));
      if (cycle_multiset(shifted) != base_ms || shifted.periodic.size() != base.periodic.size())
        ++failures;
    }
  }
  c.require_eq(failures, 0, "shift-theorem failures");
  return c.result("shift-theorem", "200 random systems: equal cycle multisets and |Per| across all shifts");
}

// 8. Reflection over binary states: the reflected word inverts the map on
// the periodic set. This holds when every local restriction in the vertex's
// own state is a bijection of F_2 (each F_v is then an involution); it is
// NOT a theorem for arbitrary rule tables, so sampled failures are expected
// and reported rather than hidden.
inline CheckResult check_reflection(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 8);
  int inverse_failures = 0, multiset_failures = 0;
  for (int it = 0; it < 100; ++it) {
    int n = uniform_int(rng, 2, 5);
    Graph y = random_graph(n, n * (n - 1) / 2, rng);
    auto word = random_word(n, 8, rng);
    SdsSystem sys = random_system(y, 2, word, rng);
    auto forward = phase_space(sys);
    auto backward = phase_space(sys.with_word(reflect_word(word)));
    if (cycle_multiset(forward) != cycle_multiset(backward)) ++multiset_failures;
    bool inverse_ok = forward.periodic == backward.periodic;
    if (inverse_ok) {
      for (std::uint64_t x : forward.periodic) {
        if (backward.successor[forward.successor[x]] != x ||
            forward.successor[backward.successor[x]] != x) {
          inverse_ok = false;
          break;
        }
      }
    }
    if (!inverse_ok) ++inverse_failures;
  }
  c.require_eq(inverse_failures, 0, "systems violating the restricted two-sided inverse");
  c.require_eq(multiset_failures, 0, "systems with unequal cycle multisets under reflection");
  return c.result("reflection-inverse",
                  "100 random binary systems: reflected word is the two-sided inverse on Per");
}

// 9. Structural identities on random connected graphs plus bridge
// multiplicativity on two-block graphs.
inline CheckResult check_structural(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 9);
  for (int it = 0; it < 100 && c.ok(); ++it) {
    int n = uniform_int(rng, 2, 7);
    Graph y = random_connected_graph(n, n * (n - 1) / 2, rng);
    auto cc = classify(y);
    std::string tag = "it " + std::to_string(it);
    c.require((cc.kappa % 2 == 1) == is_bipartite(y), tag + ": kappa parity vs bipartiteness");
    c.require_eq(delta_from_kappa(y), cc.delta, tag + ": delta from kappa vs classify");
    c.require_eq(kappa_recursive(vertex_join(y)), alpha(y), tag + ": kappa(vertex join) vs alpha");
    auto reps = unique_source_representatives(y, 1);
    c.require_eq(static_cast<std::int64_t>(reps.size()), cc.kappa,
                 tag + ": |Acyc_1(Y)| vs kappa");
    std::set<int> classes;
    for (const Orientation& o : reps)
      classes.insert(cc.kappa_class[static_cast<std::size_t>(cc.index_of_mask(o.mask()))]);
    c.require_eq(static_cast<std::int64_t>(classes.size()), cc.kappa,
                 tag + ": representatives hit every kappa class once");
  }
  for (int it = 0; it < 100 && c.ok(); ++it) {
    int n1 = uniform_int(rng, 2, 4), n2 = uniform_int(rng, 2, 4);
    Graph b1 = random_connected_graph(n1, n1 * (n1 - 1) / 2, rng);
    Graph b2 = random_connected_graph(n2, n2 * (n2 - 1) / 2, rng);
    std::vector<Edge> edges = b1.edges();
    for (const Edge& e : b2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
    Graph disjoint(n1 + n2, edges);
    edges.emplace_back(1, n1 + 1);
    Graph bridged(n1 + n2, edges);
    std::int64_t prod = kappa_recursive(b1) * kappa_recursive(b2);
    c.require_eq(kappa_recursive(disjoint), prod,
                 "two-block it " + std::to_string(it) + ": disjoint union kappa");
    c.require_eq(kappa_recursive(bridged), prod,
                 "two-block it " + std::to_string(it) + ": bridged kappa");
  }
  return c.result("structural-equivalences",
                  "100 connected graphs: parity/bipartite, delta, vertex-join, unique-source; 100 two-block graphs: bridge multiplicativity");
}

// 10. Independent routes agree on random graphs: click BFS vs
// deletion-contraction vs Tutte for kappa, enumeration vs Tutte for alpha,
// direct orbit count vs Burnside for alpha_bar.
inline CheckResult check_oracle_agreement(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 10);
  for (int it = 0; it < 100 && c.ok(); ++it) {
    int n = uniform_int(rng, 2, 7);
    Graph y = random_graph(n, 14, rng);
    std::string tag = "it " + std::to_string(it);
    auto cc = classify(y);
    std::int64_t k = cc.kappa;
    c.require_eq(kappa_recursive(y), k, tag + ": kappa recursion vs click BFS");
    c.require_eq(tutte(y, 1, 0), k, tag + ": Tutte T(1,0) vs click BFS");
    c.require_eq(tutte(y, 2, 0), static_cast<std::int64_t>(cc.masks.size()),
                 tag + ": Tutte T(2,0) vs enumeration");
    c.require_eq(burnside_alpha_bar(y), orbit_count_acyc(y),
                 tag + ": Burnside vs direct orbit count");
  }
  return c.result("oracle-agreement",
                  "100 random graphs: kappa x3 routes, alpha x2 routes, alpha_bar x2 routes");
}

// 11. Forests: every permutation order yields the same cycle multiset; the
// parity system additionally keeps the whole state space periodic.
inline CheckResult check_forest_theorem(const Options& opt) {
  detail::Checker c;
  Rng rng = detail::seeded(opt, 11);
  for (int it = 0; it < 50 && c.ok(); ++it) {
    int n = uniform_int(rng, 2, 6);
    Graph tree = random_tree(n, rng);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    SdsSystem random_sys = random_system(tree, 2, word, rng);
    SdsSystem parity_sys = make_system(tree, 2, "parity", word);
    std::vector<std::uint64_t> random_ms, parity_ms;
    std::vector<int> perm = word;
    bool first = true;
    do {
      auto ps_r = phase_space(random_sys.with_word(perm));
      auto ps_p = phase_space(parity_sys.with_word(perm));
      if (first) {
        random_ms = cycle_multiset(ps_r);
        parity_ms = cycle_multiset(ps_p);
        first = false;
      } else {
        c.require(cycle_multiset(ps_r) == random_ms,
                  "tree " + std::to_string(it) + ": random-rule multiset varies with order");
        c.require(cycle_multiset(ps_p) == parity_ms,
                  "tree " + std::to_string(it) + ": parity multiset varies with order");
      }
      c.require_eq(ps_p.periodic.size(), std::size_t{1} << n,
                   "tree " + std::to_string(it) + ": parity |Per|");
      if (!c.ok()) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return c.result("forest-theorem",
                  "50 random trees: order-independent multisets; parity invertible with |Per|=2^n");
}

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
  return {
      check_circ4_invariants(opt), check_q23_ledger(opt),    check_families(opt),
      check_circ2_family(opt),     check_star_nor(opt),      check_circ4_pointwise(opt),
      check_shift_theorem(opt),    check_reflection(opt),    check_structural(opt),
      check_oracle_agreement(opt), check_forest_theorem(opt),
  };
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

inline void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << r.name << "  "
        << r.detail << "\n";
  out << (all_passed(results) ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
}

}  // namespace sds::verify
