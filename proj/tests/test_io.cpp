#include <catch2/catch_amalgamated.hpp>

#include "sds/families.hpp"
#include "sds/io.hpp"
#include "sds/random_gen.hpp"

using namespace sds;

TEST_CASE("graph json round trip") {
  Rng rng(67);
  for (int it = 0; it < 20; ++it) {
    Graph y = random_graph(uniform_int(rng, 1, 7), 12, rng);
    CHECK(graph_from_json(graph_to_json(y)) == y);
  }
  Graph c4 = graph_from_json_text(R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})");
  CHECK(c4 == circle_graph(4));
}

TEST_CASE("graph json rejects malformed input with position info") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(graph_from_json_text("{\"n\": 4, "), ContainsSubstring("line 1, column 10"));
  CHECK_THROWS_WITH(graph_from_json_text(R"({"edges": []})"), ContainsSubstring("'n'"));
  CHECK_THROWS_WITH(graph_from_json_text(R"({"n": 2})"), ContainsSubstring("'edges'"));
  CHECK_THROWS_WITH(graph_from_json_text(R"({"n": 2, "edges": [[1,2,3]]})"),
                    ContainsSubstring("edges[0]"));
  CHECK_THROWS_AS(graph_from_json_text(R"({"n": 2, "edges": [[1,5]]})"), std::invalid_argument);
}

TEST_CASE("graph and orientation dot export") {
  using Catch::Matchers::ContainsSubstring;
  std::string g = graph_to_dot(circle_graph(3));
  CHECK_THAT(g, ContainsSubstring("graph"));
  CHECK_THAT(g, ContainsSubstring("1 -- 2;"));

  Orientation o = orientation_of_permutation(circle_graph(3), {2, 1, 3});
  std::string d = orientation_to_dot(o);
  CHECK_THAT(d, ContainsSubstring("digraph"));
  CHECK_THAT(d, ContainsSubstring("2 -> 1;"));
  CHECK_THAT(d, ContainsSubstring("2 -> 3;"));
}

TEST_CASE("orientation bitmask round trip") {
  Rng rng(71);
  for (int it = 0; it < 20; ++it) {
    int n = uniform_int(rng, 2, 6);
    Graph y = random_graph(n, 10, rng);
    Orientation o = orientation_of_permutation(y, random_permutation(n, rng));
    CHECK(orientation_from_bitmask(y, orientation_bitmask(o)) == o);
  }
  CHECK_THROWS_AS(orientation_from_bitmask(circle_graph(4), "01"), std::invalid_argument);
  CHECK_THROWS_AS(orientation_from_bitmask(circle_graph(4), "01x0"), std::invalid_argument);
}

TEST_CASE("system json round trip") {
  Graph c4 = circle_graph(4);
  auto sys = make_system(c4, 2, "nor", {1, 2, 3, 4});
  SdsSystem back = system_from_json(system_to_json(sys));
  CHECK(back.graph() == c4);
  CHECK(back.q() == 2);
  CHECK(back.word() == sys.word());
  for (int v = 1; v <= 4; ++v) CHECK(back.rule(v) == sys.rule(v));

  SECTION("named shared rule") {
    auto fromname = system_from_json_text(R"({
      "graph": {"n": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]},
      "q": 2, "rules": "nor", "word": [1,2,3,4]})");
    CHECK(functionally_equivalent(fromname, sys));
  }

  SECTION("mixed named and explicit tables") {
    auto mixed = system_from_json_text(R"({
      "graph": {"n": 2, "edges": [[1,2]]},
      "q": 2, "rules": ["parity", [1,0,0,0]], "word": [1,2]})");
    CHECK(mixed.rule(1) == builtin_rule("parity", 2, 2));
    CHECK(mixed.rule(2) == builtin_rule("nor", 2, 2));
  }

  SECTION("schema errors") {
    CHECK_THROWS_AS(system_from_json_text(R"({"q": 2, "rules": "nor", "word": []})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(system_from_json_text(R"({
      "graph": {"n": 2, "edges": [[1,2]]}, "q": 2, "rules": ["nor"], "word": []})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(system_from_json_text(R"({
      "graph": {"n": 2, "edges": [[1,2]]}, "q": 2, "rules": [[0,1],[0,1]], "word": []})"),
                    std::invalid_argument);  // tables must have q^arity entries
  }
}

TEST_CASE("phase space exports") {
  using Catch::Matchers::ContainsSubstring;
  auto ps = phase_space(make_system(circle_graph(4), 2, "nor", {1, 2, 3, 4}));
  std::string txt = phase_space_to_text(ps);
  CHECK_THAT(txt, ContainsSubstring("0 -> 5"));
  CHECK(std::count(txt.begin(), txt.end(), '\n') == 16);
  CHECK_THAT(phase_space_to_dot(ps), ContainsSubstring("digraph"));

  json summary = cycle_summary_to_json(ps);
  CycleSummary cs = cycle_summary_from_json(summary);
  CHECK(cs.cycles == std::vector<std::uint64_t>{7});
  CHECK(cs.periodic_count == 7);
}

TEST_CASE("classification and symmetry report json") {
  Graph c4 = circle_graph(4);
  auto cc = classify(c4);
  auto reps = unique_source_representatives(c4, 1);
  json j = classification_to_json(cc, &reps);
  ClassificationSummary cs = classification_from_json(j);
  CHECK(cs.alpha == 14);
  CHECK(cs.kappa == 3);
  CHECK(cs.delta == 2);
  CHECK(cs.representatives.size() == 3);
  for (const std::string& bits : cs.representatives)
    CHECK(sources(orientation_from_bitmask(c4, bits)) == std::vector<int>{1});

  SymmetryReport rep = symmetry_report(c4);
  CHECK(symmetry_report_from_json(symmetry_report_to_json(rep)).alpha_bar == rep.alpha_bar);
}
