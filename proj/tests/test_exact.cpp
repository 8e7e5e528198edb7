#include <sstream>

#include "doctest.h"
#include "minecc/exact.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace minecc;
using namespace minecc::testing;

TEST_CASE("exhaustive optimum on the toy instance") {
  ExactMinEccResult result = brute_force_minecc(make_t1());
  CHECK(result.value == 1);
  CHECK(result.coloring.color_of == std::vector<int>{1, 1, 1});
}

TEST_CASE("single-color and disjoint instances cost nothing") {
  std::istringstream single("minecc 3 2 1\n1 4 1 2\n1 2 2 3\n");
  CHECK(brute_force_minecc(parse_hypergraph(single)).value == 0);

  std::istringstream disjoint("minecc 4 2 2\n1 4 1 2\n2 2 3 4\n");
  CHECK(brute_force_minecc(parse_hypergraph(disjoint)).value == 0);
}

TEST_CASE("coloring search-space guard") {
  // 30 nodes with two singleton colors each: 2^30 colorings exceed the cap.
  std::ostringstream text;
  text << "minecc 30 60 2\n";
  for (int u = 1; u <= 30; ++u) text << "1 1 " << u << "\n2 1 " << u << "\n";
  std::istringstream in(text.str());
  ColoredHypergraph graph = parse_hypergraph(in);
  CHECK_THROWS_AS(brute_force_minecc(graph), GuardError);
}

TEST_CASE("LP enumeration on the toy instance") {
  ColoredHypergraph t1 = make_t1();
  ExactLpvcResult result = brute_force_lpvc(t1);
  CHECK(result.value_half == 2);
  CHECK(result.value() == Rational(1, 1));
  // x_{e2} = 1, the rest 0; e2 sits at canonical index 2.
  CHECK(result.x.x2 == std::vector<std::int8_t>{0, 0, 2});
}

TEST_CASE("LP enumeration trivia and the mutual triangle") {
  std::istringstream none("minecc 4 2 2\n1 4 1 2\n2 2 3 4\n");
  ExactLpvcResult no_pairs = brute_force_lpvc(parse_hypergraph(none));
  CHECK(no_pairs.value_half == 0);
  CHECK(no_pairs.x.x2 == std::vector<std::int8_t>{0, 0});

  // Three mutually bad unit edges: the optimum is all halves, value 3/2.
  std::istringstream triangle(
      "minecc 3 3 3\n"
      "1 1 1 2\n"
      "2 1 2 3\n"
      "3 1 1 3\n");
  ExactLpvcResult result = brute_force_lpvc(parse_hypergraph(triangle));
  CHECK(result.value_half == 3);
  CHECK(result.value() == Rational(3, 2));
  CHECK(result.x.x2 == std::vector<std::int8_t>{1, 1, 1});
}

TEST_CASE("LP enumeration guard at 13 edges") {
  ColoredHypergraph graph = generate_random(6, 13, 3, 2, 3, 4);
  CHECK_THROWS_AS(brute_force_lpvc(graph), GuardError);
}

TEST_CASE("an expired deadline aborts the search") {
  // Large enough that the periodic deadline check is reached.
  std::ostringstream text;
  text << "minecc 14 28 2\n";
  for (int u = 1; u <= 14; ++u) text << "1 1 " << u << "\n2 1 " << u << "\n";
  std::istringstream in(text.str());
  ColoredHypergraph graph = parse_hypergraph(in);
  Deadline expired(1e-9);
  CHECK_THROWS_AS(brute_force_minecc(graph, &expired), TimeoutError);
  CHECK(brute_force_minecc(graph).value == 14);
}

TEST_CASE("LP value never exceeds the exact optimum") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    ColoredHypergraph graph = small_random_instance(seed);
    Weight half = brute_force_lpvc(graph).value_half;
    CHECK(half <= 2 * brute_force_minecc(graph).value);
  }
}

TEST_CASE("optimal colorings match minimum conflict-free deletions") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    ColoredHypergraph graph = small_random_instance(seed);
    if (graph.edge_count() > 10) continue;
    CHECK(brute_force_minecc(graph).value == min_deletion_weight_by_subsets(graph));
  }
}

TEST_CASE("restricting nodes to incident colors is lossless") {
  // Reference search over all k colors per node, no pruning.
  auto unrestricted_optimum = [](const ColoredHypergraph& graph) {
    Weight best = graph.total_weight();
    std::vector<int> choice(graph.node_count(), 1);
    while (true) {
      best = std::min(best, unsatisfied_weight(graph, NodeColoring{choice}));
      int u = 0;
      while (u < graph.node_count()) {
        if (choice[u] < std::max(graph.color_count(), 1)) {
          ++choice[u];
          break;
        }
        choice[u] = 1;
        ++u;
      }
      if (u == graph.node_count()) break;
    }
    return best;
  };

  int checked = 0;
  for (std::uint64_t seed = 1; checked < 50; ++seed) {
    REQUIRE(seed < 400);
    ColoredHypergraph graph = small_random_instance(seed);
    std::uint64_t space = 1;
    for (int u = 1; u <= graph.node_count(); ++u) {
      space *= static_cast<std::uint64_t>(std::max(graph.color_count(), 1));
    }
    if (space > 300'000) continue;
    ++checked;
    CHECK(brute_force_minecc(graph).value == unrestricted_optimum(graph));
  }
}

TEST_CASE("exact solve wrapper deletes exactly the unsatisfied edges") {
  ColoredHypergraph t1 = make_t1();
  SolveResult result = exact_solve(t1);
  CHECK(result.objective == 1);
  CHECK_FALSE(result.has_lower_bound);
  CHECK(original_ids(t1, result.deleted) == std::vector<int>{2});
  CHECK(unsatisfied_weight(t1, result.coloring) == result.objective);
  CHECK(deletion_weight(t1, result.deleted) == result.objective);
  CHECK(is_conflict_free(t1, result.deleted));
}
