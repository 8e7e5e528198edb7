#include <sstream>

#include "doctest.h"
#include "minecc/colorpair.hpp"
#include "minecc/vcflow.hpp"
#include "test_helpers.hpp"

using namespace minecc;
using namespace minecc::testing;

TEST_CASE("toy reduction network has 8 nodes and 10 arcs") {
  ColoredHypergraph t1 = make_t1();
  VcNetwork network = build_vc_network(t1, enumerate_bad_pairs(t1));
  CHECK(network.net.node_count() == 8);
  CHECK(network.net.arc_count() == 10);
}

TEST_CASE("no bad pairs means a zero cut and all-zero x") {
  std::istringstream in("minecc 4 2 2\n1 4 1 2\n2 2 3 4\n");
  ColoredHypergraph graph = parse_hypergraph(in);
  SolveResult result = vc_flow(graph);
  CHECK(result.lower_bound_half == 0);
  CHECK(result.objective == 0);
  CHECK(result.deleted.count() == 0);
}

TEST_CASE("a single unit bad pair has LP value one") {
  std::istringstream in("minecc 1 2 2\n1 1 1\n2 1 1\n");
  ColoredHypergraph graph = parse_hypergraph(in);
  SolveResult result = vc_flow(graph);
  CHECK(result.lower_bound_half == 2);  // scaled cut 2 = value 1
  CHECK(result.lower_bound() == Rational(1, 1));
  CHECK(result.objective == 1);
}

TEST_CASE("toy pipeline matches the color-pair pipeline") {
  ColoredHypergraph t1 = make_t1();
  SolveResult vc = vc_flow(t1);
  SolveResult cp = colorpair_flow(t1);
  CHECK(vc.objective == 1);
  CHECK(vc.lower_bound_half == 2);
  CHECK(vc.lower_bound_half == cp.lower_bound_half);
}

TEST_CASE("pair cap surfaces as a structured guard failure") {
  ColoredHypergraph t1 = make_t1();
  SolveOptions options;
  options.pair_cap = 1;
  CHECK_THROWS_WITH_AS(vc_flow(t1, options), doctest::Contains("bad-pair explosion"),
                       GuardError);
}

TEST_CASE("network size is exactly 2|E|+2 nodes and 2|E|+2|B| arcs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    ColoredHypergraph graph = small_random_instance(seed);
    std::vector<BadPair> pairs = enumerate_bad_pairs(graph);
    VcNetwork network = build_vc_network(graph, pairs);
    CHECK(network.net.node_count() == 2 * graph.edge_count() + 2);
    CHECK(network.net.arc_count() ==
          2 * graph.edge_count() + 2 * static_cast<int>(pairs.size()));
  }
}

TEST_CASE("LP values agree with the color-pair pipeline everywhere") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    ColoredHypergraph graph = small_random_instance(seed);
    CAPTURE(seed);
    SolveResult vc = vc_flow(graph);
    SolveResult cp = colorpair_flow(graph);
    CHECK(vc.lower_bound_half == cp.lower_bound_half);
    CHECK(is_conflict_free(graph, vc.deleted));

    long long k = graph.colors_present();
    if (k >= 2) {
      CHECK(static_cast<__int128>(vc.objective) * 2 * k <=
            static_cast<__int128>(2 * k - 2) * vc.lower_bound_half);
    } else {
      CHECK(vc.objective == 0);
    }
  }
}

TEST_CASE("memory accounting grows with the pair count") {
  ColoredHypergraph sparse = generate_random(40, 30, 2, 2, 3, 9);
  ColoredHypergraph dense = generate_random(8, 60, 4, 3, 3, 9);
  long long sparse_pairs = count_bad_pairs(sparse);
  long long dense_pairs = count_bad_pairs(dense);
  REQUIRE(dense_pairs > 4 * sparse_pairs);
  SolveResult a = vc_flow(sparse);
  SolveResult b = vc_flow(dense);
  CHECK(a.work.at("bad_pairs") == static_cast<std::uint64_t>(sparse_pairs));
  CHECK(b.work.at("bad_pairs") == static_cast<std::uint64_t>(dense_pairs));
  CHECK(b.peak_mem_estimate > a.peak_mem_estimate);
}
