#include <random>

#include "doctest.h"
#include "minecc/maxflow.hpp"
#include "oracles.hpp"

using namespace minecc;
using namespace minecc::testing;

namespace {

FlowNetwork random_network(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % 29);  // 2..30 nodes
  FlowNetwork net(n, 0, n - 1);
  int arcs = static_cast<int>(rng() % 120);
  for (int i = 0; i < arcs; ++i) {
    int tail = static_cast<int>(rng() % n);
    int head = static_cast<int>(rng() % n);
    if (tail == head) continue;
    net.add_arc(tail, head, static_cast<Weight>(rng() % 21));
  }
  return net;
}

void check_cut_certificate(const FlowNetwork& net, const FlowResult& flow,
                           const CutResult& cut) {
  CHECK(cut.value == flow.value);
  CHECK(cut.in_source_side[net.source()] == 1);
  CHECK(cut.in_source_side[net.sink()] == 0);
  for (int arc = 0; arc < net.arc_count(); ++arc) {
    bool tail_in = cut.in_source_side[net.arc_tail(arc)];
    bool head_in = cut.in_source_side[net.arc_head(arc)];
    if (tail_in && !head_in) {
      CHECK(flow.residual[2 * arc] == 0);  // crossing arcs are saturated
    }
    if (!tail_in && head_in) {
      CHECK(flow.residual[2 * arc + 1] == 0);  // reverse crossings carry no flow
    }
  }
}

void check_conservation(const FlowNetwork& net, const FlowResult& flow) {
  std::vector<Weight> balance(net.node_count(), 0);
  for (int arc = 0; arc < net.arc_count(); ++arc) {
    Weight sent = net.arc_capacity(arc) - flow.residual[2 * arc];
    CHECK(sent >= 0);
    CHECK(sent <= net.arc_capacity(arc));
    CHECK(flow.residual[2 * arc + 1] == sent);
    balance[net.arc_tail(arc)] -= sent;
    balance[net.arc_head(arc)] += sent;
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    CHECK(balance[v] == 0);
  }
  CHECK(balance[net.sink()] == flow.value);
}

}  // namespace

TEST_CASE("parallel arcs add up") {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 2);
  net.add_arc(0, 1, 3);
  FlowResult flow = max_flow(net);
  CHECK(flow.value == 5);
  CutResult cut = min_cut_source_side(net, flow);
  CHECK(cut.value == 5);
  CHECK(cut.in_source_side == std::vector<char>{1, 0});
}

TEST_CASE("path flow is limited by the bottleneck") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 4);
  net.add_arc(1, 2, 1);
  CHECK(max_flow(net).value == 1);
}

TEST_CASE("diamond network with a cross arc") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 3);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  net.add_arc(1, 2, 1);
  FlowResult flow = max_flow(net);
  CHECK(flow.value == 5);
  CutResult cut = min_cut_source_side(net, flow);
  check_cut_certificate(net, flow, cut);
  check_conservation(net, flow);
}

TEST_CASE("zero-capacity arcs admit no flow and no reachability") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 0);
  FlowResult flow = max_flow(net);
  CHECK(flow.value == 0);
  CutResult cut = min_cut_source_side(net, flow);
  CHECK(cut.value == 0);
  CHECK(cut.in_source_side[0] == 1);
  CHECK(cut.in_source_side[1] == 0);
  CHECK(cut.in_source_side[2] == 0);
}

TEST_CASE("push-relabel matches the augmenting-path oracle") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    FlowNetwork net = random_network(seed);
    FlowResult flow = max_flow(net);
    CHECK(flow.value == edmonds_karp_value(net));
    CutResult cut = min_cut_source_side(net, flow);
    check_cut_certificate(net, flow, cut);
    check_conservation(net, flow);
  }
}

TEST_CASE("identical input yields an identical canonical cut") {
  FlowNetwork net = random_network(77);
  FlowResult first = max_flow(net);
  FlowResult second = max_flow(net);
  CHECK(first.value == second.value);
  CHECK(min_cut_source_side(net, first).in_source_side ==
        min_cut_source_side(net, second).in_source_side);
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(FlowNetwork(1, 0, 0), std::invalid_argument);
  FlowNetwork net(2, 0, 1);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(net.add_arc(0, 5, 1), std::invalid_argument);
}
