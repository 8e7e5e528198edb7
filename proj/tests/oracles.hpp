// Test-only oracles, independent of the library implementation paths they
// are used to check.

#ifndef MINECC_TESTS_ORACLES_HPP
#define MINECC_TESTS_ORACLES_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "minecc/hypergraph.hpp"
#include "minecc/maxflow.hpp"

namespace minecc::testing {

// O(|E|^2) all-pairs intersection test for bad pairs.
inline std::vector<BadPair> naive_bad_pairs(const ColoredHypergraph& graph) {
  std::vector<BadPair> pairs;
  for (int e = 0; e < graph.edge_count(); ++e) {
    for (int f = e + 1; f < graph.edge_count(); ++f) {
      if (graph.edge(e).color == graph.edge(f).color) continue;
      const auto& a = graph.edge(e).nodes;
      const auto& b = graph.edge(f).nodes;
      bool intersects = false;
      for (int u : a) {
        if (std::find(b.begin(), b.end(), u) != b.end()) {
          intersects = true;
          break;
        }
      }
      if (intersects) pairs.push_back({e, f});
    }
  }
  return pairs;
}

// Incidence-list-based unsatisfied weight, cross-checking the per-edge scan.
inline Weight incidence_unsatisfied_weight(const ColoredHypergraph& graph,
                                           const NodeColoring& coloring) {
  std::vector<char> unsat(graph.edge_count(), 0);
  for (int u = 1; u <= graph.node_count(); ++u) {
    for (int e : graph.incident_edges(u)) {
      if (graph.edge(e).color != coloring.color_of[u - 1]) unsat[e] = 1;
    }
  }
  Weight total = 0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (unsat[e]) total += graph.edge(e).weight;
  }
  return total;
}

// Minimum-weight conflict-free deletion set by subset enumeration (<= ~20 edges).
inline Weight min_deletion_weight_by_subsets(const ColoredHypergraph& graph) {
  const int m = graph.edge_count();
  Weight best = graph.total_weight();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeDeletionSet deleted(m);
    Weight weight = 0;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) {
        deleted.insert(e);
        weight += graph.edge(e).weight;
      }
    }
    if (weight < best && is_conflict_free(graph, deleted)) best = weight;
  }
  return best;
}

// Edmonds-Karp (BFS augmenting paths) max-flow value oracle.
inline Weight edmonds_karp_value(const FlowNetwork& net) {
  std::vector<Weight> residual(net.slot_count());
  for (int slot = 0; slot < net.slot_count(); ++slot) {
    residual[slot] = net.slot_capacity(slot);
  }
  Weight value = 0;
  while (true) {
    std::vector<int> parent_slot(net.node_count(), -1);
    std::queue<int> queue;
    queue.push(net.source());
    parent_slot[net.source()] = -2;
    while (!queue.empty() && parent_slot[net.sink()] == -1) {
      int u = queue.front();
      queue.pop();
      for (int slot : net.out_slots(u)) {
        int v = net.slot_head(slot);
        if (parent_slot[v] == -1 && residual[slot] > 0) {
          parent_slot[v] = slot;
          queue.push(v);
        }
      }
    }
    if (parent_slot[net.sink()] == -1) break;
    Weight bottleneck = -1;
    for (int v = net.sink(); v != net.source();) {
      int slot = parent_slot[v];
      bottleneck = bottleneck < 0 ? residual[slot] : std::min(bottleneck, residual[slot]);
      v = net.slot_tail(slot);
    }
    for (int v = net.sink(); v != net.source();) {
      int slot = parent_slot[v];
      residual[slot] -= bottleneck;
      residual[slot ^ 1] += bottleneck;
      v = net.slot_tail(slot);
    }
    value += bottleneck;
  }
  return value;
}

}  // namespace minecc::testing

#endif  // MINECC_TESTS_ORACLES_HPP
