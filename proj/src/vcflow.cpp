#include "minecc/vcflow.hpp"

#include <chrono>
#include <stdexcept>

#include "minecc/colorpair.hpp"

namespace minecc {

VcNetwork build_vc_network(const ColoredHypergraph& graph,
                           const std::vector<BadPair>& pairs) {
  const int m = graph.edge_count();
  const Weight infinite = 2 * graph.total_weight() + 1;

  VcNetwork network{FlowNetwork(2 + 2 * m, 0, 1), m};
  for (int e = 0; e < m; ++e) {
    const Weight scaled = graph.edge(e).weight;  // x2 units carry w(e) directly
    network.net.add_arc(network.net.source(), network.a_node(e), scaled);
    network.net.add_arc(network.b_node(e), network.net.sink(), scaled);
  }
  for (const BadPair& pair : pairs) {
    network.net.add_arc(network.a_node(pair.e), network.b_node(pair.f), infinite);
    network.net.add_arc(network.a_node(pair.f), network.b_node(pair.e), infinite);
  }
  return network;
}

SolveResult vc_flow(const ColoredHypergraph& graph, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Deadline deadline(options.time_limit_seconds);

  std::vector<BadPair> pairs = enumerate_bad_pairs(graph, options.pair_cap);
  deadline.check("bad-pair enumeration");

  VcNetwork network = build_vc_network(graph, pairs);
  FlowResult flow = max_flow(network.net, deadline.active() ? &deadline : nullptr);
  CutResult cut = min_cut_source_side(network.net, flow);

  HalfIntegralSolution x;
  x.x2.resize(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    int a = cut.in_source_side[network.a_node(e)];
    int b = cut.in_source_side[network.b_node(e)];
    x.x2[e] = static_cast<std::int8_t>(b - a + 1);
  }

  SolveResult result;
  result.deleted = round_half_integral(graph, x);
  if (!is_conflict_free(graph, result.deleted)) {
    throw std::logic_error("rounded deletion set is not conflict-free");
  }
  result.coloring = coloring_from_deletions(graph, result.deleted);
  result.objective = deletion_weight(graph, result.deleted);
  result.has_lower_bound = true;
  result.lower_bound_half = cut.value;

  result.work = std::move(flow.work);
  result.work["bad_pairs"] = static_cast<std::uint64_t>(pairs.size());
  result.work["network_nodes"] = static_cast<std::uint64_t>(network.net.node_count());
  result.work["network_arcs"] = static_cast<std::uint64_t>(network.net.arc_count());
  result.peak_mem_estimate =
      flow.memory_bytes + pairs.capacity() * sizeof(BadPair) + x.x2.capacity();

  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace minecc
