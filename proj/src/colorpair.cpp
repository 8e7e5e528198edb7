#include "minecc/colorpair.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace minecc {

std::vector<long long> node_color_offsets(const ColoredHypergraph& graph) {
  std::vector<long long> offsets(graph.node_count() + 1, 0);
  for (int u = 1; u <= graph.node_count(); ++u) {
    offsets[u] = offsets[u - 1] + static_cast<long long>(graph.node_colors(u).size());
  }
  return offsets;
}

namespace {

long long color_rank(const ColoredHypergraph& graph, int u, int color) {
  const std::vector<int>& colors = graph.node_colors(u);
  auto it = std::lower_bound(colors.begin(), colors.end(), color);
  return it - colors.begin();
}

}  // namespace

ColorPairNetwork build_colorpair_network(const ColoredHypergraph& graph) {
  const int m = graph.edge_count();
  std::vector<long long> offsets = node_color_offsets(graph);
  const long long color_slots = offsets[graph.node_count()];
  const long long node_total = 2 + 2LL * m + 2 * color_slots;
  if (node_total > 2'000'000'000LL) {
    throw GuardError("color-pair network too large");
  }

  // Finite capacities are exactly the doubled edge weights on the source and
  // sink arcs, so INF = 2 * total weight + 1 dominates every finite cut.
  const Weight infinite = 2 * graph.total_weight() + 1;

  ColorPairNetwork network{
      FlowNetwork(static_cast<int>(node_total), 0, 1), m, color_slots, std::move(offsets)};
  FlowNetwork& net = network.net;

  for (int u = 1; u <= graph.node_count(); ++u) {
    const std::vector<int>& colors = graph.node_colors(u);
    const long long base = network.offsets[u - 1];
    for (std::size_t i = 0; i < colors.size(); ++i) {
      for (std::size_t j = i + 1; j < colors.size(); ++j) {
        net.add_arc(network.alpha_slot(base + static_cast<long long>(i)),
                    network.beta_slot(base + static_cast<long long>(j)), infinite);
        net.add_arc(network.alpha_slot(base + static_cast<long long>(j)),
                    network.beta_slot(base + static_cast<long long>(i)), infinite);
      }
    }
  }

  for (int e = 0; e < m; ++e) {
    const HyperEdge& edge = graph.edge(e);
    for (int u : edge.nodes) {
      long long slot = network.offsets[u - 1] + color_rank(graph, u, edge.color);
      net.add_arc(network.alpha_edge(e), network.alpha_slot(slot), infinite);
      net.add_arc(network.beta_slot(slot), network.beta_edge(e), infinite);
    }
  }

  for (int e = 0; e < m; ++e) {
    const Weight scaled = graph.edge(e).weight;  // x2 units carry w(e) directly
    net.add_arc(net.source(), network.alpha_edge(e), scaled);
    net.add_arc(network.beta_edge(e), net.sink(), scaled);
  }

  return network;
}

Weight BlpSolution::objective_half(const ColoredHypergraph& graph) const {
  Weight total = 0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    total += graph.edge(e).weight *
             static_cast<Weight>(b_edge[e] - a_edge[e] + 1);
  }
  return total;
}

void validate_blp(const ColoredHypergraph& graph, const BlpSolution& blp) {
  std::vector<long long> offsets = node_color_offsets(graph);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const HyperEdge& edge = graph.edge(e);
    for (int u : edge.nodes) {
      long long slot = offsets[u - 1] + color_rank(graph, u, edge.color);
      if (blp.a_edge[e] > blp.a_node_color[slot]) {
        throw std::logic_error("BLP constraint a_e <= a_u violated at edge " +
                               std::to_string(edge.original_id));
      }
      if (blp.b_node_color[slot] > blp.b_edge[e]) {
        throw std::logic_error("BLP constraint b_u <= b_e violated at edge " +
                               std::to_string(edge.original_id));
      }
    }
  }
  for (int u = 1; u <= graph.node_count(); ++u) {
    const long long base = offsets[u - 1];
    const std::size_t degree = graph.node_colors(u).size();
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = i + 1; j < degree; ++j) {
        if (blp.a_node_color[base + i] > blp.b_node_color[base + j] ||
            blp.a_node_color[base + j] > blp.b_node_color[base + i]) {
          throw std::logic_error("BLP color-pair constraint violated at node " +
                                 std::to_string(u));
        }
      }
    }
  }
}

BlpSolution extract_blp_solution(const ColoredHypergraph& graph,
                                 const ColorPairNetwork& network,
                                 const CutResult& cut) {
  BlpSolution blp;
  const int m = network.edge_count;
  blp.a_edge.resize(m);
  blp.b_edge.resize(m);
  blp.a_node_color.resize(network.color_slot_count);
  blp.b_node_color.resize(network.color_slot_count);
  for (int e = 0; e < m; ++e) {
    blp.a_edge[e] = cut.in_source_side[network.alpha_edge(e)];
    blp.b_edge[e] = cut.in_source_side[network.beta_edge(e)];
  }
  for (long long slot = 0; slot < network.color_slot_count; ++slot) {
    blp.a_node_color[slot] = cut.in_source_side[network.alpha_slot(slot)];
    blp.b_node_color[slot] = cut.in_source_side[network.beta_slot(slot)];
  }
  validate_blp(graph, blp);
  return blp;
}

HalfIntegralSolution blp_to_lpvc(const BlpSolution& blp) {
  HalfIntegralSolution x;
  x.x2.resize(blp.a_edge.size());
  for (std::size_t e = 0; e < blp.a_edge.size(); ++e) {
    x.x2[e] = static_cast<std::int8_t>(blp.b_edge[e] - blp.a_edge[e] + 1);
  }
  return x;
}

EdgeDeletionSet round_half_integral(const ColoredHypergraph& graph,
                                    const HalfIntegralSolution& x) {
  std::vector<Weight> half_weight_by_color(graph.color_count() + 1, 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (x.x2[e] == 1) {
      half_weight_by_color[graph.edge(e).color] += graph.edge(e).weight;
    }
  }
  int best_color = 1;
  for (int color = 2; color <= graph.color_count(); ++color) {
    if (half_weight_by_color[color] > half_weight_by_color[best_color]) {
      best_color = color;
    }
  }

  EdgeDeletionSet deleted(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (x.x2[e] == 2 || (x.x2[e] == 1 && graph.edge(e).color != best_color)) {
      deleted.insert(e);
    }
  }
  return deleted;
}

SolveResult colorpair_flow(const ColoredHypergraph& graph, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Deadline deadline(options.time_limit_seconds);

  ColorPairNetwork network = build_colorpair_network(graph);
  FlowResult flow = max_flow(network.net, deadline.active() ? &deadline : nullptr);
  CutResult cut = min_cut_source_side(network.net, flow);
  BlpSolution blp = extract_blp_solution(graph, network, cut);
  HalfIntegralSolution x = blp_to_lpvc(blp);

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
  result.work["network_nodes"] = static_cast<std::uint64_t>(network.net.node_count());
  result.work["network_arcs"] = static_cast<std::uint64_t>(network.net.arc_count());
  result.peak_mem_estimate = flow.memory_bytes +
                             blp.a_node_color.capacity() * 2 + blp.a_edge.capacity() * 2 +
                             x.x2.capacity();

  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace minecc
