#include "minecc/localratio.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace minecc {

LocalRatioVcResult local_ratio_vc(const VcGraph& graph) {
  const int n = static_cast<int>(graph.node_weights.size());
  for (Weight w : graph.node_weights) {
    if (w < 0) throw std::invalid_argument("negative node weight");
  }

  LocalRatioVcResult result;
  result.residual_weights = graph.node_weights;
  for (const auto& [u, v] : graph.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop in vertex-cover graph");
    Weight reduction = std::min(result.residual_weights[u], result.residual_weights[v]);
    result.residual_weights[u] -= reduction;
    result.residual_weights[v] -= reduction;
  }
  for (int v = 0; v < n; ++v) {
    if (result.residual_weights[v] == 0) result.cover.push_back(v);
  }
  return result;
}

EdgeDeletionSet local_ratio_ecc(const ColoredHypergraph& graph, LocalRatioTrace* trace) {
  const int m = graph.edge_count();
  EdgeDeletionSet deleted(m);
  std::vector<Weight> weight(m);
  for (int e = 0; e < m; ++e) weight[e] = graph.edge(e).weight;

  LocalRatioTrace local_trace;
  LocalRatioTrace& t = trace ? *trace : local_trace;

  for (int u = 1; u <= graph.node_count(); ++u) {
    const std::vector<int>& incident = graph.incident_edges(u);
    if (incident.empty()) continue;
    int front = 0;
    int back = static_cast<int>(incident.size()) - 1;

    auto skip_back = [&] {
      while (deleted.contains(incident[back]) && back > front) {
        --back;
        ++t.pointer_moves;
      }
    };
    auto skip_front = [&] {
      while (deleted.contains(incident[front]) && back > front) {
        ++front;
        ++t.pointer_moves;
      }
    };

    skip_back();
    skip_front();

    // The incidence list is sorted by color, so the front and back edges
    // have equal colors exactly when all live edges at u share one color.
    while (graph.edge(incident[front]).color != graph.edge(incident[back]).color) {
      int ef = incident[front];
      int eb = incident[back];
      if (weight[ef] < weight[eb]) {
        deleted.insert(ef);
        weight[eb] -= weight[ef];
        ++t.weight_updates;
        skip_front();
      } else if (weight[ef] == weight[eb]) {
        deleted.insert(ef);
        deleted.insert(eb);
        ++t.weight_updates;
        skip_front();
        skip_back();
      } else {
        deleted.insert(eb);
        weight[ef] -= weight[eb];
        ++t.weight_updates;
        skip_back();
      }
    }
  }
  return deleted;
}

SolveResult local_ratio_solve(const ColoredHypergraph& graph, const SolveOptions&) {
  const auto start = std::chrono::steady_clock::now();

  LocalRatioTrace trace;
  SolveResult result;
  result.deleted = local_ratio_ecc(graph, &trace);
  result.coloring = coloring_from_deletions(graph, result.deleted);
  result.objective = deletion_weight(graph, result.deleted);
  result.work["pointer_moves"] = trace.pointer_moves;
  result.work["weight_updates"] = trace.weight_updates;
  result.peak_mem_estimate = static_cast<std::size_t>(graph.edge_count()) *
                                 (sizeof(Weight) + sizeof(char)) +
                             static_cast<std::size_t>(graph.node_count()) * sizeof(int);

  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace minecc
