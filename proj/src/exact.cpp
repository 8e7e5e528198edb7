#include "minecc/exact.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace minecc {

Weight HalfIntegralSolution::objective_half(const ColoredHypergraph& graph) const {
  Weight total = 0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    total += graph.edge(e).weight * static_cast<Weight>(x2[e]);
  }
  return total;
}

namespace {

constexpr std::uint64_t kMaxColoringSpace = 10'000'000;

struct MinEccSearch {
  const ColoredHypergraph& graph;
  const Deadline* deadline;
  std::vector<int> choice;            // current color per node (1-based nodes)
  std::vector<char> edge_unsat;       // marked once a mismatched node is seen
  Weight partial = 0;
  Weight best_value = 0;
  std::vector<int> best_choice;
  bool have_best = false;
  std::uint64_t leaves = 0;

  explicit MinEccSearch(const ColoredHypergraph& g, const Deadline* d)
      : graph(g), deadline(d), choice(g.node_count() + 1, 0),
        edge_unsat(g.edge_count(), 0) {}

  void assign(int u, int color, std::vector<int>& newly_unsat) {
    choice[u] = color;
    for (int e : graph.incident_edges(u)) {
      if (!edge_unsat[e] && graph.edge(e).color != color) {
        edge_unsat[e] = 1;
        partial += graph.edge(e).weight;
        newly_unsat.push_back(e);
      }
    }
  }

  void undo(const std::vector<int>& newly_unsat) {
    for (int e : newly_unsat) {
      edge_unsat[e] = 0;
      partial -= graph.edge(e).weight;
    }
  }

  void search(int u) {
    if (deadline && (++leaves & 0xFFF) == 0) deadline->check("exact search");
    if (have_best && partial > best_value) return;
    if (u > graph.node_count()) {
      if (!have_best || partial < best_value) {
        have_best = true;
        best_value = partial;
        best_choice.assign(choice.begin() + 1, choice.end());
      }
      return;
    }
    const std::vector<int>& colors = graph.node_colors(u);
    std::vector<int> newly_unsat;
    if (colors.empty()) {
      assign(u, 1, newly_unsat);
      search(u + 1);
      undo(newly_unsat);
      return;
    }
    for (int color : colors) {
      newly_unsat.clear();
      assign(u, color, newly_unsat);
      search(u + 1);
      undo(newly_unsat);
    }
  }
};

}  // namespace

ExactMinEccResult brute_force_minecc(const ColoredHypergraph& graph,
                                     const Deadline* deadline) {
  std::uint64_t space = 1;
  for (int u = 1; u <= graph.node_count(); ++u) {
    std::uint64_t branching = std::max<std::uint64_t>(graph.node_colors(u).size(), 1);
    if (space > kMaxColoringSpace / branching) {
      throw GuardError("exact search-space guard exceeded: more than " +
                       std::to_string(kMaxColoringSpace) + " colorings");
    }
    space *= branching;
  }

  MinEccSearch search(graph, deadline);
  search.search(1);

  ExactMinEccResult result;
  result.coloring.color_of = std::move(search.best_choice);
  result.value = search.best_value;
  result.colorings_enumerated = search.leaves;
  return result;
}

ExactLpvcResult brute_force_lpvc(const ColoredHypergraph& graph, const Deadline* deadline) {
  const int m = graph.edge_count();
  if (m > 12) {
    throw GuardError("LP enumeration guard exceeded: more than 12 edges");
  }

  // Partner lists let each constraint be checked when its later edge is set.
  std::vector<std::vector<int>> earlier_partners(m);
  for (const BadPair& pair : enumerate_bad_pairs(graph)) {
    earlier_partners[pair.f].push_back(pair.e);
  }

  ExactLpvcResult result;
  std::vector<std::int8_t> current(m, 0);
  bool have_best = false;
  std::uint64_t visited = 0;

  auto recurse = [&](auto&& self, int e, Weight partial_half) -> void {
    if (deadline && (++visited & 0xFFF) == 0) deadline->check("LP enumeration");
    // >= keeps the first (lexicographically smallest) optimum found.
    if (have_best && partial_half >= result.value_half) return;
    if (e == m) {
      result.value_half = partial_half;
      result.x.x2 = current;
      have_best = true;
      return;
    }
    for (std::int8_t value = 0; value <= 2; ++value) {
      bool feasible = true;
      for (int partner : earlier_partners[e]) {
        if (current[partner] + value < 2) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      current[e] = value;
      self(self, e + 1, partial_half + graph.edge(e).weight * static_cast<Weight>(value));
    }
    current[e] = 0;
  };
  recurse(recurse, 0, 0);

  if (!have_best) {
    // Unconstrained all-zero assignment is always feasible, so this is
    // unreachable; kept as a consistency check.
    throw std::logic_error("LP enumeration found no feasible point");
  }
  return result;
}

SolveResult exact_solve(const ColoredHypergraph& graph, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Deadline deadline(options.time_limit_seconds);

  ExactMinEccResult exact =
      brute_force_minecc(graph, deadline.active() ? &deadline : nullptr);

  SolveResult result;
  result.coloring = exact.coloring;
  result.deleted = EdgeDeletionSet(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    for (int u : graph.edge(e).nodes) {
      if (result.coloring.color_of[u - 1] != graph.edge(e).color) {
        result.deleted.insert(e);
        break;
      }
    }
  }
  result.objective = exact.value;
  result.work["colorings_enumerated"] = exact.colorings_enumerated;
  result.peak_mem_estimate = static_cast<std::size_t>(graph.edge_count()) +
                             static_cast<std::size_t>(graph.node_count()) * 2 * sizeof(int);

  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace minecc
