// Deterministic 2-approximations: local-ratio weighted vertex cover on
// explicit graphs, and its implicit linear-time form on edge-colored
// hypergraphs.

#ifndef MINECC_LOCALRATIO_HPP
#define MINECC_LOCALRATIO_HPP

#include <utility>
#include <vector>

#include "minecc/common.hpp"
#include "minecc/hypergraph.hpp"
#include "minecc/solve.hpp"

namespace minecc {

// Node-weighted graph for the explicit vertex-cover form. Nodes are 0-based;
// edges are processed in input order.
struct VcGraph {
  std::vector<Weight> node_weights;
  std::vector<std::pair<int, int>> edges;
};

struct LocalRatioVcResult {
  std::vector<int> cover;              // ascending node ids with residual 0
  std::vector<Weight> residual_weights;
};

// One local-ratio pass: each edge lowers both endpoint residuals by their
// minimum; nodes that hit zero form the cover. Weight of the cover is at
// most twice the minimum-weight vertex cover.
LocalRatioVcResult local_ratio_vc(const VcGraph& graph);

struct LocalRatioTrace {
  std::uint64_t pointer_moves = 0;
  std::uint64_t weight_updates = 0;
  std::uint64_t total() const { return pointer_moves + weight_updates; }
};

// Implicit local-ratio on the hypergraph: per node, a front and back pointer
// sweep the color-sorted incidence list, charging bad pairs until the node's
// surviving edges share one color. Runs in O(mu) time; the input graph is
// not modified (weights mutate on a private copy shared across nodes).
// Returned set is conflict-free with weight at most twice the optimum.
EdgeDeletionSet local_ratio_ecc(const ColoredHypergraph& graph,
                                LocalRatioTrace* trace = nullptr);

// local_ratio_ecc plus derived coloring and diagnostics. Computes no LP
// bound, so the result carries none.
SolveResult local_ratio_solve(const ColoredHypergraph& graph,
                              const SolveOptions& options = {});

}  // namespace minecc

#endif  // MINECC_LOCALRATIO_HPP
