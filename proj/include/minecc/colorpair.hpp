// Color-pair flow pipeline: build a flow network whose minimum s-t cut
// solves the color-pair BLP, extract the binary variables from the cut,
// map them to a half-integral vertex-cover LP optimum, and round.

#ifndef MINECC_COLORPAIR_HPP
#define MINECC_COLORPAIR_HPP

#include <cstdint>
#include <vector>

#include "minecc/common.hpp"
#include "minecc/exact.hpp"
#include "minecc/hypergraph.hpp"
#include "minecc/maxflow.hpp"
#include "minecc/solve.hpp"

namespace minecc {

// Prefix offsets into the flattened (node, incident color) slots:
// slot(u, i) = offsets[u-1] + rank of i in C(u).
std::vector<long long> node_color_offsets(const ColoredHypergraph& graph);

// Flow network over edge variables and (node, color) variables, with a dense
// block layout for O(1) role lookup:
//   node 0: source, node 1: sink,
//   [2, 2+m):            alpha_e
//   [2+m, 2+2m):         beta_e
//   [2+2m, 2+2m+P):      alpha_u^i   (P = sum_u |C(u)|)
//   [2+2m+P, 2+2m+2P):   beta_u^i
// Source/sink arc capacities carry w(e) in x2 scale so that half-weights
// stay integral; constraint arcs carry (sum of finite capacities) + 1.
struct ColorPairNetwork {
  FlowNetwork net;
  int edge_count = 0;
  long long color_slot_count = 0;      // P
  std::vector<long long> offsets;      // size n+1

  int alpha_edge(int e) const { return 2 + e; }
  int beta_edge(int e) const { return 2 + edge_count + e; }
  int alpha_slot(long long slot) const {
    return static_cast<int>(2 + 2 * edge_count + slot);
  }
  int beta_slot(long long slot) const {
    return static_cast<int>(2 + 2 * edge_count + color_slot_count + slot);
  }
};

ColorPairNetwork build_colorpair_network(const ColoredHypergraph& graph);

// Binary variables of the color-pair BLP, one per network node role.
struct BlpSolution {
  std::vector<std::uint8_t> a_edge, b_edge;            // per edge index
  std::vector<std::uint8_t> a_node_color, b_node_color;  // per (u, i) slot

  // Objective (1/2) sum_e w(e) (b_e - a_e + 1), in half-units.
  Weight objective_half(const ColoredHypergraph& graph) const;
};

// Variables are 1 exactly for nodes on the cut's source side. Throws
// std::logic_error if any BLP constraint is violated (that would indicate a
// max-flow bug: an infinite arc can never cross a finite cut).
BlpSolution extract_blp_solution(const ColoredHypergraph& graph,
                                 const ColorPairNetwork& network,
                                 const CutResult& cut);

// Checks every BLP constraint; throws std::logic_error naming the first
// violation.
void validate_blp(const ColoredHypergraph& graph, const BlpSolution& blp);

// x_e = (b_e - a_e + 1) / 2, which is optimal for the vertex-cover LP when
// the BLP solution is optimal.
HalfIntegralSolution blp_to_lpvc(const BlpSolution& blp);

// Splits edges into x-value classes, keeps the half-class of the color with
// the largest half-weight (smallest color id on ties), and deletes the rest:
// Y = E^1 + (E^1/2 - E_i*). For feasible x the result is conflict-free.
EdgeDeletionSet round_half_integral(const ColoredHypergraph& graph,
                                    const HalfIntegralSolution& x);

// Full pipeline: network, max flow, canonical min cut, extraction, rounding,
// and node coloring. The lower bound is the cut value in half-units, which
// equals OPT(LP_VC) exactly.
SolveResult colorpair_flow(const ColoredHypergraph& graph,
                           const SolveOptions& options = {});

}  // namespace minecc

#endif  // MINECC_COLORPAIR_HPP
