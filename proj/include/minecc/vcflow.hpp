// Vertex-cover-reduction baseline: materialize the bad edge pairs, solve the
// vertex-cover LP through a doubled bipartite flow network, then extract and
// round exactly as the color-pair pipeline does. Exists to cross-validate LP
// values and to demonstrate how |B| dominates its cost.

#ifndef MINECC_VCFLOW_HPP
#define MINECC_VCFLOW_HPP

#include <vector>

#include "minecc/hypergraph.hpp"
#include "minecc/maxflow.hpp"
#include "minecc/solve.hpp"

namespace minecc {

// Layout: node 0 source, node 1 sink, [2, 2+m) a_e, [2+m, 2+2m) b_e.
// Exactly 2|E|+2 nodes and 2|E|+2|B| arcs.
struct VcNetwork {
  FlowNetwork net;
  int edge_count = 0;

  int a_node(int e) const { return 2 + e; }
  int b_node(int e) const { return 2 + edge_count + e; }
};

// Source/sink arcs carry w(e) in x2 scale (half-weights stay integral);
// each bad pair (e, f) contributes infinite arcs (a_e, b_f) and (a_f, b_e).
VcNetwork build_vc_network(const ColoredHypergraph& graph,
                           const std::vector<BadPair>& pairs);

// Pipeline: enumerate pairs (bounded by options.pair_cap), flow, canonical
// cut, x_e = (b_e - a_e + 1)/2 from side membership, shared rounding.
// The lower bound equals colorpair_flow's on the same instance.
SolveResult vc_flow(const ColoredHypergraph& graph, const SolveOptions& options = {});

}  // namespace minecc

#endif  // MINECC_VCFLOW_HPP
