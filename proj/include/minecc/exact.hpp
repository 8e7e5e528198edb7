// Desk-scale exact oracles: minimum edge-colored clustering by coloring
// enumeration, and the vertex-cover LP optimum by half-integral enumeration.

#ifndef MINECC_EXACT_HPP
#define MINECC_EXACT_HPP

#include <cstdint>
#include <vector>

#include "minecc/common.hpp"
#include "minecc/hypergraph.hpp"
#include "minecc/solve.hpp"

namespace minecc {

// x_e in {0, 1/2, 1}, stored as numerators over denominator 2.
struct HalfIntegralSolution {
  std::vector<std::int8_t> x2;  // per edge index: 0, 1, or 2

  // Sum of w(e) * x_e in half-units (an integer).
  Weight objective_half(const ColoredHypergraph& graph) const;
};

struct ExactMinEccResult {
  NodeColoring coloring;  // lexicographically smallest optimum
  Weight value = 0;
  std::uint64_t colorings_enumerated = 0;
};

// Exhaustive minimum over colorings where each node takes a color from C(u)
// (color 1 when C(u) is empty); the restriction is lossless. Prunes branches
// whose partial unsatisfied weight already exceeds the incumbent.
// Guard: product of per-node branching factors must not exceed 10^7.
ExactMinEccResult brute_force_minecc(const ColoredHypergraph& graph,
                                     const Deadline* deadline = nullptr);

struct ExactLpvcResult {
  HalfIntegralSolution x;
  Weight value_half = 0;  // optimum in half-units
  Rational value() const { return Rational(value_half, 2); }
};

// Exhaustive minimum of sum w(e) x_e over x in {0, 1/2, 1}^E subject to
// x_e + x_f >= 1 for every bad pair. Guard: |E| <= 12.
ExactLpvcResult brute_force_lpvc(const ColoredHypergraph& graph,
                                 const Deadline* deadline = nullptr);

// brute_force_minecc packaged as a solver: the deletion set is exactly the
// edges the optimal coloring leaves unsatisfied.
SolveResult exact_solve(const ColoredHypergraph& graph, const SolveOptions& options = {});

}  // namespace minecc

#endif  // MINECC_EXACT_HPP
