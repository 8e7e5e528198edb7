// Common solver options and result type shared by every solver entry point.

#ifndef MINECC_SOLVE_HPP
#define MINECC_SOLVE_HPP

#include <cstddef>
#include <stdexcept>

#include "minecc/common.hpp"
#include "minecc/hypergraph.hpp"

namespace minecc {

struct SolveOptions {
  double time_limit_seconds = 0;  // 0 disables the limit
  long long pair_cap = kDefaultBadPairCap;
};

struct SolveResult {
  EdgeDeletionSet deleted;
  NodeColoring coloring;
  // Weight of the deleted set. The derived coloring satisfies every
  // surviving edge, so its unsatisfied weight never exceeds this value.
  Weight objective = 0;

  bool has_lower_bound = false;
  Weight lower_bound_half = 0;  // OPT(LP_VC) in half-units of weight

  double runtime_ms = 0;
  std::size_t peak_mem_estimate = 0;
  WorkCounters work;

  Rational lower_bound() const { return Rational(lower_bound_half, 2); }

  Rational ratio() const {
    if (!has_lower_bound) {
      throw std::logic_error("ratio requested from a solver without an LP bound");
    }
    if (lower_bound_half == 0) {
      if (objective == 0) return Rational(1, 1);
      throw std::logic_error("positive objective with zero LP lower bound");
    }
    return Rational(2 * objective, lower_bound_half);
  }
};

}  // namespace minecc

#endif  // MINECC_SOLVE_HPP
