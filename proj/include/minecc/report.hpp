// Machine-readable solve reports: a versioned JSON schema, a flat TSV row,
// and the independent re-verification used by the verify command.

#ifndef MINECC_REPORT_HPP
#define MINECC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minecc/hypergraph.hpp"
#include "minecc/solve.hpp"

namespace minecc {

inline constexpr int kReportSchema = 1;

struct SolveReport {
  int schema = kReportSchema;
  std::string algorithm;
  long long n = 0, m = 0, k = 0, r = 0, mu = 0;
  Weight objective = 0;
  std::optional<Rational> lower_bound;  // omitted for localratio and exact
  std::optional<Rational> ratio;        // objective / lower_bound
  std::vector<int> deleted_edge_ids;    // original 1-based ids, ascending
  std::vector<int> coloring;            // coloring[u-1] = color of node u
  double runtime_ms = 0;
  std::size_t peak_mem_estimate_bytes = 0;  // allocator-style estimate
  WorkCounters work_counters;
  std::optional<Weight> exact_value;        // present with --with-exact
  std::optional<Rational> ratio_vs_exact;
};

SolveReport make_report(const std::string& algorithm, const ColoredHypergraph& graph,
                        const SolveResult& result);

nlohmann::json report_to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& json);

std::string report_to_tsv(const SolveReport& report);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // failure description, empty on pass
};

// Recomputes everything checkable from the instance alone: id validity,
// conflict-freeness, the objective against the deleted edges' weight, and
// consistency between the deleted set and the coloring (every surviving
// edge satisfied, unsatisfied weight within the objective).
std::vector<VerifyCheck> verify_report(const ColoredHypergraph& graph,
                                       const SolveReport& report);

bool all_checks_pass(const std::vector<VerifyCheck>& checks);

}  // namespace minecc

#endif  // MINECC_REPORT_HPP
