#include "minecc/report.hpp"

#include <algorithm>
#include <sstream>

namespace minecc {

namespace {

nlohmann::json rational_to_json(const Rational& value) {
  return nlohmann::json{{"num", value.num}, {"den", value.den}, {"decimal", value.decimal()}};
}

Rational rational_from_json(const nlohmann::json& json) {
  return Rational(json.at("num").get<std::int64_t>(), json.at("den").get<std::int64_t>());
}

}  // namespace

SolveReport make_report(const std::string& algorithm, const ColoredHypergraph& graph,
                        const SolveResult& result) {
  SolveReport report;
  report.algorithm = algorithm;
  report.n = graph.node_count();
  report.m = graph.edge_count();
  report.k = graph.color_count();
  report.r = graph.max_edge_size();
  report.mu = graph.size_mu();
  report.objective = result.objective;
  if (result.has_lower_bound) {
    report.lower_bound = result.lower_bound();
    report.ratio = result.ratio();
  }
  for (int e : result.deleted.edge_indexes()) {
    report.deleted_edge_ids.push_back(graph.edge(e).original_id);
  }
  std::sort(report.deleted_edge_ids.begin(), report.deleted_edge_ids.end());
  report.coloring = result.coloring.color_of;
  report.runtime_ms = result.runtime_ms;
  report.peak_mem_estimate_bytes = result.peak_mem_estimate;
  report.work_counters = result.work;
  return report;
}

nlohmann::json report_to_json(const SolveReport& report) {
  nlohmann::json json;
  json["schema"] = report.schema;
  json["algorithm"] = report.algorithm;
  json["instance"] = {{"n", report.n}, {"m", report.m}, {"k", report.k},
                      {"r", report.r}, {"mu", report.mu}};
  json["objective"] = report.objective;
  if (report.lower_bound) json["lower_bound"] = rational_to_json(*report.lower_bound);
  if (report.ratio) json["ratio"] = rational_to_json(*report.ratio);
  json["deleted_edge_ids"] = report.deleted_edge_ids;
  json["coloring"] = report.coloring;
  json["runtime_ms"] = report.runtime_ms;
  json["peak_mem_estimate_bytes"] = report.peak_mem_estimate_bytes;
  json["work_counters"] = report.work_counters;
  if (report.exact_value) json["exact_value"] = *report.exact_value;
  if (report.ratio_vs_exact) json["ratio_vs_exact"] = rational_to_json(*report.ratio_vs_exact);
  return json;
}

SolveReport report_from_json(const nlohmann::json& json) {
  SolveReport report;
  report.schema = json.at("schema").get<int>();
  if (report.schema != kReportSchema) {
    throw ParseError("unsupported report schema " + std::to_string(report.schema));
  }
  report.algorithm = json.at("algorithm").get<std::string>();
  const auto& instance = json.at("instance");
  report.n = instance.at("n").get<long long>();
  report.m = instance.at("m").get<long long>();
  report.k = instance.at("k").get<long long>();
  report.r = instance.at("r").get<long long>();
  report.mu = instance.at("mu").get<long long>();
  report.objective = json.at("objective").get<Weight>();
  if (json.contains("lower_bound")) {
    report.lower_bound = rational_from_json(json.at("lower_bound"));
  }
  if (json.contains("ratio")) report.ratio = rational_from_json(json.at("ratio"));
  report.deleted_edge_ids = json.at("deleted_edge_ids").get<std::vector<int>>();
  report.coloring = json.at("coloring").get<std::vector<int>>();
  report.runtime_ms = json.at("runtime_ms").get<double>();
  report.peak_mem_estimate_bytes = json.at("peak_mem_estimate_bytes").get<std::size_t>();
  report.work_counters = json.at("work_counters").get<WorkCounters>();
  if (json.contains("exact_value")) {
    report.exact_value = json.at("exact_value").get<Weight>();
  }
  if (json.contains("ratio_vs_exact")) {
    report.ratio_vs_exact = rational_from_json(json.at("ratio_vs_exact"));
  }
  return report;
}

std::string report_to_tsv(const SolveReport& report) {
  std::ostringstream out;
  out << "algorithm\tn\tm\tk\tr\tmu\tobjective\tlower_bound\tratio\truntime_ms"
      << "\tpeak_mem_estimate_bytes\n";
  out << report.algorithm << '\t' << report.n << '\t' << report.m << '\t' << report.k
      << '\t' << report.r << '\t' << report.mu << '\t' << report.objective << '\t';
  if (report.lower_bound) {
    out << report.lower_bound->num << '/' << report.lower_bound->den;
  } else {
    out << '-';
  }
  out << '\t';
  if (report.ratio) {
    out << report.ratio->decimal();
  } else {
    out << '-';
  }
  out << '\t' << report.runtime_ms << '\t' << report.peak_mem_estimate_bytes << '\n';
  return out.str();
}

std::vector<VerifyCheck> verify_report(const ColoredHypergraph& graph,
                                       const SolveReport& report) {
  std::vector<VerifyCheck> checks;
  auto add = [&checks](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, pass ? "" : detail});
  };

  bool shape_ok = report.n == graph.node_count() && report.m == graph.edge_count() &&
                  report.k == graph.color_count();
  add("instance-shape", shape_ok, "instance shape mismatch: report does not match input");

  bool ids_ok = true;
  EdgeDeletionSet deleted(graph.edge_count());
  int previous = 0;
  for (int original_id : report.deleted_edge_ids) {
    int index = graph.index_of_original_id(original_id);
    if (index < 0 || original_id <= previous) {
      ids_ok = false;
      break;
    }
    previous = original_id;
    deleted.insert(index);
  }
  add("deleted-ids", ids_ok, "deleted edge ids invalid: out of range or not ascending");
  if (!ids_ok) return checks;

  bool conflict_free = is_conflict_free(graph, deleted);
  add("conflict-free", conflict_free,
      "deletion set is not conflict-free: a node keeps edges of two colors");

  Weight recomputed = deletion_weight(graph, deleted);
  add("objective", recomputed == report.objective,
      "objective mismatch: reported " + std::to_string(report.objective) +
          ", recomputed " + std::to_string(recomputed));

  bool coloring_ok = static_cast<int>(report.coloring.size()) == graph.node_count();
  int max_color = std::max(graph.color_count(), 1);
  if (coloring_ok) {
    for (int color : report.coloring) {
      if (color < 1 || color > max_color) {
        coloring_ok = false;
        break;
      }
    }
  }
  add("coloring-valid", coloring_ok, "coloring is not a total map into 1..k");
  if (!coloring_ok) return checks;

  NodeColoring coloring{report.coloring};
  bool consistent = true;
  std::string inconsistency;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (deleted.contains(e)) continue;
    for (int u : graph.edge(e).nodes) {
      if (coloring.color_of[u - 1] != graph.edge(e).color) {
        consistent = false;
        inconsistency = "deleted-set/coloring inconsistency: surviving edge " +
                        std::to_string(graph.edge(e).original_id) + " is unsatisfied";
        break;
      }
    }
    if (!consistent) break;
  }
  add("deleted-coloring-consistency", consistent, inconsistency);

  Weight unsat = unsatisfied_weight(graph, coloring);
  add("coloring-weight-bound", unsat <= report.objective,
      "coloring mismatch: unsatisfied weight " + std::to_string(unsat) +
          " exceeds objective " + std::to_string(report.objective));

  if (report.lower_bound && report.ratio) {
    bool ratio_ok;
    if (report.lower_bound->num == 0) {
      ratio_ok = report.objective == 0 && *report.ratio == Rational(1, 1);
    } else {
      ratio_ok = *report.ratio == Rational(report.objective * report.lower_bound->den,
                                           report.lower_bound->num);
    }
    add("ratio", ratio_ok, "ratio mismatch: ratio is not objective / lower_bound");
  }

  return checks;
}

bool all_checks_pass(const std::vector<VerifyCheck>& checks) {
  for (const VerifyCheck& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

}  // namespace minecc
