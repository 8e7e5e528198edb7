// minecc: solve, inspect, generate, verify, and benchmark minimum
// edge-colored clustering instances.
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 parse/validation errors, 3 resource guards and time limits.

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minecc/colorpair.hpp"
#include "minecc/exact.hpp"
#include "minecc/hypergraph.hpp"
#include "minecc/localratio.hpp"
#include "minecc/report.hpp"
#include "minecc/vcflow.hpp"

namespace {

using namespace minecc;

const std::vector<std::string> kAlgorithms = {"colorpair", "vcflow", "localratio",
                                              "exact"};

SolveResult run_algorithm(const std::string& algorithm, const ColoredHypergraph& graph,
                          const SolveOptions& options) {
  if (algorithm == "colorpair") return colorpair_flow(graph, options);
  if (algorithm == "vcflow") return vc_flow(graph, options);
  if (algorithm == "localratio") return local_ratio_solve(graph, options);
  if (algorithm == "exact") return exact_solve(graph, options);
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + output_path + "'");
  }
  out << text;
}

struct SolveConfig {
  std::string algorithm;
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;  // reserved; all solvers are deterministic
  long long pair_cap = kDefaultBadPairCap;
  double time_limit = 0;
  bool with_exact = false;
};

int cmd_solve(const SolveConfig& config) {
  ColoredHypergraph graph = parse_hypergraph_file(config.input);

  SolveOptions options;
  options.pair_cap = config.pair_cap;
  options.time_limit_seconds = config.time_limit;

  SolveResult result = run_algorithm(config.algorithm, graph, options);
  SolveReport report = make_report(config.algorithm, graph, result);

  if (config.with_exact) {
    Deadline deadline(config.time_limit);
    ExactMinEccResult exact =
        brute_force_minecc(graph, deadline.active() ? &deadline : nullptr);
    report.exact_value = exact.value;
    if (exact.value > 0) {
      report.ratio_vs_exact = Rational(report.objective, exact.value);
    } else if (report.objective == 0) {
      report.ratio_vs_exact = Rational(1, 1);
    }
  }

  if (config.format == "tsv") {
    write_output(report_to_tsv(report), config.output);
  } else {
    write_output(report_to_json(report).dump(2) + "\n", config.output);
  }
  return 0;
}

struct StatsConfig {
  std::string input;
  std::string output;
  std::string format = "tsv";
  bool bad_pairs = false;
};

int cmd_stats(const StatsConfig& config) {
  ColoredHypergraph graph = parse_hypergraph_file(config.input);
  HypergraphStats stats = compute_stats(graph, config.bad_pairs);

  if (config.format == "json") {
    nlohmann::json json;
    json["schema"] = kReportSchema;
    json["n"] = stats.n;
    json["m"] = stats.m;
    json["k"] = stats.k;
    json["r"] = stats.r;
    json["mu"] = stats.mu;
    json["sum_colors"] = stats.sum_colors;
    json["lp_ecc_constraints"] = stats.lp_ecc_constraints;
    json["lp_cp_constraints"] = stats.lp_cp_constraints;
    if (stats.bad_pairs) {
      json["bad_pairs"] = *stats.bad_pairs;
      json["lp_vc_constraints"] = *stats.lp_vc_constraints;
    }
    write_output(json.dump(2) + "\n", config.output);
  } else {
    std::ostringstream out;
    out << "n\tm\tk\tr\tmu\tsum_colors\tlp_ecc\tlp_cp";
    if (stats.bad_pairs) out << "\tbad_pairs\tlp_vc";
    out << '\n';
    out << stats.n << '\t' << stats.m << '\t' << stats.k << '\t' << stats.r << '\t'
        << stats.mu << '\t' << stats.sum_colors << '\t' << stats.lp_ecc_constraints
        << '\t' << stats.lp_cp_constraints;
    if (stats.bad_pairs) out << '\t' << *stats.bad_pairs << '\t' << *stats.lp_vc_constraints;
    out << '\n';
    write_output(out.str(), config.output);
  }
  return 0;
}

struct VerifyConfig {
  std::string input;
  std::string solution;
};

int cmd_verify(const VerifyConfig& config) {
  ColoredHypergraph graph = parse_hypergraph_file(config.input);

  std::ifstream in(config.solution);
  if (!in) {
    throw ParseError("cannot open solution file '" + config.solution + "'");
  }
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(std::string("solution is not valid JSON: ") + error.what());
  }
  SolveReport report;
  try {
    report = report_from_json(json);
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(std::string("solution does not match the report schema: ") +
                     error.what());
  }

  std::vector<VerifyCheck> checks = verify_report(graph, report);
  int failed = 0;
  for (const VerifyCheck& check : checks) {
    if (check.pass) {
      std::cout << "PASS " << check.name << '\n';
    } else {
      ++failed;
      std::cout << "FAIL " << check.name << ": " << check.detail << '\n';
    }
  }
  if (failed == 0) {
    std::cout << "verify: OK (" << checks.size() << " checks)\n";
    return 0;
  }
  std::cout << "verify: FAILED (" << failed << " of " << checks.size()
            << " checks failed)\n";
  return 1;
}

struct GenConfig {
  int nodes = 0;
  int edges = 0;
  int colors = 2;
  int max_size = 3;
  Weight max_weight = 1;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenConfig& config) {
  ColoredHypergraph graph = generate_random(config.nodes, config.edges, config.colors,
                                            config.max_size, config.max_weight,
                                            config.seed);
  write_output(serialize_hypergraph(graph), config.output);
  return 0;
}

struct BenchConfig {
  std::vector<std::string> inputs;
  std::string algs = "colorpair,localratio";
  int repeats = 5;
  double time_limit = 0;
  long long pair_cap = kDefaultBadPairCap;
  int parallel = 1;
  std::string format = "tsv";
  std::string output;
};

struct BenchCell {
  std::string dataset;
  std::string algorithm;
  std::string status = "ok";  // ok | timed out | guard | error
  std::string message;
  int repeats = 0;
  Weight objective = 0;
  std::optional<Rational> lower_bound;
  std::optional<Rational> ratio;
  double runtime_ms_mean = 0;
  double runtime_ms_stddev = 0;
  std::size_t peak_mem_bytes = 0;
};

std::vector<std::string> expand_glob(const std::string& pattern) {
  namespace fs = std::filesystem;
  if (pattern.find('*') == std::string::npos && pattern.find('?') == std::string::npos) {
    return {pattern};
  }
  fs::path path(pattern);
  fs::path directory = path.parent_path().empty() ? fs::path(".") : path.parent_path();
  std::string name_pattern = path.filename().string();

  // Wildcard match supporting '*' and '?'.
  auto matches = [](const std::string& text, const std::string& pattern) {
    std::size_t t = 0, p = 0, star_p = std::string::npos, star_t = 0;
    while (t < text.size()) {
      if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
        ++t;
        ++p;
      } else if (p < pattern.size() && pattern[p] == '*') {
        star_p = p++;
        star_t = t;
      } else if (star_p != std::string::npos) {
        p = star_p + 1;
        t = ++star_t;
      } else {
        return false;
      }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
  };

  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(directory, ec)) {
    if (entry.is_regular_file() && matches(entry.path().filename().string(), name_pattern)) {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

void run_bench_cell(BenchCell& cell, const ColoredHypergraph& graph,
                    const BenchConfig& config) {
  std::vector<double> runtimes;
  try {
    for (int repeat = 0; repeat < config.repeats; ++repeat) {
      SolveOptions options;
      options.pair_cap = config.pair_cap;
      options.time_limit_seconds = config.time_limit;
      SolveResult result = run_algorithm(cell.algorithm, graph, options);
      runtimes.push_back(result.runtime_ms);
      cell.objective = result.objective;
      if (result.has_lower_bound) {
        cell.lower_bound = result.lower_bound();
        cell.ratio = result.ratio();
      }
      cell.peak_mem_bytes = result.peak_mem_estimate;
    }
  } catch (const TimeoutError&) {
    cell.status = "timed out";
    return;
  } catch (const GuardError& error) {
    cell.status = "guard";
    cell.message = error.what();
    return;
  } catch (const std::exception& error) {
    cell.status = "error";
    cell.message = error.what();
    return;
  }

  cell.repeats = static_cast<int>(runtimes.size());
  double mean = 0;
  for (double value : runtimes) mean += value;
  mean /= runtimes.size();
  double variance = 0;
  for (double value : runtimes) variance += (value - mean) * (value - mean);
  if (runtimes.size() > 1) variance /= (runtimes.size() - 1);
  cell.runtime_ms_mean = mean;
  cell.runtime_ms_stddev = std::sqrt(variance);
}

int cmd_bench(const BenchConfig& config) {
  std::vector<std::string> algorithms;
  {
    std::stringstream stream(config.algs);
    std::string algorithm;
    while (std::getline(stream, algorithm, ',')) {
      if (algorithm.empty()) continue;
      if (std::find(kAlgorithms.begin(), kAlgorithms.end(), algorithm) ==
          kAlgorithms.end()) {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
      }
      algorithms.push_back(algorithm);
    }
    if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  }

  std::vector<std::string> files;
  for (const std::string& pattern : config.inputs) {
    for (std::string& file : expand_glob(pattern)) files.push_back(std::move(file));
  }
  if (files.empty()) throw std::invalid_argument("no input files matched");

  struct Dataset {
    std::string path;
    std::optional<ColoredHypergraph> graph;
    std::string parse_error;
  };
  std::vector<Dataset> datasets;
  for (const std::string& file : files) {
    Dataset dataset;
    dataset.path = file;
    try {
      dataset.graph = parse_hypergraph_file(file);
    } catch (const std::exception& error) {
      dataset.parse_error = error.what();
    }
    datasets.push_back(std::move(dataset));
  }

  std::vector<BenchCell> cells;
  for (const Dataset& dataset : datasets) {
    for (const std::string& algorithm : algorithms) {
      BenchCell cell;
      cell.dataset = std::filesystem::path(dataset.path).filename().string();
      cell.algorithm = algorithm;
      if (!dataset.graph) {
        cell.status = "error";
        cell.message = dataset.parse_error;
      }
      cells.push_back(std::move(cell));
    }
  }

  // Cells run in parallel on private state; each writes only its own slot.
  const int workers = std::max(1, std::min<int>(config.parallel,
                                                static_cast<int>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= cells.size()) break;
      BenchCell& cell = cells[index];
      if (cell.status != "ok") continue;
      const Dataset& dataset = datasets[index / algorithms.size()];
      run_bench_cell(cell, *dataset.graph, config);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (std::thread& thread : threads) thread.join();
  }

  if (config.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchCell& cell : cells) {
      nlohmann::json row;
      row["dataset"] = cell.dataset;
      row["algorithm"] = cell.algorithm;
      row["status"] = cell.status;
      if (!cell.message.empty()) row["message"] = cell.message;
      if (cell.status == "ok") {
        row["repeats"] = cell.repeats;
        row["objective"] = cell.objective;
        if (cell.lower_bound) {
          row["lower_bound"] = {{"num", cell.lower_bound->num},
                                {"den", cell.lower_bound->den}};
          row["ratio"] = {{"num", cell.ratio->num},
                          {"den", cell.ratio->den},
                          {"decimal", cell.ratio->decimal()}};
        }
        row["runtime_ms_mean"] = cell.runtime_ms_mean;
        row["runtime_ms_stddev"] = cell.runtime_ms_stddev;
        row["peak_mem_estimate_bytes"] = cell.peak_mem_bytes;
      }
      rows.push_back(std::move(row));
    }
    nlohmann::json json{{"schema", kReportSchema}, {"cells", rows}};
    write_output(json.dump(2) + "\n", config.output);
  } else {
    std::ostringstream out;
    out << "dataset\talgorithm\tstatus\trepeats\tobjective\tratio\truntime_ms_mean"
        << "\truntime_ms_stddev\tpeak_mem_estimate_bytes\n";
    for (const BenchCell& cell : cells) {
      out << cell.dataset << '\t' << cell.algorithm << '\t' << cell.status << '\t';
      if (cell.status == "ok") {
        out << cell.repeats << '\t' << cell.objective << '\t'
            << (cell.ratio ? cell.ratio->decimal() : "-") << '\t' << cell.runtime_ms_mean
            << '\t' << cell.runtime_ms_stddev << '\t' << cell.peak_mem_bytes;
      } else {
        out << "-\t-\t-\t-\t-\t-";
      }
      out << '\n';
    }
    write_output(out.str(), config.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum edge-colored clustering solvers and tools"};
  app.require_subcommand(1);

  SolveConfig solve_config;
  CLI::App* solve = app.add_subcommand("solve", "run a solver and emit a report");
  solve->add_option("--alg", solve_config.algorithm, "algorithm")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--input", solve_config.input, "instance file")->required();
  solve->add_option("--output", solve_config.output, "report path (default stdout)");
  solve->add_option("--format", solve_config.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  solve->add_option("--seed", solve_config.seed, "reserved for randomized solvers");
  solve->add_option("--pair-cap", solve_config.pair_cap, "bad-pair enumeration cap");
  solve->add_option("--time-limit", solve_config.time_limit, "time limit in seconds");
  solve->add_flag("--with-exact", solve_config.with_exact,
                  "also run the exact oracle and report the empirical ratio");

  StatsConfig stats_config;
  CLI::App* stats = app.add_subcommand("stats", "instance statistics");
  stats->add_option("--input", stats_config.input, "instance file")->required();
  stats->add_option("--output", stats_config.output, "output path (default stdout)");
  stats->add_option("--format", stats_config.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  stats->add_flag("--bad-pairs", stats_config.bad_pairs,
                  "also count bad edge pairs (superlinear)");

  VerifyConfig verify_config;
  CLI::App* verify = app.add_subcommand("verify", "re-check a solve report");
  verify->add_option("--input", verify_config.input, "instance file")->required();
  verify->add_option("--solution", verify_config.solution, "JSON report from solve")
      ->required();

  GenConfig gen_config;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--nodes", gen_config.nodes, "node count")->required();
  gen->add_option("--edges", gen_config.edges, "edge count")->required();
  gen->add_option("--colors", gen_config.colors, "color count");
  gen->add_option("--max-size", gen_config.max_size, "maximum edge size");
  gen->add_option("--max-weight", gen_config.max_weight, "maximum edge weight");
  gen->add_option("--seed", gen_config.seed, "random seed");
  gen->add_option("--output", gen_config.output, "output path (default stdout)");

  BenchConfig bench_config;
  CLI::App* bench = app.add_subcommand("bench", "benchmark solvers over instances");
  bench->add_option("--inputs", bench_config.inputs, "instance files or globs")
      ->required()
      ->expected(-1);
  bench->add_option("--algs", bench_config.algs, "comma-separated algorithm list");
  bench->add_option("--repeats", bench_config.repeats, "runs per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--time-limit", bench_config.time_limit, "per-run limit in seconds");
  bench->add_option("--pair-cap", bench_config.pair_cap, "bad-pair enumeration cap");
  bench->add_option("--parallel", bench_config.parallel, "worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_config.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  bench->add_option("--output", bench_config.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_config);
    if (stats->parsed()) return cmd_stats(stats_config);
    if (verify->parsed()) return cmd_verify(verify_config);
    if (gen->parsed()) return cmd_gen(gen_config);
    if (bench->parsed()) return cmd_bench(bench_config);
  } catch (const TimeoutError& error) {
    std::cerr << "error: timeout: " << error.what() << '\n';
    return 3;
  } catch (const GuardError& error) {
    std::cerr << "error: guard: " << error.what() << '\n';
    return 3;
  } catch (const ParseError& error) {
    std::cerr << "error: parse: " << error.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: invalid argument: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
