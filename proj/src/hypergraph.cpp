#include "minecc/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace minecc {

std::vector<int> EdgeDeletionSet::edge_indexes() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int e = 0; e < static_cast<int>(deleted_.size()); ++e) {
    if (deleted_[e]) out.push_back(e);
  }
  return out;
}

ColoredHypergraph ColoredHypergraph::from_edges(int node_count, int color_count,
                                                std::vector<HyperEdge> edges,
                                                bool unweighted_format) {
  if (node_count < 0 || color_count < 0) {
    throw std::invalid_argument("node and color counts must be nonnegative");
  }

  ColoredHypergraph graph;
  graph.node_count_ = node_count;
  graph.color_count_ = color_count;
  graph.unweighted_format_ = unweighted_format;

  int next_id = 0;
  for (HyperEdge& e : edges) {
    if (e.original_id == 0) e.original_id = next_id + 1;
    ++next_id;
    if (e.color < 1 || e.color > color_count) {
      throw std::invalid_argument("edge color out of range");
    }
    if (e.weight < 0) {
      throw std::invalid_argument("negative edge weight");
    }
    if (unweighted_format && e.weight != 1) {
      throw std::invalid_argument("unweighted instance with non-unit weight");
    }
    if (e.nodes.empty()) {
      throw std::invalid_argument("edge with no nodes");
    }
    std::sort(e.nodes.begin(), e.nodes.end());
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
      if (e.nodes[i] < 1 || e.nodes[i] > node_count) {
        throw std::invalid_argument("node out of range");
      }
      if (i > 0 && e.nodes[i] == e.nodes[i - 1]) {
        throw std::invalid_argument("repeated node in edge");
      }
    }
    if (graph.total_weight_ > kMaxTotalWeight - e.weight) {
      throw std::invalid_argument("total weight exceeds supported range");
    }
    graph.total_weight_ += e.weight;
    graph.mu_ += static_cast<long long>(e.nodes.size());
    graph.max_edge_size_ = std::max(graph.max_edge_size_, static_cast<int>(e.nodes.size()));
  }

  std::sort(edges.begin(), edges.end(), [](const HyperEdge& a, const HyperEdge& b) {
    return a.color != b.color ? a.color < b.color : a.original_id < b.original_id;
  });
  graph.edges_ = std::move(edges);

  graph.original_to_index_.assign(graph.edges_.size() + 1, -1);
  graph.incidence_.assign(node_count, {});
  graph.node_colors_.assign(node_count, {});
  std::vector<char> color_seen(color_count + 1, 0);
  for (int e = 0; e < static_cast<int>(graph.edges_.size()); ++e) {
    const HyperEdge& edge = graph.edges_[e];
    int oid = edge.original_id;
    if (oid < 1 || oid > static_cast<int>(graph.edges_.size()) ||
        graph.original_to_index_[oid] != -1) {
      throw std::invalid_argument("edge original ids must be a permutation of 1..m");
    }
    graph.original_to_index_[oid] = e;
    if (!color_seen[edge.color]) {
      color_seen[edge.color] = 1;
      ++graph.colors_present_;
    }
    for (int u : edge.nodes) {
      graph.incidence_[u - 1].push_back(e);
      auto& colors = graph.node_colors_[u - 1];
      if (std::find(colors.begin(), colors.end(), edge.color) == colors.end()) {
        colors.push_back(edge.color);
      }
    }
  }
  for (auto& colors : graph.node_colors_) {
    std::sort(colors.begin(), colors.end());
  }
  return graph;
}

int ColoredHypergraph::index_of_original_id(int original_id) const {
  if (original_id < 1 || original_id >= static_cast<int>(original_to_index_.size())) {
    return -1;
  }
  return original_to_index_[original_id];
}

namespace {

bool parse_int64(std::string_view token, std::int64_t& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_significant(const std::vector<std::string_view>& tokens) {
  return !tokens.empty() && tokens[0][0] != '#';
}

}  // namespace

ColoredHypergraph parse_hypergraph(std::istream& input) {
  std::string line;
  int line_number = 0;

  std::int64_t node_count = -1, edge_count = -1, color_count = -1;
  bool unweighted = false;
  bool header_seen = false;
  std::vector<HyperEdge> edges;
  Weight running_weight = 0;

  while (std::getline(input, line)) {
    ++line_number;
    auto tokens = split_tokens(line);
    if (!is_significant(tokens)) continue;

    if (!header_seen) {
      if (tokens[0] != "minecc" || tokens.size() < 4 || tokens.size() > 5) {
        throw ParseError("malformed header: expected 'minecc <|V|> <|E|> <k> [unweighted]'",
                         line_number);
      }
      if (!parse_int64(tokens[1], node_count) || !parse_int64(tokens[2], edge_count) ||
          !parse_int64(tokens[3], color_count) || node_count < 0 || edge_count < 0 ||
          color_count < 0) {
        throw ParseError("malformed header: counts must be nonnegative integers",
                         line_number);
      }
      constexpr long long kMaxCount = 2'000'000'000;
      if (node_count > kMaxCount || edge_count > kMaxCount || color_count > kMaxCount) {
        throw ParseError("malformed header: count too large", line_number);
      }
      if (tokens.size() == 5) {
        if (tokens[4] != "unweighted") {
          throw ParseError("malformed header: unexpected token '" + std::string(tokens[4]) + "'",
                           line_number);
        }
        unweighted = true;
      }
      header_seen = true;
      edges.reserve(static_cast<std::size_t>(edge_count));
      continue;
    }

    if (static_cast<long long>(edges.size()) == edge_count) {
      throw ParseError("trailing content after the declared edge list", line_number);
    }

    const std::size_t min_tokens = unweighted ? 2 : 3;
    if (tokens.size() < min_tokens) {
      throw ParseError("malformed edge line: expected '<color> " +
                           std::string(unweighted ? "" : "<weight> ") +
                           "<node_1> ... <node_s>'",
                       line_number);
    }

    HyperEdge edge;
    edge.original_id = static_cast<int>(edges.size()) + 1;

    std::int64_t color = 0;
    if (!parse_int64(tokens[0], color)) {
      throw ParseError("malformed edge line: color is not an integer", line_number);
    }
    if (color < 1 || color > color_count) {
      throw ParseError("color out of range", line_number);
    }
    edge.color = static_cast<int>(color);

    std::size_t node_start = 1;
    if (unweighted) {
      edge.weight = 1;
    } else {
      std::int64_t weight = 0;
      if (!parse_int64(tokens[1], weight)) {
        throw ParseError("malformed edge line: weight is not an integer", line_number);
      }
      if (weight < 0) {
        throw ParseError("negative weight", line_number);
      }
      edge.weight = weight;
      node_start = 2;
    }
    if (running_weight > kMaxTotalWeight - edge.weight) {
      throw ParseError("total weight exceeds supported range", line_number);
    }
    running_weight += edge.weight;

    edge.nodes.reserve(tokens.size() - node_start);
    for (std::size_t i = node_start; i < tokens.size(); ++i) {
      std::int64_t node = 0;
      if (!parse_int64(tokens[i], node)) {
        throw ParseError("malformed edge line: node id is not an integer", line_number);
      }
      if (node < 1 || node > node_count) {
        throw ParseError("node out of range", line_number);
      }
      edge.nodes.push_back(static_cast<int>(node));
    }
    std::sort(edge.nodes.begin(), edge.nodes.end());
    for (std::size_t i = 1; i < edge.nodes.size(); ++i) {
      if (edge.nodes[i] == edge.nodes[i - 1]) {
        throw ParseError("repeated node in edge", line_number);
      }
    }
    edges.push_back(std::move(edge));
  }

  if (!header_seen) {
    throw ParseError("malformed header: empty input", line_number);
  }
  if (static_cast<long long>(edges.size()) != edge_count) {
    throw ParseError("unexpected end of input: expected " + std::to_string(edge_count) +
                         " edge lines, found " + std::to_string(edges.size()),
                     line_number);
  }

  return ColoredHypergraph::from_edges(static_cast<int>(node_count),
                                       static_cast<int>(color_count), std::move(edges),
                                       unweighted);
}

ColoredHypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open input file '" + path + "'");
  }
  return parse_hypergraph(in);
}

void serialize_hypergraph(const ColoredHypergraph& graph, std::ostream& out) {
  out << "minecc " << graph.node_count() << ' ' << graph.edge_count() << ' '
      << graph.color_count();
  if (graph.unweighted_format()) out << " unweighted";
  out << '\n';
  for (const HyperEdge& edge : graph.edges()) {
    out << edge.color;
    if (!graph.unweighted_format()) out << ' ' << edge.weight;
    for (int u : edge.nodes) out << ' ' << u;
    out << '\n';
  }
}

std::string serialize_hypergraph(const ColoredHypergraph& graph) {
  std::ostringstream out;
  serialize_hypergraph(graph, out);
  return out.str();
}

namespace {

// Visits every bad pair exactly once (at the smallest shared node) in
// ascending node order. The callback returns false to abort the scan.
template <typename Callback>
void for_each_bad_pair(const ColoredHypergraph& graph, Callback&& visit) {
  for (int u = 1; u <= graph.node_count(); ++u) {
    const std::vector<int>& incident = graph.incident_edges(u);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const HyperEdge& ei = graph.edge(incident[i]);
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const HyperEdge& ej = graph.edge(incident[j]);
        if (ei.color == ej.color) continue;
        // Count the pair only where the two node lists first intersect.
        int first_common = 0;
        std::size_t a = 0, b = 0;
        while (a < ei.nodes.size() && b < ej.nodes.size()) {
          if (ei.nodes[a] == ej.nodes[b]) {
            first_common = ei.nodes[a];
            break;
          }
          if (ei.nodes[a] < ej.nodes[b]) ++a; else ++b;
        }
        if (first_common != u) continue;
        if (!visit(incident[i], incident[j])) return;
      }
    }
  }
}

}  // namespace

std::vector<BadPair> enumerate_bad_pairs(const ColoredHypergraph& graph,
                                         long long pair_cap) {
  std::vector<BadPair> pairs;
  bool capped = false;
  for_each_bad_pair(graph, [&](int e, int f) {
    if (static_cast<long long>(pairs.size()) >= pair_cap) {
      capped = true;
      return false;
    }
    pairs.push_back(e < f ? BadPair{e, f} : BadPair{f, e});
    return true;
  });
  if (capped) {
    throw GuardError("bad-pair explosion: |B| exceeds cap of " + std::to_string(pair_cap) +
                     " pairs");
  }
  std::sort(pairs.begin(), pairs.end(), [](const BadPair& a, const BadPair& b) {
    return a.e != b.e ? a.e < b.e : a.f < b.f;
  });
  return pairs;
}

long long count_bad_pairs(const ColoredHypergraph& graph) {
  long long count = 0;
  for_each_bad_pair(graph, [&](int, int) {
    ++count;
    return true;
  });
  return count;
}

HypergraphStats compute_stats(const ColoredHypergraph& graph, bool count_pairs) {
  HypergraphStats stats;
  stats.n = graph.node_count();
  stats.m = graph.edge_count();
  stats.k = graph.color_count();
  stats.r = graph.max_edge_size();
  stats.mu = graph.size_mu();
  long long pair_slots = 0;
  for (int u = 1; u <= graph.node_count(); ++u) {
    long long c = static_cast<long long>(graph.node_colors(u).size());
    stats.sum_colors += c;
    pair_slots += c * (c - 1) / 2;
  }
  stats.lp_ecc_constraints = stats.mu + stats.n;
  stats.lp_cp_constraints = stats.mu + pair_slots;
  if (count_pairs) {
    stats.bad_pairs = count_bad_pairs(graph);
    stats.lp_vc_constraints = stats.bad_pairs;
  }
  return stats;
}

ColoredHypergraph generate_random(int node_count, int edge_count, int color_count,
                                  int max_size, Weight max_weight, std::uint64_t seed) {
  if (node_count < 1 || edge_count < 0 || color_count < 1 || max_size < 1 ||
      max_weight < 1) {
    throw std::invalid_argument("generator parameters must be positive");
  }
  if (max_size > node_count) {
    throw std::invalid_argument("max_size exceeds node count");
  }

  // mt19937_64 with modulo sampling: fully specified by the standard, so the
  // same seed yields the same instance on every platform.
  std::mt19937_64 engine(seed);
  auto draw = [&engine](std::uint64_t bound) -> std::uint64_t { return engine() % bound; };

  std::vector<int> pool(node_count);
  for (int i = 0; i < node_count; ++i) pool[i] = i + 1;

  std::vector<HyperEdge> edges;
  edges.reserve(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    HyperEdge edge;
    edge.original_id = e + 1;
    int size = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(max_size)));
    for (int j = 0; j < size; ++j) {
      std::size_t pick = j + draw(static_cast<std::uint64_t>(node_count - j));
      std::swap(pool[j], pool[pick]);
      edge.nodes.push_back(pool[j]);
    }
    edge.color = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(color_count)));
    edge.weight = 1 + static_cast<Weight>(draw(static_cast<std::uint64_t>(max_weight)));
    edges.push_back(std::move(edge));
  }
  return ColoredHypergraph::from_edges(node_count, color_count, std::move(edges));
}

bool is_conflict_free(const ColoredHypergraph& graph, const EdgeDeletionSet& deleted) {
  for (int u = 1; u <= graph.node_count(); ++u) {
    int surviving_color = 0;
    for (int e : graph.incident_edges(u)) {
      if (deleted.contains(e)) continue;
      int color = graph.edge(e).color;
      if (surviving_color == 0) {
        surviving_color = color;
      } else if (surviving_color != color) {
        return false;
      }
    }
  }
  return true;
}

NodeColoring coloring_from_deletions(const ColoredHypergraph& graph,
                                     const EdgeDeletionSet& deleted) {
  NodeColoring coloring;
  coloring.color_of.assign(graph.node_count(), 0);
  for (int u = 1; u <= graph.node_count(); ++u) {
    int surviving_color = 0;
    for (int e : graph.incident_edges(u)) {
      if (deleted.contains(e)) continue;
      int color = graph.edge(e).color;
      if (surviving_color == 0) {
        surviving_color = color;
      } else if (surviving_color != color) {
        throw std::invalid_argument("conflicting surviving colors at node " +
                                    std::to_string(u));
      }
    }
    if (surviving_color == 0) {
      const std::vector<int>& colors = graph.node_colors(u);
      surviving_color = colors.empty() ? 1 : colors.front();
    }
    coloring.color_of[u - 1] = surviving_color;
  }
  return coloring;
}

Weight unsatisfied_weight(const ColoredHypergraph& graph, const NodeColoring& coloring) {
  if (static_cast<int>(coloring.color_of.size()) != graph.node_count()) {
    throw std::invalid_argument("coloring size does not match node count");
  }
  Weight total = 0;
  for (const HyperEdge& edge : graph.edges()) {
    for (int u : edge.nodes) {
      if (coloring.color_of[u - 1] != edge.color) {
        total += edge.weight;
        break;
      }
    }
  }
  return total;
}

Weight deletion_weight(const ColoredHypergraph& graph, const EdgeDeletionSet& deleted) {
  Weight total = 0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (deleted.contains(e)) total += graph.edge(e).weight;
  }
  return total;
}

}  // namespace minecc
