// Edge-colored hypergraph data model, canonical file format, statistics,
// bad-pair machinery, synthetic generator, and solution verification helpers.

#ifndef MINECC_HYPERGRAPH_HPP
#define MINECC_HYPERGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minecc/common.hpp"

namespace minecc {

struct HyperEdge {
  int color = 0;           // 1..k
  Weight weight = 0;       // >= 0
  std::vector<int> nodes;  // 1-based node ids, strictly increasing
  int original_id = 0;     // 1-based position in the input file, kept for reporting
};

// A pair of edges with different colors sharing at least one node.
// Stored as canonical edge indexes with e < f.
struct BadPair {
  int e = 0;
  int f = 0;
  bool operator==(const BadPair&) const = default;
};

// Total node coloring; color_of[u-1] is the color of node u.
struct NodeColoring {
  std::vector<int> color_of;
};

// Subset of edges, addressed by canonical edge index.
class EdgeDeletionSet {
 public:
  EdgeDeletionSet() = default;
  explicit EdgeDeletionSet(int edge_count) : deleted_(edge_count, 0) {}

  bool contains(int e) const { return deleted_[e] != 0; }
  void insert(int e) {
    if (!deleted_[e]) {
      deleted_[e] = 1;
      ++count_;
    }
  }
  int count() const { return count_; }
  int universe_size() const { return static_cast<int>(deleted_.size()); }
  std::vector<int> edge_indexes() const;  // ascending

 private:
  std::vector<char> deleted_;
  int count_ = 0;
};

struct HypergraphStats {
  long long n = 0;
  long long m = 0;
  long long k = 0;
  long long r = 0;
  long long mu = 0;
  long long sum_colors = 0;  // sum over nodes of |C(u)|
  std::optional<long long> bad_pairs;
  long long lp_ecc_constraints = 0;                // mu + n
  std::optional<long long> lp_vc_constraints;      // |B|, set with bad_pairs
  long long lp_cp_constraints = 0;                 // mu + sum_u C(|C(u)|, 2)
};

// Immutable after construction; safe to share across threads.
// Edges are globally sorted by (color, original id); incidence lists E(u)
// inherit that order, which the two-pointer solver relies on.
class ColoredHypergraph {
 public:
  ColoredHypergraph() = default;

  // Validates, sorts edge node lists and the edge list itself, and builds
  // incidence and per-node color lists. Edges with original_id == 0 are
  // assigned ids by input position. Throws std::invalid_argument.
  static ColoredHypergraph from_edges(int node_count, int color_count,
                                      std::vector<HyperEdge> edges,
                                      bool unweighted_format = false);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return color_count_; }
  bool unweighted_format() const { return unweighted_format_; }

  const HyperEdge& edge(int e) const { return edges_[e]; }
  const std::vector<HyperEdge>& edges() const { return edges_; }

  // Edge indexes incident to node u (1-based), sorted by (color, original id).
  const std::vector<int>& incident_edges(int u) const { return incidence_[u - 1]; }
  // Sorted distinct colors of edges incident to node u.
  const std::vector<int>& node_colors(int u) const { return node_colors_[u - 1]; }

  long long size_mu() const { return mu_; }
  int max_edge_size() const { return max_edge_size_; }
  Weight total_weight() const { return total_weight_; }
  // Number of distinct colors actually used by edges (<= color_count()).
  int colors_present() const { return colors_present_; }
  // Canonical index of the edge with the given original id, or -1.
  int index_of_original_id(int original_id) const;

 private:
  int node_count_ = 0;
  int color_count_ = 0;
  bool unweighted_format_ = false;
  std::vector<HyperEdge> edges_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::vector<int>> node_colors_;
  std::vector<int> original_to_index_;
  long long mu_ = 0;
  int max_edge_size_ = 0;
  Weight total_weight_ = 0;
  int colors_present_ = 0;
};

// Canonical text format:
//   minecc <|V|> <|E|> <k> [unweighted]
//   <color> [<weight>] <node_1> ... <node_s>      (one line per edge)
// '#' begins a comment line; blank lines are ignored. Nodes are 1-based and
// colors lie in 1..k. The weight column is present unless the header carries
// the `unweighted` flag (then every weight is 1).
ColoredHypergraph parse_hypergraph(std::istream& input);
ColoredHypergraph parse_hypergraph_file(const std::string& path);

// Emits edges in canonical (color, id) order; parse/serialize round-trips
// byte-identically on canonical-form files.
void serialize_hypergraph(const ColoredHypergraph& graph, std::ostream& out);
std::string serialize_hypergraph(const ColoredHypergraph& graph);

// All count fields are exact. Bad pairs are counted (deduplicated) only when
// count_pairs is set, since that work is superlinear.
HypergraphStats compute_stats(const ColoredHypergraph& graph, bool count_pairs = false);

// Exact deduplicated bad-pair set, sorted by (e, f). Throws GuardError when
// the set would exceed pair_cap entries.
std::vector<BadPair> enumerate_bad_pairs(const ColoredHypergraph& graph,
                                         long long pair_cap = kDefaultBadPairCap);

// Deduplicated |B| without materializing the set.
long long count_bad_pairs(const ColoredHypergraph& graph);

// Uniform random instance; identical seeds give identical instances.
// Each edge has uniform size in [1, max_size], distinct uniform nodes,
// uniform color in [1, k], and uniform weight in [1, max_weight].
ColoredHypergraph generate_random(int node_count, int edge_count, int color_count,
                                  int max_size, Weight max_weight,
                                  std::uint64_t seed);

// True iff for every node all surviving incident edges share one color.
bool is_conflict_free(const ColoredHypergraph& graph, const EdgeDeletionSet& deleted);

// Colors every node by its surviving incident edges; a node without
// survivors gets the smallest color in C(u), or color 1 when C(u) is empty.
// Requires is_conflict_free(graph, deleted); throws std::invalid_argument
// when surviving colors conflict at some node.
NodeColoring coloring_from_deletions(const ColoredHypergraph& graph,
                                     const EdgeDeletionSet& deleted);

// Total weight of edges containing a node whose color differs from the edge's.
Weight unsatisfied_weight(const ColoredHypergraph& graph, const NodeColoring& coloring);

Weight deletion_weight(const ColoredHypergraph& graph, const EdgeDeletionSet& deleted);

}  // namespace minecc

#endif  // MINECC_HYPERGRAPH_HPP
