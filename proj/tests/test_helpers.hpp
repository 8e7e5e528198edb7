#ifndef MINECC_TESTS_HELPERS_HPP
#define MINECC_TESTS_HELPERS_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minecc/hypergraph.hpp"

namespace minecc::testing {

// Toy instance used throughout: three nodes, e1={1,2} color 1, e2={2,3}
// color 2, e3={1,3} color 1, unit weights. Optimum deletes e2.
inline ColoredHypergraph make_t1() {
  std::istringstream in(
      "minecc 3 3 2\n"
      "1 1 1 2\n"
      "2 1 2 3\n"
      "1 1 1 3\n");
  return parse_hypergraph(in);
}

// Small random instance family shared by property tests: |V| in 2..8,
// |E| in 0..10, k in 1..4, weights 1..5.
inline ColoredHypergraph small_random_instance(std::uint64_t seed) {
  std::mt19937_64 params(seed * 7919 + 17);
  int n = 2 + static_cast<int>(params() % 7);
  int m = static_cast<int>(params() % 11);
  int k = 1 + static_cast<int>(params() % 4);
  int max_size = 1 + static_cast<int>(params() % std::min(n, 4));
  return generate_random(n, m, k, max_size, 5, seed);
}

inline EdgeDeletionSet deletion_from_original_ids(const ColoredHypergraph& graph,
                                                  const std::vector<int>& original_ids) {
  EdgeDeletionSet deleted(graph.edge_count());
  for (int id : original_ids) deleted.insert(graph.index_of_original_id(id));
  return deleted;
}

inline std::vector<int> original_ids(const ColoredHypergraph& graph,
                                     const EdgeDeletionSet& deleted) {
  std::vector<int> ids;
  for (int e : deleted.edge_indexes()) ids.push_back(graph.edge(e).original_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace minecc::testing

#endif  // MINECC_TESTS_HELPERS_HPP
