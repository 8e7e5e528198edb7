// Integer-capacity maximum s-t flow (FIFO push-relabel with gap and global
// relabeling) and canonical min-cut extraction.

#ifndef MINECC_MAXFLOW_HPP
#define MINECC_MAXFLOW_HPP

#include <cstddef>
#include <vector>

#include "minecc/common.hpp"

namespace minecc {

// Directed capacitated graph. Arcs are stored in pairs: forward arc a lives
// at slot 2a and its zero-capacity reverse at slot 2a+1 (slot ^ 1).
// "Infinite" capacity is the builder's responsibility: use
// (sum of all finite capacities) + 1 so that an infinite arc can never sit
// in a finite minimum cut and all arithmetic stays exact.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  // Adds a directed arc and its reverse; returns the forward arc index.
  int add_arc(int tail, int head, Weight capacity);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(capacity_.size() / 2); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int arc_tail(int arc) const { return tail_[2 * arc]; }
  int arc_head(int arc) const { return head_[2 * arc]; }
  Weight arc_capacity(int arc) const { return capacity_[2 * arc]; }

  std::size_t memory_bytes() const;

  // Slot-level views used by the solver and the cut extraction.
  int slot_count() const { return static_cast<int>(capacity_.size()); }
  int slot_head(int slot) const { return head_[slot]; }
  int slot_tail(int slot) const { return tail_[slot]; }
  Weight slot_capacity(int slot) const { return capacity_[slot]; }
  const std::vector<int>& out_slots(int node) const { return adjacency_[node]; }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<int> head_;
  std::vector<int> tail_;
  std::vector<Weight> capacity_;
  std::vector<std::vector<int>> adjacency_;
};

struct FlowResult {
  Weight value = 0;
  // Residual capacity per slot: cap - flow on forward slots, flow on reverse.
  std::vector<Weight> residual;
  WorkCounters work;
  std::size_t memory_bytes = 0;
};

struct CutResult {
  Weight value = 0;
  std::vector<char> in_source_side;  // size node_count, source side S
};

// Exact maximum flow. The result's residual view satisfies conservation at
// every node except the source and sink.
FlowResult max_flow(const FlowNetwork& net, const Deadline* deadline = nullptr);

// Canonical minimum cut: S = nodes reachable from the source in the residual
// graph. The cut value equals the flow value (checked; throws on mismatch).
CutResult min_cut_source_side(const FlowNetwork& net, const FlowResult& flow);

}  // namespace minecc

#endif  // MINECC_MAXFLOW_HPP
