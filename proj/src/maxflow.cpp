#include "minecc/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace minecc {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count < 2 || source < 0 || source >= node_count || sink < 0 ||
      sink >= node_count || source == sink) {
    throw std::invalid_argument("flow network needs distinct source and sink nodes");
  }
  adjacency_.assign(node_count, {});
}

int FlowNetwork::add_arc(int tail, int head, Weight capacity) {
  if (tail < 0 || tail >= node_count_ || head < 0 || head >= node_count_) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (capacity < 0) {
    throw std::invalid_argument("negative arc capacity");
  }
  int slot = static_cast<int>(capacity_.size());
  head_.push_back(head);
  tail_.push_back(tail);
  capacity_.push_back(capacity);
  adjacency_[tail].push_back(slot);
  head_.push_back(tail);
  tail_.push_back(head);
  capacity_.push_back(0);
  adjacency_[head].push_back(slot + 1);
  return slot / 2;
}

std::size_t FlowNetwork::memory_bytes() const {
  std::size_t bytes = head_.capacity() * sizeof(int) + tail_.capacity() * sizeof(int) +
                      capacity_.capacity() * sizeof(Weight);
  for (const auto& list : adjacency_) bytes += list.capacity() * sizeof(int);
  bytes += adjacency_.capacity() * sizeof(std::vector<int>);
  return bytes;
}

namespace {

// FIFO push-relabel. Residual state is private to one call, so distinct
// networks can be solved concurrently.
class PushRelabel {
 public:
  PushRelabel(const FlowNetwork& net, const Deadline* deadline)
      : net_(net),
        deadline_(deadline),
        n_(net.node_count()),
        residual_(net.slot_count()),
        height_(n_, 0),
        excess_(n_, 0),
        current_(n_, 0),
        in_queue_(n_, 0),
        height_count_(2 * n_ + 1, 0) {
    for (int slot = 0; slot < net.slot_count(); ++slot) {
      residual_[slot] = net.slot_capacity(slot);
    }
  }

  FlowResult run() {
    const int s = net_.source();
    const int t = net_.sink();

    global_relabel();
    height_[s] = n_;

    for (int slot : net_.out_slots(s)) {
      if ((slot & 1) == 0 && residual_[slot] > 0) {
        push(slot);
      }
    }

    std::uint64_t steps = 0;
    while (!queue_.empty()) {
      int u = queue_.front();
      queue_.pop_front();
      in_queue_[u] = 0;
      discharge(u);
      if (deadline_ && (++steps & 0x3FFF) == 0) deadline_->check("max-flow solve");
    }

    FlowResult result;
    result.value = excess_[t];
    result.residual = std::move(residual_);
    result.work["flow_pushes"] = pushes_;
    result.work["flow_relabels"] = relabels_;
    result.work["flow_global_relabels"] = global_relabels_;
    result.memory_bytes = result.residual.capacity() * sizeof(Weight) +
                          static_cast<std::size_t>(n_) * (3 * sizeof(Weight)) +
                          net_.memory_bytes();
    return result;
  }

 private:
  void push(int slot) {
    int u = net_.slot_tail(slot);
    int v = net_.slot_head(slot);
    Weight amount = u == net_.source() ? residual_[slot]
                                       : std::min(excess_[u], residual_[slot]);
    residual_[slot] -= amount;
    residual_[slot ^ 1] += amount;
    if (u != net_.source()) excess_[u] -= amount;
    excess_[v] += amount;
    ++pushes_;
    if (v != net_.source() && v != net_.sink() && excess_[v] > 0 && !in_queue_[v]) {
      in_queue_[v] = 1;
      queue_.push_back(v);
    }
  }

  void discharge(int u) {
    const auto& slots = net_.out_slots(u);
    while (excess_[u] > 0) {
      if (current_[u] == static_cast<int>(slots.size())) {
        relabel(u);
        current_[u] = 0;
        if (height_[u] > 2 * n_) break;  // unreachable excess; cannot happen with a preflow
        continue;
      }
      int slot = slots[current_[u]];
      int v = net_.slot_head(slot);
      if (residual_[slot] > 0 && height_[u] == height_[v] + 1) {
        push(slot);
      } else {
        ++current_[u];
      }
    }
  }

  void relabel(int u) {
    int old_height = height_[u];
    int best = 2 * n_ + 1;
    for (int slot : net_.out_slots(u)) {
      if (residual_[slot] > 0) best = std::min(best, height_[net_.slot_head(slot)] + 1);
    }
    if (old_height <= 2 * n_) --height_count_[old_height];
    height_[u] = best;
    if (best <= 2 * n_) ++height_count_[best];
    ++relabels_;

    // Gap heuristic: once a level below n empties, everything strictly above
    // it (and below n) can no longer reach the sink.
    if (old_height < n_ && height_count_[old_height] == 0) {
      for (int v = 0; v < n_; ++v) {
        if (v == net_.source()) continue;
        if (height_[v] > old_height && height_[v] < n_) {
          --height_count_[height_[v]];
          height_[v] = n_ + 1;
          ++height_count_[n_ + 1];
          current_[v] = 0;
        }
      }
    }

    if (relabels_ - last_global_relabel_ >= static_cast<std::uint64_t>(n_)) {
      global_relabel();
      last_global_relabel_ = relabels_;
    }
  }

  // Exact residual distances: to the sink for nodes that can still reach it,
  // n + distance-to-source for the rest. Restarts every current-arc pointer.
  void global_relabel() {
    std::fill(height_.begin(), height_.end(), 2 * n_ + 1);
    std::fill(height_count_.begin(), height_count_.end(), 0);
    std::fill(current_.begin(), current_.end(), 0);

    auto backward_bfs = [this](int root, int base) {
      std::deque<int> bfs;
      height_[root] = base;
      bfs.push_back(root);
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int slot : net_.out_slots(v)) {
          // Arc (u -> v) has residual capacity exactly when the paired slot
          // leaving v still admits flow back.
          int u = net_.slot_head(slot);
          if (height_[u] <= 2 * n_ || residual_[slot ^ 1] <= 0) continue;
          height_[u] = height_[v] + 1;
          bfs.push_back(u);
        }
      }
    };

    backward_bfs(net_.sink(), 0);
    if (height_[net_.source()] <= 2 * n_) height_[net_.source()] = 2 * n_ + 1;
    backward_bfs(net_.source(), n_);

    for (int v = 0; v < n_; ++v) {
      if (height_[v] <= 2 * n_) ++height_count_[height_[v]];
    }
    ++global_relabels_;
  }

  const FlowNetwork& net_;
  const Deadline* deadline_;
  int n_;
  std::vector<Weight> residual_;
  std::vector<int> height_;
  std::vector<Weight> excess_;
  std::vector<int> current_;
  std::vector<char> in_queue_;
  std::vector<int> height_count_;
  std::deque<int> queue_;
  std::uint64_t pushes_ = 0;
  std::uint64_t relabels_ = 0;
  std::uint64_t global_relabels_ = 0;
  std::uint64_t last_global_relabel_ = 0;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net, const Deadline* deadline) {
  return PushRelabel(net, deadline).run();
}

CutResult min_cut_source_side(const FlowNetwork& net, const FlowResult& flow) {
  CutResult cut;
  cut.in_source_side.assign(net.node_count(), 0);

  std::deque<int> queue;
  cut.in_source_side[net.source()] = 1;
  queue.push_back(net.source());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int slot : net.out_slots(u)) {
      int v = net.slot_head(slot);
      if (!cut.in_source_side[v] && flow.residual[slot] > 0) {
        cut.in_source_side[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (cut.in_source_side[net.sink()]) {
    throw std::logic_error("sink reachable in residual graph after max flow");
  }

  for (int arc = 0; arc < net.arc_count(); ++arc) {
    if (cut.in_source_side[net.arc_tail(arc)] && !cut.in_source_side[net.arc_head(arc)]) {
      cut.value += net.arc_capacity(arc);
    }
  }
  if (cut.value != flow.value) {
    throw std::logic_error("min-cut value does not match max-flow value");
  }
  return cut;
}

}  // namespace minecc
