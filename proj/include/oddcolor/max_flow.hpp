#pragma once

#include <cstdint>
#include <vector>

namespace oddcolor {

/// Dinic's algorithm on integer capacities. Arcs are added once; the
/// reverse residual arc is created implicitly.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(int num_nodes);

  /// Returns the arc id, usable with flow().
  int add_arc(int from, int to, Capacity capacity);

  Capacity solve(int source, int sink);

  Capacity flow(int arc) const { return arcs_[2 * arc + 1].residual; }

  /// Nodes reachable from the source in the final residual network: the
  /// source side of the inclusion-minimal minimum cut.
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    Capacity residual;
  };

  bool build_levels(int source, int sink);
  Capacity augment(int source, int sink);

  int num_nodes_;
  std::vector<Arc> arcs_;  // arc 2i forward, 2i+1 its reverse
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace oddcolor
