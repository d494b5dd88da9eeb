#include "oddcolor/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oddcolor {

MaxFlow::MaxFlow(int num_nodes) : num_nodes_(num_nodes), out_(num_nodes) {}

int MaxFlow::add_arc(int from, int to, Capacity capacity) {
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  int id = static_cast<int>(arcs_.size() / 2);
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(num_nodes_, -1);
  std::vector<int> queue{source};
  level_[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int a : out_[u]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

// One blocking-flow phase with an explicit path stack instead of recursion.
MaxFlow::Capacity MaxFlow::augment(int source, int sink) {
  Capacity total = 0;
  std::vector<int> path;  // arc indices from the source
  int u = source;
  while (true) {
    if (u == sink) {
      Capacity push = std::numeric_limits<Capacity>::max();
      for (int a : path) push = std::min(push, arcs_[a].residual);
      for (int a : path) {
        arcs_[a].residual -= push;
        arcs_[a ^ 1].residual += push;
      }
      total += push;
      path.clear();
      u = source;
      continue;
    }
    bool advanced = false;
    for (std::size_t& i = next_[u]; i < out_[u].size(); ++i) {
      int a = out_[u][i];
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] == level_[u] + 1) {
        path.push_back(a);
        u = arc.to;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (u == source) break;
    // Dead end: retire u and retreat along the path.
    level_[u] = -1;
    int a = path.back();
    path.pop_back();
    u = arcs_[a ^ 1].to;
    ++next_[u];
  }
  return total;
}

MaxFlow::Capacity MaxFlow::solve(int source, int sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    next_.assign(num_nodes_, 0);
    total += augment(source, sink);
  }
  return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> seen(num_nodes_, 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a : out_[u]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace oddcolor
