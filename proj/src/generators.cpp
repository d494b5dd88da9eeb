#include "oddcolor/generators.hpp"

#include <vector>

#include "oddcolor/coloring.hpp"

namespace oddcolor {

Graph gen_complete(int n) {
  if (n < 0) throw GraphError("complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph subdivide(const Graph& h) {
  const int n = h.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(h.num_edges()));
  Vertex fresh = n;
  for (auto [u, v] : h.edges()) {
    edges.emplace_back(u, fresh);
    edges.emplace_back(fresh, v);
    ++fresh;
  }
  return Graph::from_edges(fresh, edges);
}

Graph gen_kstar(int n) {
  if (n < 1) throw GraphError("K_n^* needs n >= 1");
  return subdivide(gen_complete(n));
}

Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph gen_path(int n) {
  if (n < 1) throw GraphError("a path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_cycle_with_leaves(int n, std::span<const int> leaf_counts) {
  if (n < 3 || n % 3 != 0) throw GraphError("cycle with leaves needs n >= 3 divisible by 3");
  if (static_cast<int>(leaf_counts.size()) != n / 3) {
    throw GraphError("expected " + std::to_string(n / 3) + " leaf counts");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Vertex next = n;
  for (std::size_t j = 0; j < leaf_counts.size(); ++j) {
    if (leaf_counts[j] < 0) throw GraphError("leaf counts must be non-negative");
    const Vertex anchor = static_cast<Vertex>(3 * j + 2);
    for (int l = 0; l < leaf_counts[j]; ++l) edges.emplace_back(anchor, next++);
  }
  return Graph::from_edges(next, edges);
}

std::vector<int> canonical_kstar_coloring(int n) {
  if (n < 2) throw GraphError("canonical K_n^* coloring needs n >= 2");
  const Graph g = gen_kstar(n);
  // n = 2 is a path on three vertices, which needs a third color.
  PartialColoring coloring(g, std::max(n, 3));
  for (Vertex hub = 0; hub < n; ++hub) coloring.assign(hub, hub + 1);
  std::vector<int> avoid;
  for (Vertex s = n; s < g.num_vertices(); ++s) {
    avoid.clear();
    for (Vertex hub : g.neighbors(s)) {
      avoid.push_back(*coloring.color(hub));
      if (auto odd = coloring.phi_o(hub)) avoid.push_back(*odd);
    }
    coloring.assign(s, choose_color(avoid, coloring.k()));
  }
  return {coloring.colors().begin(), coloring.colors().end()};
}

}  // namespace oddcolor
