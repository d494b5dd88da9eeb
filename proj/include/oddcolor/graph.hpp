#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcolor/rational.hpp"

namespace oddcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency arrays (CSR). Safe to share between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Self-loops, repeated edges (in either
  /// orientation) and out-of-range endpoints throw GraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
};

enum class GraphFormat { edgelist, dimacs };

/// Edge list: optional '#' comment lines, a header "n m", then m lines "u v"
/// (0-based). DIMACS: "c" comments, "p edge n m", then "e u v" (1-based).
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);
GraphFormat parse_graph_format(std::string_view name);

/// Length of a shortest cycle; empty for forests.
struct GirthResult {
  std::optional<int> value;

  bool infinite() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const GirthResult&, const GirthResult&) = default;
};

GirthResult girth(const Graph& g);

/// 2g/(g-2). Planar graphs of girth at least g have mad strictly below it.
Rational girth_mad_bound(int g);

bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

/// Proper 2-coloring with colors 1 and 2 (first vertex of each component gets
/// 1), or empty if some component has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// The vertices of a connected 2-regular graph in cyclic order starting at 0
/// and continuing to the smaller neighbor; empty if the graph is not a cycle.
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);

/// |E(G[S])| for the given vertex subset (duplicates ignored).
std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> subset);

}  // namespace oddcolor
