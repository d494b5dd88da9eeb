#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/rational.hpp"

namespace oddcolor {

/// Reducible configurations. Degrees and "k-neighbors" always refer to the
/// graph that remains at the moment the configuration is found.
enum class ConfigKind {
  isolated,                  // 0-vertex
  leaf,                      // 1-vertex
  three_vertex,              // any 3-vertex (mad < 4 rule)
  adjacent_2_vertices,       // a 2-vertex and its lowest 2-neighbor
  star,                      // 4+-vertex minimizing d(v) - x d_2(v), with its 2-neighbors
  thm2a_3v_with_2nbr,        // 3-vertex and its lowest 2-neighbor
  thm2a_4v_three_2nbrs,      // 4-vertex with >= 3 2-neighbors, with them
  thm2a_5v_five_2nbrs,       // 5-vertex whose neighbors are all 2-vertices, with them
  thm2b_3v_two_3minus_nbrs,  // 3-vertex with >= 2 3^- neighbors, with its 2-neighbors
  thm2b_4v_four_2nbrs,       // 4-vertex whose neighbors are all 2-vertices, with them
  thm2b_4v_2nbr_all_3minus,  // 4-vertex, all neighbors 3^-, at least one a 2-vertex
  thm2b_adjacent_4v,         // adjacent 4-vertices each with three 2-neighbors
};

std::string_view to_string(ConfigKind kind);

/// One configuration removed during reduction. Deleted vertices are colored
/// in the stored order when the record is replayed.
struct ReductionRecord {
  ConfigKind kind;
  std::vector<Vertex> deleted;
  /// frontier[i]: neighbors of deleted[i] that survive the deletion.
  std::vector<std::vector<Vertex>> frontier;
  Vertex anchor = -1;
  int anchor_degree = 0;
  int anchor_two_neighbors = 0;
};

/// Which family of configurations the reducer looks for, in priority order:
///   forest:   isolated, leaf
///   mad4:     isolated, leaf, 3-vertex, adjacent 2-vertices, star
///   mad3:     isolated, leaf, adjacent 2-vertices, thm2a_{3v,4v,5v}
///   mad20_7:  isolated, leaf, adjacent 2-vertices, thm2b_{3v, 4v four,
///             4v all 3^-, adjacent 4v}
/// Ties go to the lowest anchor index (the star rule breaks ties on
/// d(v) - x d_2(v) first).
enum class ReductionRule { forest, mad4, mad3, mad20_7 };

/// Mutable view of a shrinking graph that tracks, per live vertex, its
/// degree and its numbers of 2-neighbors and 3^- neighbors, and keeps every
/// vertex bucketed by the highest-priority configuration it anchors. Only
/// vertices near a deletion are reclassified, so a full reduction runs in
/// near-linear time.
class Reducer {
 public:
  /// star_weight is x in d(v) - x d_2(v); only used by ReductionRule::mad4.
  Reducer(const Graph& g, ReductionRule rule, Rational star_weight = Rational(0));

  int live_count() const { return live_count_; }
  bool empty() const { return live_count_ == 0; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return degree_[v]; }
  int two_neighbors(Vertex v) const { return two_[v]; }
  int three_minus_neighbors(Vertex v) const { return three_minus_[v]; }

  /// The first configuration in priority order, or empty when none exists.
  std::optional<ReductionRecord> find();

  /// Deletes the record's vertices.
  void apply(const ReductionRecord& record);

 private:
  const std::vector<Vertex>& live_neighbors(Vertex v);
  std::vector<Vertex> live_two_neighbors(Vertex v);
  void remove_vertex(Vertex v);
  void change_degree(Vertex u, int new_degree);
  void mark(Vertex v);
  void mark_neighbors_of_four_vertex(Vertex w);
  void reclassify(Vertex v);
  void flush();
  int classify(Vertex v);
  bool has_partner_four_vertex(Vertex v);
  ReductionRecord build(ConfigKind kind, Vertex anchor);

  const Graph* graph_;
  ReductionRule rule_;
  Rational star_weight_;
  std::vector<ConfigKind> priorities_;

  int live_count_;
  std::vector<char> alive_;
  std::vector<std::vector<Vertex>> adjacency_;  // lazily compacted
  std::vector<int> degree_;
  std::vector<int> two_;
  std::vector<int> three_minus_;

  std::vector<int> bucket_of_;  // index into priorities_, or -1
  std::vector<std::set<Vertex>> buckets_;
  std::vector<Rational> star_key_;
  std::set<std::pair<Rational, Vertex>> star_queue_;

  std::vector<char> dirty_flag_;
  std::vector<Vertex> dirty_;
};

/// First configuration of the odd 6-coloring reduction (mad < 3), or empty
/// if none exists, which would contradict mad(G) < 3.
std::optional<ReductionRecord> find_reducible_2a(const Graph& g);

/// First configuration of the odd 5-coloring reduction (mad < 20/7), or
/// empty if none exists.
std::optional<ReductionRecord> find_reducible_2b(const Graph& g);

}  // namespace oddcolor
