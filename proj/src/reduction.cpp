#include "oddcolor/reduction.hpp"

#include <algorithm>

namespace oddcolor {

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::isolated: return "isolated";
    case ConfigKind::leaf: return "leaf";
    case ConfigKind::three_vertex: return "three-vertex";
    case ConfigKind::adjacent_2_vertices: return "adjacent-2-vertices";
    case ConfigKind::star: return "star";
    case ConfigKind::thm2a_3v_with_2nbr: return "thm2a-3v-with-2nbr";
    case ConfigKind::thm2a_4v_three_2nbrs: return "thm2a-4v-three-2nbrs";
    case ConfigKind::thm2a_5v_five_2nbrs: return "thm2a-5v-five-2nbrs";
    case ConfigKind::thm2b_3v_two_3minus_nbrs: return "thm2b-3v-two-3minus-nbrs";
    case ConfigKind::thm2b_4v_four_2nbrs: return "thm2b-4v-four-2nbrs";
    case ConfigKind::thm2b_4v_2nbr_all_3minus: return "thm2b-4v-2nbr-all-3minus";
    case ConfigKind::thm2b_adjacent_4v: return "thm2b-adjacent-4v";
  }
  return "unknown";
}

namespace {

std::vector<ConfigKind> priorities_for(ReductionRule rule) {
  using K = ConfigKind;
  switch (rule) {
    case ReductionRule::forest:
      return {K::isolated, K::leaf};
    case ReductionRule::mad4:
      return {K::isolated, K::leaf, K::three_vertex, K::adjacent_2_vertices, K::star};
    case ReductionRule::mad3:
      return {K::isolated, K::leaf, K::adjacent_2_vertices, K::thm2a_3v_with_2nbr,
              K::thm2a_4v_three_2nbrs, K::thm2a_5v_five_2nbrs};
    case ReductionRule::mad20_7:
      return {K::isolated,
              K::leaf,
              K::adjacent_2_vertices,
              K::thm2b_3v_two_3minus_nbrs,
              K::thm2b_4v_four_2nbrs,
              K::thm2b_4v_2nbr_all_3minus,
              K::thm2b_adjacent_4v};
  }
  return {};
}

}  // namespace

Reducer::Reducer(const Graph& g, ReductionRule rule, Rational star_weight)
    : graph_(&g),
      rule_(rule),
      star_weight_(star_weight),
      priorities_(priorities_for(rule)),
      live_count_(g.num_vertices()),
      alive_(g.num_vertices(), 1),
      adjacency_(g.num_vertices()),
      degree_(g.num_vertices()),
      two_(g.num_vertices(), 0),
      three_minus_(g.num_vertices(), 0),
      bucket_of_(g.num_vertices(), -1),
      buckets_(priorities_.size()),
      star_key_(g.num_vertices()),
      dirty_flag_(g.num_vertices(), 0) {
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adjacency_[v].assign(nb.begin(), nb.end());
    degree_[v] = g.degree(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      two_[v] += degree_[w] == 2;
      three_minus_[v] += degree_[w] <= 3;
    }
    mark(v);
  }
  flush();
}

const std::vector<Vertex>& Reducer::live_neighbors(Vertex v) {
  auto& list = adjacency_[v];
  std::erase_if(list, [&](Vertex w) { return !alive_[w]; });
  return list;
}

std::vector<Vertex> Reducer::live_two_neighbors(Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : live_neighbors(v)) {
    if (degree_[w] == 2) out.push_back(w);
  }
  return out;
}

void Reducer::mark(Vertex v) {
  if (!dirty_flag_[v]) {
    dirty_flag_[v] = 1;
    dirty_.push_back(v);
  }
}

// Neighbors of a 4-vertex may anchor the adjacent-4-vertices configuration.
void Reducer::mark_neighbors_of_four_vertex(Vertex w) {
  for (Vertex x : live_neighbors(w)) mark(x);
}

void Reducer::remove_vertex(Vertex v) {
  const std::vector<Vertex> neighbors = live_neighbors(v);
  const int d = degree_[v];
  for (Vertex u : neighbors) {
    if (d == 2) --two_[u];
    if (d <= 3) --three_minus_[u];
    mark(u);
    if (degree_[u] == 4) mark_neighbors_of_four_vertex(u);
  }
  alive_[v] = 0;
  --live_count_;
  mark(v);
  for (Vertex u : neighbors) change_degree(u, degree_[u] - 1);
}

void Reducer::change_degree(Vertex u, int new_degree) {
  const int old_degree = degree_[u];
  degree_[u] = new_degree;
  const int two_delta = (new_degree == 2) - (old_degree == 2);
  const int three_delta = (new_degree <= 3) - (old_degree <= 3);
  if (two_delta != 0 || three_delta != 0) {
    for (Vertex w : live_neighbors(u)) {
      two_[w] += two_delta;
      three_minus_[w] += three_delta;
      mark(w);
      if (degree_[w] == 4) mark_neighbors_of_four_vertex(w);
    }
  }
  mark(u);
  if (old_degree == 4 || new_degree == 4) mark_neighbors_of_four_vertex(u);
}

bool Reducer::has_partner_four_vertex(Vertex v) {
  for (Vertex w : live_neighbors(v)) {
    if (degree_[w] == 4 && two_[w] == 3) return true;
  }
  return false;
}

int Reducer::classify(Vertex v) {
  const int d = degree_[v];
  const int c2 = two_[v];
  const int c3 = three_minus_[v];
  for (std::size_t i = 0; i < priorities_.size(); ++i) {
    bool match = false;
    switch (priorities_[i]) {
      case ConfigKind::isolated: match = d == 0; break;
      case ConfigKind::leaf: match = d == 1; break;
      case ConfigKind::three_vertex: match = d == 3; break;
      case ConfigKind::adjacent_2_vertices: match = d == 2 && c2 >= 1; break;
      case ConfigKind::star: match = d >= 4; break;
      case ConfigKind::thm2a_3v_with_2nbr: match = d == 3 && c2 >= 1; break;
      case ConfigKind::thm2a_4v_three_2nbrs: match = d == 4 && c2 >= 3; break;
      case ConfigKind::thm2a_5v_five_2nbrs: match = d == 5 && c2 == 5; break;
      case ConfigKind::thm2b_3v_two_3minus_nbrs: match = d == 3 && c3 >= 2; break;
      case ConfigKind::thm2b_4v_four_2nbrs: match = d == 4 && c2 == 4; break;
      case ConfigKind::thm2b_4v_2nbr_all_3minus: match = d == 4 && c2 >= 1 && c3 == 4; break;
      case ConfigKind::thm2b_adjacent_4v:
        match = d == 4 && c2 == 3 && has_partner_four_vertex(v);
        break;
    }
    if (match) return static_cast<int>(i);
  }
  return -1;
}

void Reducer::reclassify(Vertex v) {
  const int old_bucket = bucket_of_[v];
  if (old_bucket >= 0) {
    if (priorities_[old_bucket] == ConfigKind::star) {
      star_queue_.erase({star_key_[v], v});
    } else {
      buckets_[old_bucket].erase(v);
    }
  }
  const int bucket = alive_[v] ? classify(v) : -1;
  bucket_of_[v] = bucket;
  if (bucket < 0) return;
  if (priorities_[bucket] == ConfigKind::star) {
    star_key_[v] = Rational(degree_[v]) - star_weight_ * Rational(two_[v]);
    star_queue_.insert({star_key_[v], v});
  } else {
    buckets_[bucket].insert(v);
  }
}

void Reducer::flush() {
  // Reclassification only reads counts, so order does not matter.
  for (Vertex v : dirty_) {
    dirty_flag_[v] = 0;
    reclassify(v);
  }
  dirty_.clear();
}

ReductionRecord Reducer::build(ConfigKind kind, Vertex anchor) {
  ReductionRecord record;
  record.kind = kind;
  record.anchor = anchor;
  record.anchor_degree = degree_[anchor];
  record.anchor_two_neighbors = two_[anchor];
  record.deleted.push_back(anchor);
  switch (kind) {
    case ConfigKind::isolated:
    case ConfigKind::leaf:
    case ConfigKind::three_vertex:
      break;
    case ConfigKind::adjacent_2_vertices:
    case ConfigKind::thm2a_3v_with_2nbr:
      record.deleted.push_back(live_two_neighbors(anchor).front());
      break;
    case ConfigKind::star:
    case ConfigKind::thm2a_4v_three_2nbrs:
    case ConfigKind::thm2a_5v_five_2nbrs:
    case ConfigKind::thm2b_3v_two_3minus_nbrs:
    case ConfigKind::thm2b_4v_four_2nbrs:
    case ConfigKind::thm2b_4v_2nbr_all_3minus: {
      auto twos = live_two_neighbors(anchor);
      record.deleted.insert(record.deleted.end(), twos.begin(), twos.end());
      break;
    }
    case ConfigKind::thm2b_adjacent_4v: {
      Vertex partner = -1;
      for (Vertex w : live_neighbors(anchor)) {
        if (degree_[w] == 4 && two_[w] == 3) {
          partner = w;
          break;
        }
      }
      record.deleted.push_back(partner);
      for (Vertex center : {anchor, partner}) {
        for (Vertex w : live_two_neighbors(center)) {
          if (std::find(record.deleted.begin(), record.deleted.end(), w) == record.deleted.end()) {
            record.deleted.push_back(w);
          }
        }
      }
      break;
    }
  }
  for (Vertex z : record.deleted) {
    std::vector<Vertex> survivors;
    for (Vertex w : live_neighbors(z)) {
      if (std::find(record.deleted.begin(), record.deleted.end(), w) == record.deleted.end()) {
        survivors.push_back(w);
      }
    }
    record.frontier.push_back(std::move(survivors));
  }
  return record;
}

std::optional<ReductionRecord> Reducer::find() {
  for (std::size_t i = 0; i < priorities_.size(); ++i) {
    if (priorities_[i] == ConfigKind::star) {
      if (!star_queue_.empty()) return build(ConfigKind::star, star_queue_.begin()->second);
    } else if (!buckets_[i].empty()) {
      return build(priorities_[i], *buckets_[i].begin());
    }
  }
  return std::nullopt;
}

void Reducer::apply(const ReductionRecord& record) {
  for (Vertex z : record.deleted) remove_vertex(z);
  flush();
}

std::optional<ReductionRecord> find_reducible_2a(const Graph& g) {
  Reducer reducer(g, ReductionRule::mad3);
  return reducer.find();
}

std::optional<ReductionRecord> find_reducible_2b(const Graph& g) {
  Reducer reducer(g, ReductionRule::mad20_7);
  return reducer.find();
}

}  // namespace oddcolor
