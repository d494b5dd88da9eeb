#include <gtest/gtest.h>

#include <set>

#include "oddcolor/generators.hpp"
#include "oddcolor/reduction.hpp"
#include "support/random_graphs.hpp"

using namespace oddcolor;
using oddcolor::testing::Rng;

namespace {

// Recomputes every count from scratch on the live subgraph.
struct LiveView {
  const Graph& g;
  const std::vector<char>& alive;

  std::vector<Vertex> nbrs(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) out.push_back(w);
    }
    return out;
  }
  int deg(Vertex v) const { return static_cast<int>(nbrs(v).size()); }
  int twos(Vertex v) const {
    int c = 0;
    for (Vertex w : nbrs(v)) c += deg(w) == 2;
    return c;
  }
  int three_minus(Vertex v) const {
    int c = 0;
    for (Vertex w : nbrs(v)) c += deg(w) <= 3;
    return c;
  }

  bool matches(ConfigKind kind, Vertex v) const {
    const int d = deg(v);
    const int c2 = twos(v);
    switch (kind) {
      case ConfigKind::isolated: return d == 0;
      case ConfigKind::leaf: return d == 1;
      case ConfigKind::three_vertex: return d == 3;
      case ConfigKind::adjacent_2_vertices: return d == 2 && c2 >= 1;
      case ConfigKind::star: return d >= 4;
      case ConfigKind::thm2a_3v_with_2nbr: return d == 3 && c2 >= 1;
      case ConfigKind::thm2a_4v_three_2nbrs: return d == 4 && c2 >= 3;
      case ConfigKind::thm2a_5v_five_2nbrs: return d == 5 && c2 == 5;
      case ConfigKind::thm2b_3v_two_3minus_nbrs: return d == 3 && three_minus(v) >= 2;
      case ConfigKind::thm2b_4v_four_2nbrs: return d == 4 && c2 == 4;
      case ConfigKind::thm2b_4v_2nbr_all_3minus: return d == 4 && c2 >= 1 && three_minus(v) == 4;
      case ConfigKind::thm2b_adjacent_4v: {
        if (d != 4 || c2 != 3) return false;
        for (Vertex w : nbrs(v)) {
          if (deg(w) == 4 && twos(w) == 3) return true;
        }
        return false;
      }
    }
    return false;
  }
};

std::vector<ConfigKind> order_for(ReductionRule rule) {
  using K = ConfigKind;
  switch (rule) {
    case ReductionRule::forest: return {K::isolated, K::leaf};
    case ReductionRule::mad4:
      return {K::isolated, K::leaf, K::three_vertex, K::adjacent_2_vertices, K::star};
    case ReductionRule::mad3:
      return {K::isolated, K::leaf, K::adjacent_2_vertices, K::thm2a_3v_with_2nbr,
              K::thm2a_4v_three_2nbrs, K::thm2a_5v_five_2nbrs};
    case ReductionRule::mad20_7:
      return {K::isolated, K::leaf, K::adjacent_2_vertices, K::thm2b_3v_two_3minus_nbrs,
              K::thm2b_4v_four_2nbrs, K::thm2b_4v_2nbr_all_3minus, K::thm2b_adjacent_4v};
  }
  return {};
}

// Runs the reducer to exhaustion, checking every record against a
// from-scratch recomputation. Returns false if it got stuck.
bool reduce_checked(const Graph& g, ReductionRule rule, const Rational& x = Rational(0)) {
  Reducer reducer(g, rule, x);
  std::vector<char> alive(g.num_vertices(), 1);
  LiveView view{g, alive};
  const auto order = order_for(rule);
  int steps = 0;
  while (!reducer.empty()) {
    auto record = reducer.find();
    if (!record) return false;
    ++steps;
    EXPECT_LE(steps, g.num_vertices());

    // First matching kind in priority order, lowest index (or key) within it.
    std::optional<Vertex> expected;
    ConfigKind expected_kind{};
    for (ConfigKind kind : order) {
      std::optional<std::pair<Rational, Vertex>> best;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!alive[v] || !view.matches(kind, v)) continue;
        Rational key = kind == ConfigKind::star ? Rational(view.deg(v)) - x * Rational(view.twos(v))
                                                : Rational(0);
        if (!best || std::make_pair(key, v) < *best) best = std::make_pair(key, v);
      }
      if (best) {
        expected = best->second;
        expected_kind = kind;
        break;
      }
    }
    EXPECT_TRUE(expected.has_value());
    EXPECT_EQ(record->kind, expected_kind);
    EXPECT_EQ(record->anchor, expected.value_or(-1));
    EXPECT_EQ(record->anchor_degree, view.deg(record->anchor));
    EXPECT_EQ(record->anchor_two_neighbors, view.twos(record->anchor));

    std::set<Vertex> deleted(record->deleted.begin(), record->deleted.end());
    EXPECT_EQ(deleted.size(), record->deleted.size());
    EXPECT_EQ(record->deleted.front(), record->anchor);
    for (Vertex z : record->deleted) EXPECT_TRUE(alive[z]);
    EXPECT_EQ(record->frontier.size(), record->deleted.size());
    if (record->frontier.size() != record->deleted.size()) return true;
    for (std::size_t i = 0; i < record->deleted.size(); ++i) {
      std::vector<Vertex> survivors;
      for (Vertex w : view.nbrs(record->deleted[i])) {
        if (!deleted.count(w)) survivors.push_back(w);
      }
      EXPECT_EQ(record->frontier[i], survivors);
    }
    reducer.apply(*record);
    for (Vertex z : record->deleted) alive[z] = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!alive[v]) continue;
      EXPECT_EQ(reducer.degree(v), view.deg(v));
      EXPECT_EQ(reducer.two_neighbors(v), view.twos(v));
      EXPECT_EQ(reducer.three_minus_neighbors(v), view.three_minus(v));
    }
    if (::testing::Test::HasFailure()) return true;
  }
  return true;
}

}  // namespace

TEST(FindReducible2a, Examples) {
  auto c4 = find_reducible_2a(gen_cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->kind, ConfigKind::adjacent_2_vertices);
  EXPECT_EQ(c4->deleted, (std::vector<Vertex>{0, 1}));

  auto claw = find_reducible_2a(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  ASSERT_TRUE(claw);
  EXPECT_EQ(claw->kind, ConfigKind::leaf);
  EXPECT_EQ(claw->anchor, 1);

  auto k6 = find_reducible_2a(gen_kstar(6));
  ASSERT_TRUE(k6);
  EXPECT_EQ(k6->kind, ConfigKind::thm2a_5v_five_2nbrs);
  EXPECT_EQ(k6->anchor, 0);
  EXPECT_EQ(k6->deleted.size(), 6u);
}

TEST(FindReducible2b, Examples) {
  auto c7 = find_reducible_2b(gen_cycle(7));
  ASSERT_TRUE(c7);
  EXPECT_EQ(c7->kind, ConfigKind::adjacent_2_vertices);

  auto k5 = find_reducible_2b(gen_kstar(5));
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->kind, ConfigKind::thm2b_4v_four_2nbrs);
  EXPECT_EQ(k5->anchor, 0);

  auto p2 = find_reducible_2b(gen_path(2));
  ASSERT_TRUE(p2);
  EXPECT_EQ(p2->kind, ConfigKind::leaf);
}

TEST(FindReducible2b, AdjacentFourVertices) {
  // Two adjacent hubs, each with three length-2 paths into high-degree sinks,
  // so nothing of higher priority applies.
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  const Vertex sink_a = 8;
  const Vertex sink_b = 9;
  for (Vertex hub : {0, 1}) {
    for (int i = 0; i < 3; ++i) {
      Vertex mid = next++;
      edges.emplace_back(hub, mid);
      edges.emplace_back(mid, i == 0 ? sink_a : sink_b);
    }
  }
  // Hang the sinks off a K_5 core so they are high-degree vertices.
  for (Vertex a = 10; a < 15; ++a) {
    for (Vertex b = a + 1; b < 15; ++b) edges.emplace_back(a, b);
    edges.emplace_back(sink_a, a);
    edges.emplace_back(sink_b, a);
  }
  Graph g = Graph::from_edges(15, edges);
  auto record = find_reducible_2b(g);
  ASSERT_TRUE(record);
  EXPECT_EQ(record->kind, ConfigKind::thm2b_adjacent_4v);
  EXPECT_EQ(record->anchor, 0);
  EXPECT_EQ(record->deleted, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Reducer, NamesAreStable) {
  EXPECT_EQ(to_string(ConfigKind::thm2b_adjacent_4v), "thm2b-adjacent-4v");
  EXPECT_EQ(to_string(ConfigKind::adjacent_2_vertices), "adjacent-2-vertices");
}

TEST(Reducer, IncrementalStateMatchesRecount) {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    Graph f = oddcolor::testing::random_forest(oddcolor::testing::uniform_int(rng, 1, 40), rng);
    EXPECT_TRUE(reduce_checked(f, ReductionRule::forest));
    Graph a = oddcolor::testing::random_sparse(Rational(3), true, 30, rng);
    EXPECT_TRUE(reduce_checked(a, ReductionRule::mad3));
    Graph b = oddcolor::testing::random_sparse(Rational(20, 7), true, 30, rng);
    EXPECT_TRUE(reduce_checked(b, ReductionRule::mad20_7));
    Rational eps(1);
    Graph c = oddcolor::testing::random_sparse(Rational(4) - eps, false, 30, rng);
    EXPECT_TRUE(reduce_checked(c, ReductionRule::mad4, Rational(1) - eps / Rational(2)));
    if (HasFailure()) break;
  }
}

TEST(Reducer, NeverStuckBelowThresholds) {
  Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    Graph a = oddcolor::testing::random_sparse(Rational(3), true, 40, rng);
    Reducer ra(a, ReductionRule::mad3);
    while (!ra.empty()) {
      auto r = ra.find();
      ASSERT_TRUE(r) << serialize_graph(a, GraphFormat::edgelist);
      ra.apply(*r);
    }
    Graph b = oddcolor::testing::random_sparse(Rational(20, 7), true, 40, rng);
    Reducer rb(b, ReductionRule::mad20_7);
    while (!rb.empty()) {
      auto r = rb.find();
      ASSERT_TRUE(r) << serialize_graph(b, GraphFormat::edgelist);
      rb.apply(*r);
    }
  }
}

TEST(Reducer, CorpusReachesEveryConfiguration) {
  Rng rng(47);
  for (auto [rule, alpha] : {std::pair{ReductionRule::mad3, Rational(3)},
                             std::pair{ReductionRule::mad20_7, Rational(20, 7)}}) {
    std::set<ConfigKind> seen;
    for (int i = 0; i < 2000; ++i) {
      Graph g = oddcolor::testing::random_sparse(alpha, true, 40, rng);
      Reducer r(g, rule);
      while (!r.empty()) {
        auto record = r.find();
        ASSERT_TRUE(record);
        seen.insert(record->kind);
        r.apply(*record);
      }
    }
    EXPECT_EQ(seen.size(), order_for(rule).size());
  }
}
