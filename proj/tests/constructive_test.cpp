#include <gtest/gtest.h>

#include "oddcolor/coloring.hpp"
#include "oddcolor/constructive.hpp"
#include "oddcolor/exact.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/sparsity.hpp"
#include "support/random_graphs.hpp"

using namespace oddcolor;
using oddcolor::testing::Rng;

namespace {

void expect_valid(const Graph& g, const ColoringResult& r) {
  auto verdict = is_odd_coloring(g, r.colors);
  EXPECT_TRUE(verdict.valid) << r.strategy << "\n" << serialize_graph(g, GraphFormat::edgelist);
  EXPECT_LE(r.k_used, r.bound);
  EXPECT_EQ(r.k_used, max_color(r.colors));
}

}  // namespace

TEST(ColorForest, Examples) {
  auto p4 = color_forest(gen_path(4));
  expect_valid(gen_path(4), p4);
  EXPECT_EQ(p4.k_used, 3);
  EXPECT_EQ(brute_force_chi_o(gen_path(4)), 3);

  auto single = color_forest(Graph::from_edges(1, {}));
  EXPECT_EQ(single.colors, (std::vector<int>{1}));

  Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto s = color_forest(star);
  expect_valid(star, s);
  EXPECT_LE(s.k_used, 3);

  EXPECT_THROW(color_forest(gen_cycle(3)), PreconditionError);
}

TEST(ColorForest, RandomForests) {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    Graph f = oddcolor::testing::random_forest(oddcolor::testing::uniform_int(rng, 1, 300), rng);
    auto r = color_forest(f);
    expect_valid(f, r);
    EXPECT_LE(r.k_used, 3);
    EXPECT_EQ(r.bound, 3);
  }
}

TEST(ColorCycle, Table) {
  EXPECT_EQ(color_cycle(6).colors, (std::vector<int>{1, 2, 3, 1, 2, 3}));
  EXPECT_EQ(color_cycle(5).colors, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(color_cycle(7).colors, (std::vector<int>{1, 2, 3, 4, 1, 2, 3}));
  EXPECT_EQ(color_cycle(8).colors, (std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4}));
  EXPECT_THROW(color_cycle(2), PreconditionError);
  for (int n = 3; n <= 60; ++n) {
    auto r = color_cycle(n);
    int expected = n % 3 == 0 ? 3 : (n == 5 ? 5 : 4);
    EXPECT_EQ(r.k_used, expected) << n;
    EXPECT_TRUE(is_odd_coloring(gen_cycle(n), r.colors).valid) << n;
  }
}

TEST(ColorCycle, AnyLabelling) {
  Graph relabelled = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  auto r = color_cycle_graph(relabelled);
  expect_valid(relabelled, r);
  EXPECT_EQ(r.k_used, 5);
  EXPECT_THROW(color_cycle_graph(gen_path(5)), PreconditionError);
}

TEST(ClassifySmall, Examples) {
  auto edgeless = classify_small(Graph::from_edges(5, {}));
  ASSERT_TRUE(edgeless);
  EXPECT_EQ(edgeless->chi_o, 1);
  auto k2 = classify_small(gen_complete(2));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->chi_o, 2);
  EXPECT_FALSE(classify_small(gen_cycle(4)).has_value());
  EXPECT_FALSE(classify_small(gen_complete(4)).has_value());
}

TEST(ClassifySmall, AgreesWithBruteForce) {
  Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    Graph g = oddcolor::testing::random_small(6, rng);
    int chi = brute_force_chi_o(g);
    auto c = classify_small(g);
    if (chi <= 2) {
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(c->chi_o, chi);
      EXPECT_TRUE(is_odd_coloring(g, c->colors).valid);
    } else {
      EXPECT_FALSE(c.has_value());
    }
  }
}

TEST(ColorMad4, Examples) {
  auto k7 = color_mad4(gen_kstar(7), Rational(1));
  expect_valid(gen_kstar(7), k7);
  EXPECT_EQ(k7.bound, 10);
  auto c6 = color_mad4(gen_cycle(6), Rational(8, 5));
  expect_valid(gen_cycle(6), c6);
  EXPECT_EQ(c6.bound, 7);
  auto k5 = color_mad4(gen_kstar(5), Rational(4, 3));
  expect_valid(gen_kstar(5), k5);
  EXPECT_EQ(k5.bound, 8);

  EXPECT_THROW(color_mad4(gen_kstar(7), Rational(9, 5)), PreconditionError);
  EXPECT_THROW(color_mad4(gen_kstar(7), Rational(0)), PreconditionError);
  EXPECT_THROW(color_mad4(gen_kstar(8), Rational(1)), PreconditionError);
}

TEST(ColorMad4, RandomGraphsAndSelectionArithmetic) {
  Rng rng(57);
  for (Rational eps : {Rational(1), Rational(4, 3), Rational(8, 5), Rational(1, 2)}) {
    const Rational x = Rational(1) - eps / Rational(2);
    const int k = static_cast<int>((Rational(8) / eps).floor()) + 2;
    for (int i = 0; i < 200; ++i) {
      Graph g = oddcolor::testing::random_sparse(Rational(4) - eps, false, 40, rng);
      ASSERT_LE(mad_exact(g).mad, Rational(4) - eps);
      auto r = color_mad4(g, eps);
      expect_valid(g, r);
      EXPECT_EQ(r.bound, k);
      for (const auto& s : r.selections) {
        EXPECT_LE(Rational(s.degree) - x * Rational(s.two_neighbors), Rational(2) + Rational(2) * x);
        EXPECT_LE(s.degree, k - 4);
      }
    }
  }
}

TEST(ColorMad3, Examples) {
  auto k6 = color_mad3(gen_kstar(6));
  expect_valid(gen_kstar(6), k6);
  EXPECT_EQ(k6.k_used, 6);
  auto tree = color_mad3(gen_path(10));
  expect_valid(gen_path(10), tree);
  EXPECT_THROW(color_mad3(gen_kstar(7)), PreconditionError);
}

TEST(ColorMad3, RandomGraphs) {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    Graph g = oddcolor::testing::random_sparse(Rational(3), true, 50, rng);
    ASSERT_LT(mad_exact(g).mad, Rational(3));
    auto r = color_mad3(g);
    expect_valid(g, r);
    EXPECT_LE(r.k_used, 6);
  }
}

TEST(ColorMad20_7, Examples) {
  auto k5 = color_mad20_7(gen_kstar(5));
  expect_valid(gen_kstar(5), k5);
  EXPECT_EQ(k5.k_used, 5);
  auto c7 = color_mad20_7(gen_cycle(7));
  expect_valid(gen_cycle(7), c7);
  EXPECT_LE(c7.k_used, 5);
  EXPECT_THROW(color_mad20_7(gen_kstar(6)), PreconditionError);
}

TEST(ColorMad20_7, RandomGraphs) {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    Graph g = oddcolor::testing::random_sparse(Rational(20, 7), true, 50, rng);
    ASSERT_LT(mad_exact(g).mad, Rational(20, 7));
    auto r = color_mad20_7(g);
    expect_valid(g, r);
    EXPECT_LE(r.k_used, 5);
  }
}

TEST(ColorMad20_7, PairedFourVertexGadgets) {
  Rng rng(63);
  for (int i = 0; i < 300; ++i) {
    Graph g = oddcolor::testing::random_paired_gadgets(oddcolor::testing::uniform_int(rng, 2, 12),
                                                       0.3, rng);
    g = oddcolor::testing::thin_to(g, Rational(20, 7), true, rng);
    auto r = color_mad20_7(g);
    expect_valid(g, r);
    EXPECT_LE(r.k_used, 5);
  }
}

TEST(ColorAuto, Dispatch) {
  auto c9 = color_auto(gen_cycle(9));
  EXPECT_EQ(c9.strategy, "cycle");
  EXPECT_EQ(c9.k_used, 3);

  auto k7 = color_auto(gen_kstar(7));
  EXPECT_EQ(k7.strategy, "mad4");
  EXPECT_EQ(k7.bound, 10);
  expect_valid(gen_kstar(7), k7);

  EXPECT_THROW(color_auto(gen_complete(5)), PreconditionError);
  auto k5 = color_auto(gen_complete(5), SolveBudget{});
  EXPECT_EQ(k5.strategy, "exact");
  EXPECT_EQ(k5.k_used, 5);

  EXPECT_EQ(color_auto(Graph::from_edges(3, {})).strategy, "edgeless");
  EXPECT_EQ(color_auto(gen_complete(2)).strategy, "bipartite");
  EXPECT_EQ(color_auto(gen_path(4)).strategy, "forest");
  EXPECT_EQ(color_auto(gen_kstar(5)).strategy, "mad20_7");
  EXPECT_EQ(color_auto(gen_kstar(6)).strategy, "mad3");
}

TEST(ColorAuto, RandomGraphsAreValid) {
  Rng rng(67);
  for (int i = 0; i < 300; ++i) {
    Graph g = oddcolor::testing::random_sparse(Rational(4), true, 40, rng);
    auto r = color_auto(g);
    expect_valid(g, r);
  }
}

TEST(Constructive, Deterministic) {
  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    Graph g = oddcolor::testing::random_sparse(Rational(20, 7), true, 40, rng);
    EXPECT_EQ(color_mad20_7(g).colors, color_mad20_7(g).colors);
    EXPECT_EQ(color_mad3(g).colors, color_mad3(g).colors);
    EXPECT_EQ(color_auto(g).colors, color_auto(g).colors);
  }
}

TEST(Constructive, JsonShape) {
  EXPECT_EQ(to_json(color_cycle(6)),
            "{\"k\":3,\"colors\":[1,2,3,1,2,3],\"strategy\":\"cycle\",\"bound\":3}\n");
}
