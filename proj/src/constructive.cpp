#include "oddcolor/constructive.hpp"

#include <stdexcept>

#include "json.hpp"
#include "oddcolor/coloring.hpp"
#include "oddcolor/reduction.hpp"
#include "oddcolor/sparsity.hpp"

namespace oddcolor {
namespace {

ColoringResult finish(std::vector<int> colors, int bound, std::string strategy) {
  ColoringResult result;
  result.k_used = max_color(colors);
  result.colors = std::move(colors);
  result.bound = bound;
  result.strategy = std::move(strategy);
  return result;
}

// Reduces g to nothing under the given rule, then replays the records in
// reverse. Each deleted vertex z of record i is colored, in stored order,
// with the smallest color that differs from every colored neighbor and from
// the unique odd color phi_o(u) of every neighbor u, where neighbors range
// over the graph as it was when record i was taken and phi_o reflects the
// current coloring. This keeps, at every step, every vertex with a colored
// neighbor holding an odd color, and it never excludes more colors than the
// configuration's recipe budgets for.
ColoringResult reduce_and_extend(const Graph& g, ReductionRule rule, int k,
                                 const Rational& star_weight, std::string strategy) {
  const int n = g.num_vertices();
  Reducer reducer(g, rule, star_weight);
  std::vector<ReductionRecord> records;
  std::vector<int> removed_at(n, -1);
  std::vector<StarSelection> selections;
  while (!reducer.empty()) {
    auto record = reducer.find();
    if (!record) {
      throw std::logic_error("no reducible configuration in a nonempty graph (" + strategy + ")");
    }
    if (record->kind == ConfigKind::star) {
      selections.push_back({record->anchor, record->anchor_degree, record->anchor_two_neighbors});
    }
    for (Vertex z : record->deleted) removed_at[z] = static_cast<int>(records.size());
    reducer.apply(*record);
    records.push_back(std::move(*record));
  }

  PartialColoring coloring(g, k);
  std::vector<int> avoid;
  for (int i = static_cast<int>(records.size()) - 1; i >= 0; --i) {
    for (Vertex z : records[i].deleted) {
      avoid.clear();
      for (Vertex u : g.neighbors(z)) {
        if (removed_at[u] < i) continue;  // not yet restored
        if (auto c = coloring.color(u)) avoid.push_back(*c);
        if (auto odd = coloring.phi_o(u)) avoid.push_back(*odd);
      }
      coloring.assign(z, choose_color(avoid, k));
    }
  }
  auto result = finish({coloring.colors().begin(), coloring.colors().end()}, k, std::move(strategy));
  result.selections = std::move(selections);
  return result;
}

Rational eps_upper() { return Rational(8, 5); }

ColoringResult color_mad4_unchecked(const Graph& g, const Rational& eps) {
  const int k = static_cast<int>((Rational(8) / eps).floor()) + 2;
  const Rational x = Rational(1) - eps / Rational(2);
  auto result = reduce_and_extend(g, ReductionRule::mad4, k, x, "mad4");
  const Rational threshold = Rational(2) + Rational(2) * x;
  const int degree_cap = k - 4;
  for (const auto& s : result.selections) {
    if (Rational(s.degree) - x * Rational(s.two_neighbors) > threshold || s.degree > degree_cap) {
      throw std::logic_error("selected vertex " + std::to_string(s.vertex) +
                             " violates the discharging bound");
    }
  }
  return result;
}

}  // namespace

std::string to_json(const ColoringResult& result) {
  nlohmann::ordered_json doc;
  doc["k"] = result.k_used;
  doc["colors"] = result.colors;
  doc["strategy"] = result.strategy;
  doc["bound"] = result.bound;
  return doc.dump() + "\n";
}

ColoringResult color_forest(const Graph& g) {
  if (!is_forest(g)) throw PreconditionError("color_forest: the graph contains a cycle");
  return reduce_and_extend(g, ReductionRule::forest, 3, Rational(0), "forest");
}

ColoringResult color_cycle(int n) {
  if (n < 3) throw PreconditionError("color_cycle: n must be at least 3");
  std::vector<int> colors;
  int k = 4;
  if (n % 3 == 0) {
    k = 3;
  } else if (n == 5) {
    return finish({1, 2, 3, 4, 5}, 5, "cycle");
  } else if (n % 3 == 1) {
    colors = {1, 2, 3, 4};
  } else {
    colors = {1, 2, 3, 4, 1, 2, 3, 4};
  }
  // What remains after the prefix is a multiple of 3.
  while (static_cast<int>(colors.size()) < n) {
    for (int c = 1; c <= 3; ++c) colors.push_back(c);
  }
  return finish(std::move(colors), k, "cycle");
}

ColoringResult color_cycle_graph(const Graph& g) {
  auto order = cycle_order(g);
  if (!order) throw PreconditionError("color_cycle: the graph is not a single cycle");
  auto along = color_cycle(g.num_vertices());
  std::vector<int> colors(g.num_vertices());
  for (std::size_t i = 0; i < order->size(); ++i) colors[(*order)[i]] = along.colors[i];
  return finish(std::move(colors), along.bound, "cycle");
}

std::optional<SmallClassification> classify_small(const Graph& g) {
  if (g.num_vertices() == 0) return std::nullopt;
  if (g.num_edges() == 0) return SmallClassification{1, std::vector<int>(g.num_vertices(), 1)};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 0 && g.degree(v) % 2 == 0) return std::nullopt;
  }
  auto two = two_coloring(g);
  if (!two) return std::nullopt;
  return SmallClassification{2, std::move(*two)};
}

ColoringResult color_mad4(const Graph& g, const Rational& eps) {
  if (eps <= Rational(0) || eps > eps_upper()) {
    throw PreconditionError("color_mad4: epsilon must lie in (0, 8/5], got " + eps.to_string());
  }
  if (g.num_vertices() > 0 && !mad_decide(g, Rational(4) - eps).holds) {
    throw PreconditionError("color_mad4: mad(G) exceeds 4 - " + eps.to_string());
  }
  return color_mad4_unchecked(g, eps);
}

ColoringResult color_mad3(const Graph& g) {
  if (g.num_vertices() > 0 && mad_exact(g).mad >= Rational(3)) {
    throw PreconditionError("color_mad3: mad(G) must be below 3");
  }
  return reduce_and_extend(g, ReductionRule::mad3, 6, Rational(0), "mad3");
}

ColoringResult color_mad20_7(const Graph& g) {
  if (g.num_vertices() > 0 && mad_exact(g).mad >= Rational(20, 7)) {
    throw PreconditionError("color_mad20_7: mad(G) must be below 20/7");
  }
  return reduce_and_extend(g, ReductionRule::mad20_7, 5, Rational(0), "mad20_7");
}

ColoringResult color_auto(const Graph& g, const std::optional<SolveBudget>& exact_budget) {
  if (g.num_vertices() == 0) return finish({}, 0, "edgeless");
  if (auto small = classify_small(g)) {
    return finish(std::move(small->colors), small->chi_o,
                  small->chi_o == 1 ? "edgeless" : "bipartite");
  }
  if (is_forest(g)) return color_forest(g);
  if (cycle_order(g)) return color_cycle_graph(g);

  const Rational mad = mad_exact(g).mad;
  if (mad < Rational(20, 7)) return reduce_and_extend(g, ReductionRule::mad20_7, 5, Rational(0), "mad20_7");
  if (mad < Rational(3)) return reduce_and_extend(g, ReductionRule::mad3, 6, Rational(0), "mad3");
  if (mad < Rational(4)) return color_mad4_unchecked(g, Rational(4) - mad);

  if (!exact_budget) {
    throw PreconditionError("color_auto: mad(G) = " + mad.to_string() +
                            " >= 4 admits no bounded odd coloring; pass an exact-solver budget");
  }
  auto exact = chi_o_exact(g, *exact_budget);
  if (!exact.exact()) {
    throw BudgetExceeded("color_auto: exact solver budget exhausted (mad(G) = " +
                         mad.to_string() + ")");
  }
  return finish(std::move(exact.colors), *exact.chi_o, "exact");
}

}  // namespace oddcolor
