#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcolor/exact.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/rational.hpp"

namespace oddcolor {

/// The input does not satisfy a colorer's hypothesis (not a forest, mad too
/// large, epsilon out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 4+-vertex chosen by the mad < 4 reduction, with its degree and number
/// of 2-neighbors at the time it was chosen.
struct StarSelection {
  Vertex vertex;
  int degree;
  int two_neighbors;
};

struct ColoringResult {
  std::vector<int> colors;
  int k_used = 0;  // largest color used
  int bound = 0;
  std::string strategy;
  std::vector<StarSelection> selections;  // color_mad4 only
};

/// {"k": k_used, "colors": [...], "strategy": "...", "bound": b}
std::string to_json(const ColoringResult& result);

/// Odd coloring of a forest with at most 3 colors: leaves are peeled onto a
/// stack and colored in reverse, each avoiding its neighbor's color and that
/// neighbor's unique odd color.
ColoringResult color_forest(const Graph& g);

/// Odd coloring of C_n (vertices in cyclic order): 1,2,3 repeated when 3 | n;
/// five colors for n = 5; otherwise a 1,2,3,4 (n = 1 mod 3) or
/// 1,2,3,4,1,2,3,4 (n = 2 mod 3) prefix followed by 1,2,3 repeated.
ColoringResult color_cycle(int n);

/// color_cycle applied to a graph that is a single cycle, in any labelling.
ColoringResult color_cycle_graph(const Graph& g);

struct SmallClassification {
  int chi_o;                // 1 or 2
  std::vector<int> colors;  // an odd coloring achieving it
};

/// chi_o = 1 for an edgeless graph, chi_o = 2 for a bipartite graph whose
/// degrees are all 0 or odd, empty otherwise (or for the empty graph).
std::optional<SmallClassification> classify_small(const Graph& g);

/// Odd coloring with at most floor(8/eps) + 2 colors when mad(G) <= 4 - eps
/// and 0 < eps <= 8/5.
ColoringResult color_mad4(const Graph& g, const Rational& eps);

/// Odd coloring with at most 6 colors when mad(G) < 3.
ColoringResult color_mad3(const Graph& g);

/// Odd coloring with at most 5 colors when mad(G) < 20/7.
ColoringResult color_mad20_7(const Graph& g);

/// Picks the strongest applicable bound from the exact mad: edgeless,
/// bipartite with odd degrees, forest, cycle, mad < 20/7, mad < 3,
/// mad < 4. Denser graphs go to the exact solver when a budget is given and
/// are rejected with PreconditionError otherwise.
ColoringResult color_auto(const Graph& g, const std::optional<SolveBudget>& exact_budget = {});

}  // namespace oddcolor
