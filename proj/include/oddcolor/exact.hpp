#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits for the exact solvers. Absent fields mean "no limit".
struct SolveBudget {
  std::optional<int> max_k;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> node_limit;
};

enum class SolveStatus { yes, no, budget_exceeded };

struct DecisionResult {
  SolveStatus status = SolveStatus::no;
  std::vector<int> witness;  // odd coloring when status == yes
  std::uint64_t nodes = 0;
};

/// Backtracking search for an odd k-coloring. Vertices are colored in
/// smallest-last (degeneracy) order; a vertex's odd condition is checked as
/// soon as its last neighbor is colored; a new vertex may use at most one
/// color beyond those already in use.
DecisionResult is_odd_k_colorable(const Graph& g, int k, const SolveBudget& budget = {});

struct ExactResult {
  std::optional<int> chi_o;  // empty when the budget ran out first
  std::vector<int> colors;
  std::uint64_t nodes = 0;

  bool exact() const { return chi_o.has_value(); }
};

/// Smallest k with an odd k-coloring, searching upward from the clique /
/// bipartiteness lower bound and never beyond n.
ExactResult chi_o_exact(const Graph& g, const SolveBudget& budget = {});

/// {"chi_o": k, "colors": [...], "status": "exact"|"budget-exceeded"}
std::string exact_report_json(const ExactResult& result);

/// Test oracle: enumerates all k^n assignments for k = 1, 2, ..., 6.
/// Needs n <= 8; throws GraphError if no odd coloring with <= 6 colors exists.
int brute_force_chi_o(const Graph& g);

/// Proper chromatic number by backtracking. Throws BudgetExceeded.
int chromatic_number(const Graph& g, const SolveBudget& budget = {});

/// Smallest-last order: vertices are repeatedly removed at minimum remaining
/// degree (ties to the lowest index); the order returned is the reverse.
std::vector<Vertex> degeneracy_order(const Graph& g);

/// Size of a largest clique (Bron-Kerbosch with pivoting).
int clique_number(const Graph& g);

}  // namespace oddcolor
