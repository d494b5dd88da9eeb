#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when every allowed color is excluded. In the constructive
/// colorers this means a bound was violated, which is a bug.
class ColorsExhausted : public ColoringError {
 public:
  using ColoringError::ColoringError;
};

/// A partial proper coloring with, for every vertex, the multiplicity of each
/// color among its currently colored neighbors. Colors are 1..k; 0 means
/// uncolored. The graph must outlive the coloring.
class PartialColoring {
 public:
  PartialColoring(const Graph& g, int k);

  const Graph& graph() const { return *graph_; }
  int k() const { return k_; }

  bool is_colored(Vertex v) const { return color_[v] != 0; }
  std::optional<int> color(Vertex v) const {
    if (color_[v] == 0) return std::nullopt;
    return color_[v];
  }
  /// Per-vertex colors with 0 for uncolored vertices.
  std::span<const int> colors() const { return color_; }

  /// Colors v; throws ColoringError if v is colored already, the color is
  /// outside 1..k, or a colored neighbor has the same color.
  void assign(Vertex v, int color);
  void unassign(Vertex v);

  /// Colors of odd multiplicity among the colored neighbors of v, ascending.
  std::vector<int> odd_color_set(Vertex v) const;
  int odd_color_count(Vertex v) const { return odd_count_[v]; }

  /// The odd color of v when it is the only one, else empty.
  std::optional<int> phi_o(Vertex v) const {
    if (odd_count_[v] != 1) return std::nullopt;
    return odd_xor_[v];
  }

  int multiplicity(Vertex v, int color) const;
  int colored_neighbor_count(Vertex v) const { return colored_neighbors_[v]; }
  const std::map<int, int>& parity_table(Vertex v) const { return multiplicity_[v]; }

 private:
  void bump(Vertex v, int color, int delta);

  const Graph* graph_;
  int k_;
  std::vector<int> color_;
  std::vector<std::map<int, int>> multiplicity_;
  std::vector<int> odd_count_;
  // XOR of the odd colors; equals the odd color when there is exactly one.
  std::vector<int> odd_xor_;
  std::vector<int> colored_neighbors_;
};

/// Smallest color in 1..k not listed in avoid. Throws ColorsExhausted when
/// avoid covers all of 1..k.
int choose_color(std::span<const int> avoid, int k);

struct Violation {
  enum class Kind { improper_edge, no_odd_color };

  Kind kind;
  Vertex u;
  Vertex v = -1;  // second endpoint for improper_edge

  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verification {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks that colors (one positive color per vertex) is proper and gives
/// every non-isolated vertex a color of odd multiplicity on its
/// neighborhood. Lists every violation. Throws ColoringError on an
/// uncolored vertex (color <= 0) or a size mismatch.
Verification is_odd_coloring(const Graph& g, std::span<const int> colors);

/// Largest color in a total assignment (0 for an empty graph).
int max_color(std::span<const int> colors);

/// The coloring file: {"k": K, "colors": [c_0, ..., c_{n-1}]} with 1-based
/// colors in 1..K.
struct ColoringFile {
  int k = 0;
  std::vector<int> colors;
};

ColoringFile parse_coloring_json(std::string_view text);
std::string to_coloring_json(const ColoringFile& file);

}  // namespace oddcolor
