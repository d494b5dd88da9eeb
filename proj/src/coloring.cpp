#include "oddcolor/coloring.hpp"

#include <algorithm>

#include "json.hpp"

namespace oddcolor {

PartialColoring::PartialColoring(const Graph& g, int k)
    : graph_(&g),
      k_(k),
      color_(g.num_vertices(), 0),
      multiplicity_(g.num_vertices()),
      odd_count_(g.num_vertices(), 0),
      odd_xor_(g.num_vertices(), 0),
      colored_neighbors_(g.num_vertices(), 0) {
  if (k < 1) throw ColoringError("a coloring needs at least one color");
}

void PartialColoring::bump(Vertex v, int color, int delta) {
  auto& table = multiplicity_[v];
  int& count = table[color];
  count += delta;
  if (count % 2 != 0) {
    ++odd_count_[v];
  } else {
    --odd_count_[v];
  }
  odd_xor_[v] ^= color;
  colored_neighbors_[v] += delta;
  if (count == 0) table.erase(color);
}

void PartialColoring::assign(Vertex v, int color) {
  if (color_[v] != 0) {
    throw ColoringError("vertex " + std::to_string(v) + " is already colored");
  }
  if (color < 1 || color > k_) {
    throw ColoringError("color " + std::to_string(color) + " outside 1.." + std::to_string(k_));
  }
  for (Vertex w : graph_->neighbors(v)) {
    if (color_[w] == color) {
      throw ColoringError("color " + std::to_string(color) + " on vertex " + std::to_string(v) +
                          " clashes with neighbor " + std::to_string(w));
    }
  }
  color_[v] = color;
  for (Vertex w : graph_->neighbors(v)) bump(w, color, +1);
}

void PartialColoring::unassign(Vertex v) {
  int color = color_[v];
  if (color == 0) return;
  color_[v] = 0;
  for (Vertex w : graph_->neighbors(v)) bump(w, color, -1);
}

std::vector<int> PartialColoring::odd_color_set(Vertex v) const {
  std::vector<int> out;
  for (auto [color, count] : multiplicity_[v]) {
    if (count % 2 != 0) out.push_back(color);
  }
  return out;
}

int PartialColoring::multiplicity(Vertex v, int color) const {
  auto it = multiplicity_[v].find(color);
  return it == multiplicity_[v].end() ? 0 : it->second;
}

int choose_color(std::span<const int> avoid, int k) {
  for (int c = 1; c <= k; ++c) {
    if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
  }
  throw ColorsExhausted("all " + std::to_string(k) + " colors are excluded");
}

std::string Violation::to_string() const {
  if (kind == Kind::improper_edge) {
    return "improper-edge " + std::to_string(u) + " " + std::to_string(v);
  }
  return "no-odd-color " + std::to_string(u);
}

Verification is_odd_coloring(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.num_vertices()) {
    throw ColoringError("coloring has " + std::to_string(colors.size()) + " entries for " +
                        std::to_string(g.num_vertices()) + " vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (colors[v] <= 0) throw ColoringError("vertex " + std::to_string(v) + " is uncolored");
  }
  Verification result;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      result.violations.push_back({Violation::Kind::improper_edge, u, v});
    }
  }
  std::vector<int> scratch;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    scratch.clear();
    for (Vertex w : nb) scratch.push_back(colors[w]);
    std::sort(scratch.begin(), scratch.end());
    bool has_odd = false;
    for (std::size_t i = 0; i < scratch.size() && !has_odd;) {
      std::size_t j = i;
      while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
      has_odd = (j - i) % 2 == 1;
      i = j;
    }
    if (!has_odd) result.violations.push_back({Violation::Kind::no_odd_color, v});
  }
  result.valid = result.violations.empty();
  return result;
}

int max_color(std::span<const int> colors) {
  int best = 0;
  for (int c : colors) best = std::max(best, c);
  return best;
}

ColoringFile parse_coloring_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ColoringError(std::string("coloring JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("colors") ||
      !doc["k"].is_number_integer() || !doc["colors"].is_array()) {
    throw ColoringError("coloring JSON must be an object with integer 'k' and array 'colors'");
  }
  ColoringFile file;
  file.k = doc["k"].get<int>();
  if (file.k < 1) throw ColoringError("coloring JSON: k must be positive");
  for (const auto& c : doc["colors"]) {
    if (!c.is_number_integer()) throw ColoringError("coloring JSON: colors must be integers");
    int value = c.get<int>();
    if (value < 1 || value > file.k) {
      throw ColoringError("coloring JSON: color " + std::to_string(value) + " outside 1.." +
                          std::to_string(file.k));
    }
    file.colors.push_back(value);
  }
  return file;
}

std::string to_coloring_json(const ColoringFile& file) {
  nlohmann::ordered_json doc;
  doc["k"] = file.k;
  doc["colors"] = file.colors;
  return doc.dump() + "\n";
}

}  // namespace oddcolor
