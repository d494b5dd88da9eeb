#include "oddcolor/exact.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "oddcolor/coloring.hpp"

namespace oddcolor {

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.insert({--degree[w], w});
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x, int& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, static_cast<int>(r.size()));
    return;
  }
  if (static_cast<int>(r.size() + p.size()) <= best) return;
  // Pivot on the candidate with the most neighbors in p.
  Vertex pivot = -1;
  int pivot_hits = -1;
  for (const auto* set : {&p, &x}) {
    for (Vertex u : *set) {
      int hits = 0;
      for (Vertex w : p) hits += g.has_edge(u, w);
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
  }
  std::vector<Vertex> candidates;
  for (Vertex v : p) {
    if (!g.has_edge(pivot, v)) candidates.push_back(v);
  }
  for (Vertex v : candidates) {
    std::vector<Vertex> p2;
    std::vector<Vertex> x2;
    for (Vertex w : p) {
      if (g.has_edge(v, w)) p2.push_back(w);
    }
    for (Vertex w : x) {
      if (g.has_edge(v, w)) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), best);
    r.pop_back();
    std::erase(p, v);
    x.push_back(v);
  }
}

class Deadline {
 public:
  explicit Deadline(const SolveBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; true once a limit is hit.
  bool tick(std::uint64_t& nodes) const {
    ++nodes;
    if (budget_.node_limit && nodes > *budget_.node_limit) return true;
    if (budget_.time_limit && (nodes & 1023u) == 0) {
      return std::chrono::steady_clock::now() - start_ > *budget_.time_limit;
    }
    return false;
  }

 private:
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

class OddSearch {
 public:
  OddSearch(const Graph& g, int k, const Deadline& deadline, std::uint64_t& nodes)
      : g_(g),
        k_(k),
        deadline_(deadline),
        nodes_(nodes),
        order_(degeneracy_order(g)),
        color_(g.num_vertices(), 0),
        count_(static_cast<std::size_t>(g.num_vertices()) * (k + 1), 0),
        odd_(g.num_vertices(), 0),
        saturated_by_(g.num_vertices()) {
    std::vector<int> position(g.num_vertices());
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = static_cast<int>(i);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      int last = -1;
      for (Vertex w : g.neighbors(u)) last = std::max(last, position[w]);
      if (last >= 0) saturated_by_[last].push_back(u);
    }
  }

  SolveStatus run() {
    if (g_.num_vertices() == 0) return SolveStatus::yes;
    return search(0, 0);
  }

  std::vector<int> colors() const { return color_; }

 private:
  int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  void place(Vertex v, int c, int delta) {
    color_[v] = delta > 0 ? c : 0;
    for (Vertex w : g_.neighbors(v)) {
      int& cnt = count(w, c);
      cnt += delta;
      odd_[w] += (cnt % 2 != 0) ? 1 : -1;
    }
  }

  SolveStatus search(std::size_t index, int used) {
    if (index == order_.size()) return SolveStatus::yes;
    if (deadline_.tick(nodes_)) return SolveStatus::budget_exceeded;
    const Vertex v = order_[index];
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (count(v, c) != 0) continue;  // a colored neighbor already has c
      place(v, c, +1);
      bool ok = true;
      for (Vertex u : saturated_by_[index]) {
        if (odd_[u] == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        SolveStatus status = search(index + 1, std::max(used, c));
        if (status != SolveStatus::no) return status;
      }
      place(v, c, -1);
    }
    return SolveStatus::no;
  }

  const Graph& g_;
  int k_;
  const Deadline& deadline_;
  std::uint64_t& nodes_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> odd_;
  // saturated_by_[i]: vertices whose last neighbor in the order is order_[i].
  std::vector<std::vector<Vertex>> saturated_by_;
};

DecisionResult decide(const Graph& g, int k, const Deadline& deadline, std::uint64_t& nodes) {
  DecisionResult result;
  OddSearch search(g, k, deadline, nodes);
  result.status = search.run();
  if (result.status == SolveStatus::yes) result.witness = search.colors();
  result.nodes = nodes;
  return result;
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  std::vector<Vertex> r;
  std::vector<Vertex> p(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) p[v] = v;
  int best = 1;
  bron_kerbosch(g, r, std::move(p), {}, best);
  return best;
}

DecisionResult is_odd_k_colorable(const Graph& g, int k, const SolveBudget& budget) {
  if (k < 1) throw std::invalid_argument("is_odd_k_colorable: k must be at least 1");
  Deadline deadline(budget);
  std::uint64_t nodes = 0;
  return decide(g, k, deadline, nodes);
}

ExactResult chi_o_exact(const Graph& g, const SolveBudget& budget) {
  ExactResult result;
  const int n = g.num_vertices();
  if (n == 0) {
    result.chi_o = 0;
    return result;
  }
  int lower = 1;
  if (g.num_edges() > 0) {
    lower = std::max(2, clique_number(g));
    if (!two_coloring(g)) lower = std::max(lower, 3);
  }
  const int upper = budget.max_k ? std::min(n, *budget.max_k) : n;
  Deadline deadline(budget);
  for (int k = lower; k <= upper; ++k) {
    auto decision = decide(g, k, deadline, result.nodes);
    if (decision.status == SolveStatus::budget_exceeded) return result;
    if (decision.status == SolveStatus::yes) {
      result.chi_o = k;
      result.colors = std::move(decision.witness);
      return result;
    }
  }
  return result;
}

std::string exact_report_json(const ExactResult& result) {
  nlohmann::ordered_json doc;
  doc["chi_o"] = result.chi_o ? nlohmann::ordered_json(*result.chi_o) : nlohmann::ordered_json();
  doc["colors"] = result.colors;
  doc["status"] = result.exact() ? "exact" : "budget-exceeded";
  return doc.dump() + "\n";
}

int brute_force_chi_o(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 8) throw GraphError("brute_force_chi_o needs n <= 8");
  if (n == 0) return 0;
  const auto edges = g.edges();
  std::vector<int> colors(n);
  for (int k = 1; k <= 6; ++k) {
    std::fill(colors.begin(), colors.end(), 1);
    while (true) {
      bool proper = std::all_of(edges.begin(), edges.end(),
                                [&](const Edge& e) { return colors[e.first] != colors[e.second]; });
      bool odd = proper;
      for (Vertex v = 0; v < n && odd; ++v) {
        if (g.degree(v) == 0) continue;
        bool found = false;
        for (int c = 1; c <= k && !found; ++c) {
          int times = 0;
          for (Vertex w : g.neighbors(v)) times += colors[w] == c;
          found = times % 2 == 1;
        }
        odd = found;
      }
      if (odd) return k;
      int i = 0;
      while (i < n && colors[i] == k) colors[i++] = 1;
      if (i == n) break;
      ++colors[i];
    }
  }
  throw GraphError("brute_force_chi_o: no odd coloring with at most 6 colors");
}

int chromatic_number(const Graph& g, const SolveBudget& budget) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  if (g.num_edges() == 0) return 1;
  const auto order = degeneracy_order(g);
  Deadline deadline(budget);
  std::uint64_t nodes = 0;
  std::vector<int> color(n, 0);
  for (int k = std::max(2, clique_number(g)); k <= n; ++k) {
    // Iterative backtracking: next[i] is the next color to try at depth i.
    std::vector<int> next(n + 1, 1);
    std::vector<int> used(n + 1, 0);
    std::fill(color.begin(), color.end(), 0);
    int depth = 0;
    while (depth >= 0) {
      if (depth == n) return k;
      if (deadline.tick(nodes)) throw BudgetExceeded("chromatic_number: budget exhausted");
      const Vertex v = order[depth];
      color[v] = 0;
      int chosen = 0;
      for (int c = next[depth]; c <= std::min(k, used[depth] + 1); ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v)) clash = clash || color[w] == c;
        if (!clash) {
          chosen = c;
          break;
        }
      }
      if (chosen == 0) {
        next[depth] = 1;
        --depth;
        continue;
      }
      color[v] = chosen;
      next[depth] = chosen + 1;
      used[depth + 1] = std::max(used[depth], chosen);
      next[depth + 1] = 1;
      ++depth;
    }
  }
  return n;
}

}  // namespace oddcolor
