#include "oddcolor/sparsity.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "oddcolor/max_flow.hpp"

namespace oddcolor {
namespace {

// Selection network for a density threshold p/q:
//   source -> edge node (q), edge node -> each endpoint (q), vertex -> sink (p).
// The flow saturates every source arc iff |E(S)| <= (p/q)|S| for every S; the
// saturated flow on the edge->endpoint arcs is then a fractional orientation
// with indegree <= p/q. Otherwise the minimal source side of the min cut
// spans a vertex set maximizing |E(S)| - (p/q)|S| > 0.
struct ThresholdOutcome {
  bool feasible = false;
  std::vector<Vertex> denser;  // when infeasible
  std::optional<FractionalOrientation> orientation;  // when feasible
};

ThresholdOutcome run_threshold(const Graph& g, const std::vector<Edge>& edges,
                               const Rational& threshold, bool want_orientation) {
  if (threshold < Rational(0)) throw std::invalid_argument("density threshold must be >= 0");
  const int n = g.num_vertices();
  const int m = static_cast<int>(edges.size());
  const MaxFlow::Capacity p = threshold.num();
  const MaxFlow::Capacity q = threshold.den();
  const __int128 demand = static_cast<__int128>(m) * q;
  if (demand > (static_cast<__int128>(1) << 62) ||
      static_cast<__int128>(n) * p > (static_cast<__int128>(1) << 62)) {
    throw RationalError("flow capacities for threshold " + threshold.to_string() + " overflow");
  }

  const int source = 0;
  const int sink = 1;
  const int edge_base = 2;
  const int vertex_base = 2 + m;
  MaxFlow flow(2 + m + n);
  std::vector<int> toward_u(m);
  std::vector<int> toward_v(m);
  for (int e = 0; e < m; ++e) {
    flow.add_arc(source, edge_base + e, q);
    toward_u[e] = flow.add_arc(edge_base + e, vertex_base + edges[e].first, q);
    toward_v[e] = flow.add_arc(edge_base + e, vertex_base + edges[e].second, q);
  }
  for (Vertex v = 0; v < n; ++v) flow.add_arc(vertex_base + v, sink, p);

  ThresholdOutcome out;
  out.feasible = flow.solve(source, sink) == static_cast<MaxFlow::Capacity>(demand);
  if (!out.feasible) {
    auto side = flow.source_side(source);
    for (Vertex v = 0; v < n; ++v) {
      if (side[vertex_base + v]) out.denser.push_back(v);
    }
  } else if (want_orientation) {
    FractionalOrientation o;
    o.indegree.assign(n, Rational(0));
    o.arcs.reserve(m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      Rational to_v(flow.flow(toward_v[e]), q);
      Rational to_u(flow.flow(toward_u[e]), q);
      o.arcs.push_back({u, v, to_v, to_u});
      o.indegree[v] += to_v;
      o.indegree[u] += to_u;
    }
    out.orientation = std::move(o);
  }
  return out;
}

DensestWitness make_witness(const Graph& g, std::vector<Vertex> vertices) {
  const auto inner = induced_edge_count(g, vertices);
  Rational density(inner, static_cast<Rational::Int>(vertices.size()));
  return {std::move(vertices), density, density * Rational(2)};
}

}  // namespace

Rational FractionalOrientation::max_indegree() const {
  Rational best(0);
  for (const auto& d : indegree) best = std::max(best, d);
  return best;
}

DensestWitness mad_exact(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw GraphError("mad is undefined for the empty graph");
  const int m = g.num_edges();
  if (m == 0) return {{0}, Rational(0), Rational(0)};

  const auto edges = g.edges();
  const Rational::Int pairs = static_cast<Rational::Int>(n) * (n - 1);
  // Distinct subgraph densities differ by at least 1/(n(n-1)).
  const Rational gap(1, pairs);
  // Midpoints live on a grid fine enough that rounding keeps them strictly
  // inside the interval and the interval keeps shrinking below the gap.
  const Rational::Int grid = 4 * pairs;

  Rational lo(m, n);
  Rational hi(g.max_degree(), 2);
  while (hi - lo >= gap) {
    Rational mid(((lo + hi) / Rational(2) * Rational(grid)).floor(), grid);
    auto outcome = run_threshold(g, edges, mid, false);
    if (outcome.feasible) {
      hi = mid;
    } else {
      lo = make_witness(g, std::move(outcome.denser)).density;
    }
  }

  const Rational best = lo;
  if (!run_threshold(g, edges, best, false).feasible) {
    throw std::logic_error("densest subgraph search failed to certify " + best.to_string());
  }
  // Just below the optimum the maximizers of |E(S)| - t|S| are exactly the
  // largest densest subgraph.
  const Rational::Int fine = 2 * pairs;
  const Rational below(Rational(best * Rational(fine)).ceil() - 1, fine);
  auto outcome = run_threshold(g, edges, below, false);
  DensestWitness witness = make_witness(g, std::move(outcome.denser));
  if (outcome.feasible || witness.density != best) {
    throw std::logic_error("densest subgraph witness does not reproduce " + best.to_string());
  }
  return witness;
}

MadDecision mad_decide(const Graph& g, const Rational& alpha) {
  if (g.num_vertices() == 0) throw GraphError("mad is undefined for the empty graph");
  if (alpha < Rational(0)) throw std::invalid_argument("alpha must be >= 0");
  const auto edges = g.edges();
  auto outcome = run_threshold(g, edges, alpha / Rational(2), true);
  MadDecision decision;
  decision.holds = outcome.feasible;
  if (outcome.feasible) {
    decision.orientation = std::move(outcome.orientation);
  } else {
    decision.denser = make_witness(g, std::move(outcome.denser));
  }
  return decision;
}

std::optional<FractionalOrientation> fractional_orientation(const Graph& g,
                                                            const Rational& alpha) {
  if (alpha < Rational(0)) throw std::invalid_argument("alpha must be >= 0");
  const auto edges = g.edges();
  return run_threshold(g, edges, alpha / Rational(2), true).orientation;
}

Rational brute_force_mad(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 1 || n > 20) throw GraphError("brute-force mad needs 1 <= n <= 20");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (auto [u, v] : g.edges()) {
    adjacency[u] |= 1u << v;
    adjacency[v] |= 1u << u;
  }
  std::int64_t best_edges = 0;
  std::int64_t best_size = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t twice = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) twice += std::popcount(adjacency[v] & mask);
    }
    const std::int64_t size = std::popcount(mask);
    if (twice / 2 * best_size > best_edges * size) {
      best_edges = twice / 2;
      best_size = size;
    }
  }
  return Rational(2 * best_edges, best_size);
}

std::string witness_report(const DensestWitness& w, bool include_witness) {
  std::ostringstream os;
  os << "mad " << w.mad << '\n';
  if (include_witness) {
    os << "density " << w.density << '\n' << "witness";
    for (Vertex v : w.vertices) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string orientation_report(const FractionalOrientation& o, const Rational& alpha) {
  std::ostringstream os;
  os << "orientation alpha " << alpha << '\n';
  for (const auto& arc : o.arcs) os << arc.u << ' ' << arc.v << ' ' << arc.toward_v << '\n';
  os << "max-indegree " << o.max_indegree() << '\n';
  return os.str();
}

}  // namespace oddcolor
