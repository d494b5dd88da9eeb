#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/rational.hpp"

namespace oddcolor {

/// A densest subgraph: vertices S with density |E(G[S])|/|S| and
/// mad = 2 * density.
struct DensestWitness {
  std::vector<Vertex> vertices;
  Rational density;
  Rational mad;
};

/// Splits every edge {u, v} into weight toward v and weight toward u,
/// summing to 1. indegree[v] collects the weight pointing at v.
struct FractionalOrientation {
  struct Arc {
    Vertex u;
    Vertex v;
    Rational toward_v;
    Rational toward_u;
  };
  std::vector<Arc> arcs;  // one per edge, in Graph::edges() order
  std::vector<Rational> indegree;

  Rational max_indegree() const;
};

/// Maximum average degree with a witness. Bisects the density over rationals
/// with max-flow decisions until the interval is shorter than 1/(n(n-1)),
/// then certifies the result exactly. The witness is the largest densest
/// subgraph (the unique inclusion-minimal min-cut side just below the
/// optimum). Throws GraphError for the empty graph.
DensestWitness mad_exact(const Graph& g);

struct MadDecision {
  bool holds = false;  // mad(G) <= alpha
  std::optional<FractionalOrientation> orientation;  // when holds
  std::optional<DensestWitness> denser;               // when not: density > alpha/2
};

MadDecision mad_decide(const Graph& g, const Rational& alpha);

/// Orientation with every indegree <= alpha/2, or empty when mad(G) > alpha.
std::optional<FractionalOrientation> fractional_orientation(const Graph& g,
                                                            const Rational& alpha);

/// Enumerates every non-empty vertex subset. Test oracle; needs 1 <= n <= 20.
Rational brute_force_mad(const Graph& g);

/// "mad p/q", then optionally "density p/q" and "witness v1 v2 ...".
std::string witness_report(const DensestWitness& w, bool include_witness);

/// Header "orientation alpha p/q", one "u v w" line per edge with w the
/// weight toward v, then "max-indegree p/q".
std::string orientation_report(const FractionalOrientation& o, const Rational& alpha);

}  // namespace oddcolor
