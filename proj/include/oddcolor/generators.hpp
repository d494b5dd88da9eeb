#pragma once

#include <span>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// K_n with every edge subdivided once. Hubs are vertices 0..n-1; the
/// subdivision vertex of hub pair (i, j), i < j, follows in lexicographic
/// pair order.
Graph gen_kstar(int n);

/// Replaces every edge of h by a path of length two through a fresh vertex.
/// Original vertices keep their indices; fresh vertices follow in h.edges()
/// order.
Graph subdivide(const Graph& h);

/// C_n on vertices 0..n-1 in cyclic order.
Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);

/// C_n (3 | n) with leaf_counts[j] pendant vertices attached to cycle vertex
/// v_{3(j+1)}, i.e. index 3j+2. Leaves are appended after the cycle.
Graph gen_cycle_with_leaves(int n, std::span<const int> leaf_counts);

/// Odd n-coloring of gen_kstar(n): hubs get 1..n, then each subdivision
/// vertex takes the smallest color missing from its two hub colors and the
/// hubs' unique odd neighborhood colors at that moment.
std::vector<int> canonical_kstar_coloring(int n);

}  // namespace oddcolor
