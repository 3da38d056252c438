#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace thetawb {

// Multiset of path lengths of a generalized theta graph: two endpoint
// vertices joined by t internally disjoint paths. Kept sorted ascending.
// At least two paths, at most one of length 1 (a repeated length-1 path
// would be a multi-edge).
struct ThetaPattern {
  std::vector<int> lengths;

  static ThetaPattern of(std::vector<int> lengths);
  int path_count() const { return static_cast<int>(lengths.size()); }
  int vertex_count() const;
  int edge_count() const;
};

// The pattern realized as a graph: endpoints 0 and 1, path interiors
// numbered consecutively in pattern order.
Graph theta_graph(const ThetaPattern& p);

// paths[i] realizes lengths[i]: a vertex sequence from u to v whose
// interiors are pairwise disjoint across paths.
struct ThetaWitness {
  int u = 0;
  int v = 0;
  std::vector<std::vector<int>> paths;
};

// Subgraph (not induced) containment. Searches endpoint pairs, assigns the
// longest remaining length first, and abandons a partial path once the
// shortest walk of fitting parity from its head to v inside the unused
// vertices exceeds the remaining budget.
std::optional<ThetaWitness> contains_theta(const Graph& g, const ThetaPattern& p);

bool is_theta_free(const Graph& g, const ThetaPattern& p);

bool theta_witness_valid(const Graph& g, const ThetaPattern& p, const ThetaWitness& w);

// Exact chromatic number; graphs up to 16 vertices.
int chromatic_number(const Graph& g);

// True when deleting any single edge lowers the chromatic number.
// Edgeless graphs are not critical.
bool is_color_critical(const Graph& g);

}  // namespace thetawb
