#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace thetawb {

struct CanonicalResult {
  Graph canon;                               // canonically relabeled copy
  std::vector<int> labeling;                 // labeling[pos] = original vertex
  std::vector<std::vector<int>> generators;  // automorphism generators (original labels)
  std::vector<int> orbit;                    // orbit[v] = least vertex in v's orbit
};

// Canonical labeling by iterated neighborhood refinement with backtracking
// over the vertices of the first non-singleton cell; sibling branches are
// pruned by orbits of the automorphisms discovered so far (only those fixing
// the current branching base). The generator list generates the full
// automorphism group.
CanonicalResult canonical_analyze(const Graph& g);

Graph canonical_graph(const Graph& g);

// graph6 string of the canonical copy. Two graphs get the same string iff
// they are isomorphic; lexicographic order gives a total order on classes.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace thetawb
