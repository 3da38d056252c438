#pragma once

#include <vector>

#include "graph.hpp"
#include "spectral.hpp"
#include "theta.hpp"

namespace thetawb {

enum class Objective { Edges, SpectralRadius };

struct SearchSpec {
  int n = 0;
  ThetaPattern pattern;
  bool require_nonbipartite = true;
  Objective objective = Objective::Edges;
  int jobs = 1;
  // Valid edge lower bound (e.g. a known admissible construction); lets the
  // edge search discard branches that cannot reach it.  -1 disables.
  long known_lower_bound = -1;
};

struct ExtremalRecord {
  int n = 0;
  Objective objective = Objective::Edges;
  // Maximum edge count over admissible classes; for the spectral objective,
  // the edge count is the maximum among the rho-maximizers.
  long best_edges = -1;
  // Canonically labeled, sorted by canonical form; ties are all kept.
  std::vector<Graph> maximizers;
  // Certified bracket for the winning spectral radius ([0,0] when empty).
  RhoInterval rho{mpq_class(0), mpq_class(0)};
  // Classes of the target order that passed the hereditary filter.
  long classes_scanned = 0;
  // Independent recheck of every reported maximizer, outside the search path.
  bool verified = false;
};

// Maximum edges over graphs of order n avoiding the pattern as a subgraph
// (non-bipartite by default).  Exhaustive over isomorphism classes, n <= 10.
ExtremalRecord ex_search(const SearchSpec& spec);

// Maximum spectral radius over the same family.  Floating brackets narrow
// the field, exact algebraic comparison confirms the winners.  n <= 9.
ExtremalRecord spex_search(const SearchSpec& spec);

// Extremal graphs among non-bipartite graphs whose shortest odd cycle has
// length at least min_odd_girth (so all shorter odd cycles are forbidden).
ExtremalRecord odd_girth_search(int n, int min_odd_girth, Objective objective, int jobs = 1);

}  // namespace thetawb
