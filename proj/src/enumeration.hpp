#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace thetawb {

using GraphVisitor = std::function<void(const Graph&)>;

// Returning false rejects a graph and, implicitly, every graph it would be
// grown into.  The predicate must be hereditary (closed under taking induced
// subgraphs) for the enumeration to stay exhaustive.
using HereditaryFilter = std::function<bool(const Graph&)>;

struct EnumerateOptions {
  int jobs = 1;
  HereditaryFilter filter;
  // Skip branches that cannot reach this many edges by the target order
  // even if completed greedily.  -1 disables the bound.
  long min_edges_at_target = -1;
};

// Visits one representative of every isomorphism class of simple graphs of
// the given order (those admitted by the filter).  Exactly-once generation
// by canonical augmentation: a child is kept only when the vertex it appends
// falls in the same automorphism orbit as the canonically last vertex.
// With jobs > 1 the visitor is called from worker threads and must be
// thread-safe; visit order is unspecified either way.  Order at most 10.
void enumerate_all(int n, const GraphVisitor& visit, const EnumerateOptions& opts = {});

// Reference implementation: grow level by level attaching every subset,
// deduplicate by canonical form.  Order at most 8.  Results are canonically
// labeled and sorted by canonical form.
std::vector<Graph> naive_enumerate(int n, const HereditaryFilter& filter = nullptr);

// One attachment mask per orbit of the automorphism group acting on vertex
// subsets.  Orbit representatives are the DSU-least masks.
std::vector<std::uint64_t> attachment_orbit_reps(const Graph& g);

long count_classes(int n, const EnumerateOptions& opts = {});

}  // namespace thetawb
