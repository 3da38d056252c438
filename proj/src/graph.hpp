#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetawb {

inline constexpr int kMaxVertices = 64;

enum class Errc {
  invalid_argument,
  too_large,
  parse,
  unsupported,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Undirected simple graph on at most 64 vertices. One 64-bit adjacency mask
// per vertex; bit v of row u is set iff uv is an edge. Immutable after build;
// the with_/without_ helpers return modified copies.
class Graph {
public:
  Graph() = default;

  // Duplicate edges collapse silently (set semantics). Loops and endpoints
  // outside [0, n) are errors, as is n outside [0, 64].
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  uint64_t vertex_mask() const { return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1; }

  std::vector<std::pair<int, int>> edges() const;

  // New vertex gets index order(); attach_mask selects its neighbors.
  Graph with_vertex(uint64_t attach_mask) const;
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // Removes u; vertices above it shift down by one.
  Graph without_vertex(int u) const;
  // Induced subgraph on the masked vertices, relabeled in increasing order.
  Graph induced(uint64_t mask) const;

  // Vertex masks of connected components, ordered by lowest vertex.
  std::vector<uint64_t> components() const;

  const uint64_t* rows() const { return adj_.data(); }

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

// The two sides of a bipartition as vertex masks (disjoint, covering all
// vertices; isolated vertices land on side 0 of their own component).
struct Partition2 {
  uint64_t side[2] = {0, 0};
};

std::optional<Partition2> is_bipartite(const Graph& g);

// Length of a shortest odd cycle; empty iff bipartite.
std::optional<int> odd_girth(const Graph& g);

// graph6 encoding (one graph per string, no trailing newline). Strict:
// decode rejects malformed or short headers, truncated payloads, nonzero
// padding bits, and trailing bytes.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace thetawb
