#include "theta.hpp"

#include <algorithm>
#include <array>

namespace thetawb {

ThetaPattern ThetaPattern::of(std::vector<int> lengths) {
  if (lengths.size() < 2)
    throw Error(Errc::invalid_argument, "theta pattern needs at least two paths");
  std::sort(lengths.begin(), lengths.end());
  if (lengths.front() < 1) throw Error(Errc::invalid_argument, "theta path length must be positive");
  if (lengths[1] < 2)
    throw Error(Errc::invalid_argument, "theta pattern allows at most one length-1 path");
  ThetaPattern p;
  p.lengths = std::move(lengths);
  return p;
}

int ThetaPattern::vertex_count() const {
  int n = 2;
  for (int l : lengths) n += l - 1;
  return n;
}

int ThetaPattern::edge_count() const {
  int e = 0;
  for (int l : lengths) e += l;
  return e;
}

Graph theta_graph(const ThetaPattern& p) {
  if (p.vertex_count() > kMaxVertices) throw Error(Errc::too_large, "theta graph too large");
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  for (int l : p.lengths) {
    int prev = 0;
    for (int i = 1; i < l; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::build(p.vertex_count(), edges);
}

namespace {

class ThetaSearch {
public:
  ThetaSearch(const Graph& g, std::vector<int> lens_desc)
      : g_(g), lens_(std::move(lens_desc)) {}

  std::optional<std::vector<std::vector<int>>> find(int u, int v) {
    u_ = u;
    v_ = v;
    used_ = 0;
    // Every path must be walkable on its own before any interiors are
    // committed; this kills most endpoint pairs outright (typically on
    // parity) without touching the backtracker.
    for (int len : lens_)
      if (!feasible(u, len)) return std::nullopt;
    paths_.assign(lens_.size(), {});
    if (assign(0)) return paths_;
    return std::nullopt;
  }

private:
  const Graph& g_;
  std::vector<int> lens_;
  int u_ = 0, v_ = 0;
  uint64_t used_ = 0;
  std::vector<std::vector<int>> paths_;

  // Shortest walk from head to v_ of the same parity as budget, inside the
  // vertices not yet used as interiors, must not exceed the budget. The
  // walk may not pass through v_ before its final step: a path never does,
  // and allowing it would let the triangle hanging off a dense bipartite
  // block fake parity for the whole block.
  bool feasible(int head, int budget) const {
    uint64_t avail = g_.vertex_mask() & ~used_ & ~(uint64_t{1} << u_);
    avail |= uint64_t{1} << head;
    avail |= uint64_t{1} << v_;
    std::array<int8_t, 2 * kMaxVertices> dist;
    dist.fill(-1);
    std::array<int8_t, 2 * kMaxVertices> queue;
    int qhead = 0, qtail = 0;
    dist[static_cast<size_t>(2 * head)] = 0;
    queue[static_cast<size_t>(qtail++)] = static_cast<int8_t>(2 * head);
    int want = 2 * v_ + (budget & 1);
    if (2 * head == want) return true;
    while (qhead < qtail) {
      int state = queue[static_cast<size_t>(qhead++)];
      int x = state >> 1, par = state & 1;
      if (dist[static_cast<size_t>(state)] >= budget) break;
      uint64_t nb = g_.neighbors(x) & avail;
      while (nb) {
        int y = std::countr_zero(nb);
        nb &= nb - 1;
        int nstate = 2 * y + (par ^ 1);
        if (nstate == want) return true;
        if (y == v_) continue;
        if (dist[static_cast<size_t>(nstate)] >= 0) continue;
        dist[static_cast<size_t>(nstate)] = static_cast<int8_t>(dist[static_cast<size_t>(state)] + 1);
        queue[static_cast<size_t>(qtail++)] = static_cast<int8_t>(nstate);
      }
    }
    return false;
  }

  bool assign(size_t idx) {
    if (idx == lens_.size()) return true;
    // The interiors committed so far may have cut off a later path; cheaper
    // to notice now than after enumerating this one.
    for (size_t j = idx + 1; j < lens_.size(); ++j)
      if (!feasible(u_, lens_[j])) return false;
    std::vector<int> interior;
    return extend(idx, interior, u_, lens_[idx]);
  }

  bool extend(size_t idx, std::vector<int>& interior, int head, int left) {
    if (left == 1) {
      if (!g_.has_edge(head, v_)) return false;
      paths_[idx].clear();
      paths_[idx].push_back(u_);
      paths_[idx].insert(paths_[idx].end(), interior.begin(), interior.end());
      paths_[idx].push_back(v_);
      if (assign(idx + 1)) return true;
      return false;
    }
    if (!feasible(head, left)) return false;
    uint64_t options = g_.neighbors(head) & ~used_ & g_.vertex_mask();
    options &= ~(uint64_t{1} << u_);
    options &= ~(uint64_t{1} << v_);
    while (options) {
      int w = std::countr_zero(options);
      options &= options - 1;
      interior.push_back(w);
      used_ |= uint64_t{1} << w;
      bool ok = extend(idx, interior, w, left - 1);
      used_ &= ~(uint64_t{1} << w);
      interior.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<ThetaWitness> contains_theta(const Graph& g, const ThetaPattern& p) {
  if (p.vertex_count() > g.order()) return std::nullopt;
  bool has_unit = p.lengths.front() == 1;
  std::vector<int> lens_desc(p.lengths.rbegin(), p.lengths.rend());
  if (has_unit) lens_desc.pop_back();
  ThetaSearch search(g, lens_desc);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (has_unit && !g.has_edge(u, v)) continue;
      auto paths = search.find(u, v);
      if (!paths) continue;
      ThetaWitness w;
      w.u = u;
      w.v = v;
      w.paths.resize(p.lengths.size());
      // paths are in descending-length order; pattern is ascending.
      size_t from = paths->size();
      size_t at = 0;
      if (has_unit) w.paths[at++] = {u, v};
      for (; at < p.lengths.size(); ++at) w.paths[at] = std::move((*paths)[--from]);
      return w;
    }
  }
  return std::nullopt;
}

bool is_theta_free(const Graph& g, const ThetaPattern& p) { return !contains_theta(g, p); }

bool theta_witness_valid(const Graph& g, const ThetaPattern& p, const ThetaWitness& w) {
  int n = g.order();
  if (w.u < 0 || w.u >= n || w.v < 0 || w.v >= n || w.u == w.v) return false;
  if (w.paths.size() != p.lengths.size()) return false;
  uint64_t interiors_seen = 0;
  for (size_t i = 0; i < w.paths.size(); ++i) {
    const auto& path = w.paths[i];
    if (static_cast<int>(path.size()) != p.lengths[i] + 1) return false;
    if (path.front() != w.u || path.back() != w.v) return false;
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      if (path[j] < 0 || path[j] >= n || path[j + 1] < 0 || path[j + 1] >= n) return false;
      if (!g.has_edge(path[j], path[j + 1])) return false;
    }
    for (size_t j = 1; j + 1 < path.size(); ++j) {
      int x = path[j];
      if (x == w.u || x == w.v) return false;
      uint64_t bit = uint64_t{1} << x;
      if (interiors_seen & bit) return false;
      interiors_seen |= bit;
    }
  }
  return true;
}

namespace {

constexpr int kChromaticCap = 16;

bool colorable(const Graph& g, int k, const std::vector<int>& order) {
  int n = g.order();
  std::vector<int> color(static_cast<size_t>(n), -1);
  // Vertex `order[i]` takes a color in [0, min(k-1, colors used so far + 1)]
  // to break color-permutation symmetry.
  std::vector<int> maxused(static_cast<size_t>(n) + 1, -1);
  size_t i = 0;
  // Indexed by position, and written one past the newest position when a
  // vertex advances, so both carry n + 1 slots.
  std::vector<int> next(static_cast<size_t>(n) + 1, 0);
  while (true) {
    if (i == static_cast<size_t>(n)) return true;
    int v = order[i];
    bool advanced = false;
    int limit = std::min(k - 1, maxused[i] + 1);
    for (int c = next[i]; c <= limit; ++c) {
      bool ok = true;
      uint64_t nb = g.neighbors(v);
      while (nb && ok) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(w)] == c) ok = false;
      }
      if (ok) {
        color[static_cast<size_t>(v)] = c;
        next[i] = c + 1;
        maxused[i + 1] = std::max(maxused[i], c);
        ++i;
        next[i] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (i == 0) return false;
      color[static_cast<size_t>(v)] = -1;
      --i;
      color[static_cast<size_t>(order[i])] = -1;
    }
  }
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() > kChromaticCap)
    throw Error(Errc::too_large, "chromatic number limited to 16 vertices");
  if (g.order() == 0) return 0;
  auto order = degree_order(g);
  for (int k = 1; k <= g.order(); ++k)
    if (colorable(g, k, order)) return k;
  return g.order();
}

bool is_color_critical(const Graph& g) {
  if (g.order() > kChromaticCap)
    throw Error(Errc::too_large, "chromatic number limited to 16 vertices");
  if (g.edge_count() == 0) return false;
  int chi = chromatic_number(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g.without_edge(u, v);
    if (!colorable(h, chi - 1, degree_order(h))) return false;
  }
  return true;
}

}  // namespace thetawb
