#include "enumeration.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "canonical.hpp"

namespace thetawb {

namespace {

std::uint64_t apply_perm_to_mask(const std::vector<int>& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= 1ull << perm[v];
  }
  return out;
}

struct MaskDsu {
  std::vector<std::uint32_t> parent;
  explicit MaskDsu(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

struct Enumerator {
  int target;
  const GraphVisitor& visit;
  const EnumerateOptions& opts;

  bool admissible(const Graph& g) const {
    if (opts.filter && !opts.filter(g)) return false;
    if (opts.min_edges_at_target >= 0) {
      long k = g.order();
      long slack = (static_cast<long>(target) * (target - 1) - k * (k - 1)) / 2;
      if (static_cast<long>(g.edge_count()) + slack < opts.min_edges_at_target) return false;
    }
    return true;
  }

  // Keep the child exactly when the appended vertex (index |H|-1) shares an
  // automorphism orbit with the vertex in the last canonical position.
  static bool canonical_child(const Graph& h) {
    CanonicalResult cr = canonical_analyze(h);
    int last = cr.labeling[h.order() - 1];
    return cr.orbit[h.order() - 1] == cr.orbit[last];
  }

  void grow(const Graph& g) {
    if (g.order() == target) {
      visit(g);
      return;
    }
    for (std::uint64_t mask : attachment_orbit_reps(g)) {
      Graph h = g.with_vertex(mask);
      if (!admissible(h)) continue;
      if (!canonical_child(h)) continue;
      grow(h);
    }
  }

  void grow_until(const Graph& g, int stop, std::vector<Graph>& out) {
    if (g.order() == stop) {
      out.push_back(g);
      return;
    }
    for (std::uint64_t mask : attachment_orbit_reps(g)) {
      Graph h = g.with_vertex(mask);
      if (!admissible(h)) continue;
      if (!canonical_child(h)) continue;
      grow_until(h, stop, out);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> attachment_orbit_reps(const Graph& g) {
  int k = g.order();
  if (k >= 32) throw Error(Errc::too_large, "attachment orbits need order below 32");
  size_t total = size_t{1} << k;
  CanonicalResult cr = canonical_analyze(g);
  MaskDsu dsu(total);
  for (const auto& perm : cr.generators) {
    for (std::uint32_t m = 0; m < total; ++m) {
      dsu.unite(m, static_cast<std::uint32_t>(apply_perm_to_mask(perm, m)));
    }
  }
  std::vector<std::uint64_t> reps;
  for (std::uint32_t m = 0; m < total; ++m) {
    if (dsu.find(m) == m) reps.push_back(m);
  }
  return reps;
}

void enumerate_all(int n, const GraphVisitor& visit, const EnumerateOptions& opts) {
  if (n < 0 || n > 10) throw Error(Errc::too_large, "exhaustive enumeration supports orders 0 through 10");
  Enumerator en{n, visit, opts};
  if (n == 0) {
    Graph g = Graph::build(0, {});
    if (en.admissible(g)) visit(g);
    return;
  }
  Graph root = Graph::build(1, {});
  if (!en.admissible(root)) return;
  int jobs = opts.jobs < 1 ? 1 : (opts.jobs > 16 ? 16 : opts.jobs);
  int split = n - 1 < 6 ? n - 1 : 6;
  if (jobs == 1 || split < 1) {
    en.grow(root);
    return;
  }
  std::vector<Graph> frontier;
  en.grow_until(root, split, frontier);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      en.grow(frontier[i]);
    }
  };
  // The calling thread is worker zero, so jobs = 1 spawns nothing. Spawn
  // failure under resource pressure is fine too: the queue drains with
  // whatever workers came up.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  try {
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  } catch (const std::system_error&) {
  }
  worker();
  for (auto& th : pool) th.join();
}

std::vector<Graph> naive_enumerate(int n, const HereditaryFilter& filter) {
  if (n < 0 || n > 8) throw Error(Errc::too_large, "naive enumeration supports orders 0 through 8");
  if (n == 0) {
    Graph g = Graph::build(0, {});
    if (filter && !filter(g)) return {};
    return {g};
  }
  std::map<std::string, Graph> level;
  {
    Graph k1 = Graph::build(1, {});
    if (filter && !filter(k1)) return {};
    level.emplace(canonical_form(k1), canonical_graph(k1));
  }
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      (void)key;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Graph h = g.with_vertex(mask);
        if (filter && !filter(h)) continue;
        std::string f = canonical_form(h);
        if (!next.count(f)) next.emplace(std::move(f), canonical_graph(h));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) {
    (void)key;
    out.push_back(g);
  }
  return out;
}

long count_classes(int n, const EnumerateOptions& opts) {
  std::atomic<long> count{0};
  enumerate_all(n, [&count](const Graph&) { count.fetch_add(1, std::memory_order_relaxed); }, opts);
  return count.load();
}

}  // namespace thetawb
