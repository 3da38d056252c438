#include "canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace thetawb {

namespace {

struct Dsu {
  std::array<int, kMaxVertices> parent;
  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the least vertex as representative
  }
};

struct PartitionState {
  std::array<int, kMaxVertices> order;       // order[pos] = vertex
  std::array<int, kMaxVertices> pos;         // pos[vertex] = position
  std::array<int, kMaxVertices> cell_start;  // per position
  std::array<int, kMaxVertices> cell_len;    // valid at start positions
};

class Searcher {
public:
  Searcher(const uint64_t* adj, int n) : adj_(adj), n_(n) { orbits_.reset(n); }

  void run() {
    if (n_ == 0) {
      have_best_ = true;
      return;
    }
    for (int i = 0; i < n_; ++i) {
      st_.order[i] = i;
      st_.pos[i] = i;
      st_.cell_start[i] = 0;
    }
    st_.cell_len[0] = n_;
    pending_.clear();
    pending_.push_back(0);
    refine();
    search();
  }

  std::array<uint64_t, kMaxVertices> best_code{};
  std::array<int, kMaxVertices> best_label{};
  std::vector<std::vector<int>> generators;
  Dsu orbits_;

private:
  const uint64_t* adj_;
  int n_;
  PartitionState st_;
  std::vector<int> pending_;
  std::array<int, kMaxVertices> base_{};
  int base_len_ = 0;
  bool have_best_ = false;

  void enqueue(int start) { pending_.push_back(start); }

  // Split every cell by neighbor counts into the splitter cell until the
  // partition is equitable. Subcells are ordered by decreasing count, which
  // depends only on the graph and the cell sequence, never on vertex labels.
  void refine() {
    std::array<int, kMaxVertices> key{};
    while (!pending_.empty()) {
      int s = pending_.back();
      pending_.pop_back();
      if (st_.cell_start[s] != s) continue;  // no longer a cell start
      uint64_t mask = 0;
      for (int p = s; p < s + st_.cell_len[s]; ++p) mask |= uint64_t{1} << st_.order[p];

      std::array<int, kMaxVertices> starts{};
      int nstarts = 0;
      for (int p = 0; p < n_; p += st_.cell_len[p]) starts[nstarts++] = p;

      for (int ci = 0; ci < nstarts; ++ci) {
        int c = starts[ci];
        int len = st_.cell_len[c];
        if (len == 1) continue;
        int first_key = std::popcount(adj_[st_.order[c]] & mask);
        bool uniform = true;
        for (int p = c; p < c + len; ++p) {
          key[st_.order[p]] = std::popcount(adj_[st_.order[p]] & mask);
          if (key[st_.order[p]] != first_key) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(st_.order.begin() + c, st_.order.begin() + c + len,
                         [&](int a, int b) { return key[a] > key[b]; });
        int seg = c;
        for (int p = c; p < c + len; ++p) {
          if (p > c && key[st_.order[p]] != key[st_.order[p - 1]]) {
            st_.cell_len[seg] = p - seg;
            enqueue(seg);
            seg = p;
          }
          st_.cell_start[p] = seg;
          st_.pos[st_.order[p]] = p;
        }
        st_.cell_len[seg] = c + len - seg;
        enqueue(seg);
      }
    }
  }

  void individualize(int v) {
    int p = st_.pos[v];
    int c = st_.cell_start[p];
    std::rotate(st_.order.begin() + c, st_.order.begin() + p, st_.order.begin() + p + 1);
    int len = st_.cell_len[c];
    for (int q = c; q < c + len; ++q) st_.pos[st_.order[q]] = q;
    st_.cell_len[c] = 1;
    st_.cell_start[c] = c;
    for (int q = c + 1; q < c + len; ++q) st_.cell_start[q] = c + 1;
    st_.cell_len[c + 1] = len - 1;
    base_[base_len_++] = v;
    enqueue(c);
    enqueue(c + 1);
    refine();
  }

  void leaf() {
    std::array<uint64_t, kMaxVertices> code;
    for (int i = 0; i < n_; ++i) {
      uint64_t w = 0;
      uint64_t nb = adj_[st_.order[i]];
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        w |= uint64_t{1} << (63 - st_.pos[v]);
      }
      code[i] = w;
    }
    if (!have_best_) {
      have_best_ = true;
      best_code = code;
      std::copy_n(st_.order.begin(), n_, best_label.begin());
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i)
      cmp = code[i] < best_code[i] ? -1 : (code[i] > best_code[i] ? 1 : 0);
    if (cmp > 0) {
      best_code = code;
      std::copy_n(st_.order.begin(), n_, best_label.begin());
    } else if (cmp == 0) {
      std::vector<int> sigma(static_cast<size_t>(n_));
      bool identity = true;
      for (int i = 0; i < n_; ++i) {
        sigma[static_cast<size_t>(best_label[i])] = st_.order[i];
        if (best_label[i] != st_.order[i]) identity = false;
      }
      if (!identity) {
        for (int v = 0; v < n_; ++v) orbits_.unite(v, sigma[static_cast<size_t>(v)]);
        generators.push_back(std::move(sigma));
      }
    }
  }

  bool orbit_pruned(int v, const int* tried, int ntried) {
    if (ntried == 0 || generators.empty()) return false;
    Dsu dsu;
    dsu.reset(n_);
    for (const auto& g : generators) {
      bool fixes_base = true;
      for (int i = 0; i < base_len_ && fixes_base; ++i)
        fixes_base = g[static_cast<size_t>(base_[i])] == base_[i];
      if (!fixes_base) continue;
      for (int u = 0; u < n_; ++u) dsu.unite(u, g[static_cast<size_t>(u)]);
    }
    for (int i = 0; i < ntried; ++i)
      if (dsu.find(tried[i]) == dsu.find(v)) return true;
    return false;
  }

  void search() {
    int target = -1;
    for (int p = 0; p < n_; p += st_.cell_len[p]) {
      if (st_.cell_len[p] > 1) {
        target = p;
        break;
      }
    }
    if (target < 0) {
      leaf();
      return;
    }
    std::array<int, kMaxVertices> cand{};
    int ncand = st_.cell_len[target];
    std::copy_n(st_.order.begin() + target, ncand, cand.begin());
    std::sort(cand.begin(), cand.begin() + ncand);
    std::array<int, kMaxVertices> tried{};
    int ntried = 0;
    PartitionState saved = st_;
    int saved_base = base_len_;
    for (int i = 0; i < ncand; ++i) {
      int v = cand[i];
      if (orbit_pruned(v, tried.data(), ntried)) continue;
      individualize(v);
      search();
      st_ = saved;
      base_len_ = saved_base;
      pending_.clear();
      tried[ntried++] = v;
    }
  }
};

}  // namespace

CanonicalResult canonical_analyze(const Graph& g) {
  int n = g.order();
  Searcher s(g.rows(), n);
  s.run();
  CanonicalResult res;
  res.labeling.assign(s.best_label.begin(), s.best_label.begin() + n);
  std::vector<std::pair<int, int>> edges;
  std::array<int, kMaxVertices> posof{};
  for (int i = 0; i < n; ++i) posof[static_cast<size_t>(res.labeling[i])] = i;
  for (auto [u, v] : g.edges())
    edges.emplace_back(posof[static_cast<size_t>(u)], posof[static_cast<size_t>(v)]);
  res.canon = Graph::build(n, edges);
  res.generators = std::move(s.generators);
  res.orbit.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) res.orbit[static_cast<size_t>(v)] = s.orbits_.find(v);
  return res;
}

Graph canonical_graph(const Graph& g) { return canonical_analyze(g).canon; }

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace thetawb
