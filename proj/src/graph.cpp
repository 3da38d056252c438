#include "graph.hpp"

#include <algorithm>
#include <array>

namespace thetawb {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw Error(Errc::invalid_argument, "vertex count must be non-negative");
  if (n > kMaxVertices) throw Error(Errc::too_large, "vertex count exceeds 64");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::invalid_argument, "edge endpoint out of range");
    if (u == v) throw Error(Errc::invalid_argument, "loops are not allowed");
    g.adj_[u] |= uint64_t{1} << v;
    g.adj_[v] |= uint64_t{1} << u;
  }
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t row : adj_) total += std::popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    uint64_t higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::with_vertex(uint64_t attach_mask) const {
  if (n_ >= kMaxVertices) throw Error(Errc::too_large, "vertex count exceeds 64");
  if (attach_mask & ~vertex_mask())
    throw Error(Errc::invalid_argument, "attachment outside vertex set");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.adj_.push_back(attach_mask);
  uint64_t bit = uint64_t{1} << n_;
  while (attach_mask) {
    g.adj_[std::countr_zero(attach_mask)] |= bit;
    attach_mask &= attach_mask - 1;
  }
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw Error(Errc::invalid_argument, "bad edge");
  Graph g = *this;
  g.adj_[u] |= uint64_t{1} << v;
  g.adj_[v] |= uint64_t{1} << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::invalid_argument, "bad edge");
  Graph g = *this;
  g.adj_[u] &= ~(uint64_t{1} << v);
  g.adj_[v] &= ~(uint64_t{1} << u);
  return g;
}

Graph Graph::without_vertex(int u) const {
  if (u < 0 || u >= n_) throw Error(Errc::invalid_argument, "vertex out of range");
  return induced(vertex_mask() & ~(uint64_t{1} << u));
}

Graph Graph::induced(uint64_t mask) const {
  if (mask & ~vertex_mask()) throw Error(Errc::invalid_argument, "mask outside vertex set");
  std::array<int, kMaxVertices> newid{};
  int m = 0;
  for (int v = 0; v < n_; ++v)
    if ((mask >> v) & 1) newid[v] = m++;
  Graph g;
  g.n_ = m;
  g.adj_.assign(static_cast<size_t>(m), 0);
  for (int v = 0; v < n_; ++v) {
    if (!((mask >> v) & 1)) continue;
    uint64_t kept = adj_[v] & mask;
    while (kept) {
      int w = std::countr_zero(kept);
      g.adj_[newid[v]] |= uint64_t{1} << newid[w];
      kept &= kept - 1;
    }
  }
  return g;
}

std::vector<uint64_t> Graph::components() const {
  std::vector<uint64_t> out;
  uint64_t seen = 0;
  for (int s = 0; s < n_; ++s) {
    if ((seen >> s) & 1) continue;
    uint64_t comp = uint64_t{1} << s;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj_[v] & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::optional<Partition2> is_bipartite(const Graph& g) {
  Partition2 part;
  int n = g.order();
  std::array<int8_t, kMaxVertices> side{};
  side.fill(-1);
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      uint64_t nb = g.neighbors(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue[tail++] = w;
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) part.side[side[v]] |= uint64_t{1} << v;
  return part;
}

std::optional<int> odd_girth(const Graph& g) {
  // Parity-labeled BFS from every vertex: the shortest odd closed walk
  // through s has the length of a shortest odd cycle through s.
  int n = g.order();
  int best = -1;
  std::array<int16_t, 2 * kMaxVertices> dist{};
  std::array<int16_t, 2 * kMaxVertices> queue{};
  for (int s = 0; s < n; ++s) {
    dist.fill(-1);
    int head = 0, tail = 0;
    dist[2 * s] = 0;
    queue[tail++] = static_cast<int16_t>(2 * s);
    int found = -1;
    while (head < tail && found < 0) {
      int state = queue[head++];
      int v = state >> 1, parity = state & 1;
      uint64_t nb = g.neighbors(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        int nstate = 2 * w + (parity ^ 1);
        if (dist[nstate] < 0) {
          dist[nstate] = static_cast<int16_t>(dist[state] + 1);
          if (w == s && (nstate & 1)) {
            found = dist[nstate];
            break;
          }
          queue[tail++] = static_cast<int16_t>(nstate);
        }
      }
    }
    if (found > 0 && (best < 0 || found < best)) best = found;
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (size_t j = 0; j < 6; ++j) {
      chunk <<= 1;
      if (i + j < bits.size() && bits[i + j]) chunk |= 1;
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (s.size() < pos + k) throw Error(Errc::parse, "graph6: truncated input");
  };
  need(1);
  int n;
  if (s[pos] == '~') {
    ++pos;
    need(3);
    n = 0;
    for (int k = 0; k < 3; ++k) {
      int c = static_cast<unsigned char>(s[pos + k]) - 63;
      if (c < 0 || c > 63) throw Error(Errc::parse, "graph6: malformed header");
      n = (n << 6) | c;
    }
    pos += 3;
    if (n <= 62) throw Error(Errc::parse, "graph6: non-canonical long header");
  } else {
    n = static_cast<unsigned char>(s[pos]) - 63;
    if (n < 0 || n > 62) throw Error(Errc::parse, "graph6: malformed header");
    ++pos;
  }
  if (n > kMaxVertices) throw Error(Errc::too_large, "graph6: vertex count exceeds 64");
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  need(nbytes);
  if (s.size() != pos + nbytes) throw Error(Errc::parse, "graph6: trailing bytes");
  std::vector<std::pair<int, int>> edges;
  size_t bit = 0;
  for (size_t k = 0; k < nbytes; ++k) {
    int c = static_cast<unsigned char>(s[pos + k]) - 63;
    if (c < 0 || c > 63) throw Error(Errc::parse, "graph6: byte out of range");
    for (int j = 5; j >= 0; --j, ++bit) {
      bool set = (c >> j) & 1;
      if (bit >= nbits) {
        if (set) throw Error(Errc::parse, "graph6: nonzero padding");
        continue;
      }
      if (set) {
        // Recover (i, j) from the column-major upper-triangle position.
        size_t b = bit;
        int col = 1;
        while (b >= static_cast<size_t>(col)) b -= col++;
        edges.emplace_back(static_cast<int>(b), col);
      }
    }
  }
  return Graph::build(n, edges);
}

}  // namespace thetawb
