#include "constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "canonical.hpp"

namespace thetawb {

Graph turan(int n, int r) {
  if (r <= 0) throw Error(Errc::invalid_argument, "turan: part count must be positive");
  if (n < 0) throw Error(Errc::invalid_argument, "turan: bad vertex count");
  std::vector<int> part(static_cast<size_t>(n));
  int q = n / r, rem = n % r;
  int v = 0;
  for (int p = 0; p < r && v < n; ++p) {
    int size = q + (p < rem ? 1 : 0);
    for (int i = 0; i < size; ++i) part[static_cast<size_t>(v++)] = p;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (part[static_cast<size_t>(u)] != part[static_cast<size_t>(w)]) edges.emplace_back(u, w);
  return Graph::build(n, edges);
}

namespace {

std::vector<std::pair<int, int>> complete_bipartite_edges(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int w = 0; w < b; ++w) edges.emplace_back(u, a + w);
  return edges;
}

void require_positive_sides(int a, int b, const char* who) {
  if (a < 1 || b < 1) throw Error(Errc::invalid_argument, std::string(who) + ": sides must be positive");
}

}  // namespace

Graph sk(int a, int b) {
  // Each side needs a vertex besides the subdivided edge's endpoint, or the
  // five-cycle through the subdivision vertex disappears and the graph is
  // bipartite.
  if (a < 2 || b < 2) throw Error(Errc::invalid_argument, "sk: sides must be at least 2");
  if (a + b + 1 > kMaxVertices) throw Error(Errc::too_large, "sk: too many vertices");
  auto edges = complete_bipartite_edges(a, b);
  std::erase(edges, std::pair<int, int>{0, a});
  int s = a + b;
  edges.emplace_back(0, s);
  edges.emplace_back(a, s);
  return Graph::build(a + b + 1, edges);
}

Graph circ_k3(int a, int b) {
  require_positive_sides(a, b, "circ_k3");
  if (a + b + 2 > kMaxVertices) throw Error(Errc::too_large, "circ_k3: too many vertices");
  auto edges = complete_bipartite_edges(a, b);
  int t1 = a + b, t2 = a + b + 1;
  edges.emplace_back(a, t1);
  edges.emplace_back(a, t2);
  edges.emplace_back(t1, t2);
  return Graph::build(a + b + 2, edges);
}

Graph bullet_k3(int a, int b) {
  require_positive_sides(a, b, "bullet_k3");
  if (a + b + 1 > kMaxVertices) throw Error(Errc::too_large, "bullet_k3: too many vertices");
  auto edges = complete_bipartite_edges(a, b);
  int w = a + b;
  edges.emplace_back(0, w);
  edges.emplace_back(a, w);
  return Graph::build(a + b + 1, edges);
}

namespace {

Graph family_h(int n, int b, int x1_size) {
  // Below n = 5 the Y side has fewer than three vertices and the member
  // degenerates to a bipartite graph.
  if (n < 5 || n > kMaxVertices) throw Error(Errc::invalid_argument, "family H: bad n");
  if (b != 0 && !(b == 1 && n % 2 == 0))
    throw Error(Errc::invalid_argument, "family H: b must be 0, or 1 for even n");
  int ysize = (n + 1) / 2 + b;
  int xsize = n / 2 - b;
  if (x1_size < 1 || x1_size > xsize - 1)
    throw Error(Errc::invalid_argument, "family H: X1 must be a nonempty proper subset of X");
  // Vertices 0..ysize-1 are Y (u1 = 0, u2 = 1), ysize..n-1 are X; X1 is the
  // first x1_size vertices of X.
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  for (int y = 0; y < ysize; ++y) {
    for (int i = 0; i < xsize; ++i) {
      int x = ysize + i;
      bool in_x1 = i < x1_size;
      if (y == 0 && !in_x1) continue;
      if (y == 1 && in_x1) continue;
      edges.emplace_back(y, x);
    }
  }
  return Graph::build(n, edges);
}

Graph family_g(int n, int x1_size, int y1_size) {
  if (n < 6 || n > kMaxVertices) throw Error(Errc::invalid_argument, "family G: bad n");
  int xsize = (n - 3 + 1) / 2;
  int ysize = (n - 3) / 2;
  if (x1_size < 0 || x1_size > xsize || y1_size < 0 || y1_size > ysize)
    throw Error(Errc::invalid_argument, "family G: subset size out of range");
  if (x1_size * y1_size > 1)
    throw Error(Errc::invalid_argument, "family G: |X1|*|Y1| must be at most 1");
  // Vertices 0..xsize-1 are X, then Y, then w1 = n-3, w2 = n-2, w3 = n-1.
  // X1 and Y1 are the leading vertices of their parts.
  int w1 = n - 3, w2 = n - 2, w3 = n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < xsize; ++i)
    for (int j = 0; j < ysize; ++j) edges.emplace_back(i, xsize + j);
  edges.emplace_back(w1, w2);
  edges.emplace_back(w1, w3);
  edges.emplace_back(w2, w3);
  for (int i = 0; i < xsize; ++i) edges.emplace_back(i < x1_size ? w3 : w1, i);
  for (int j = 0; j < ysize; ++j) edges.emplace_back(j < y1_size ? w3 : w2, xsize + j);
  return Graph::build(n, edges);
}

}  // namespace

Graph family_member(const FamilyParams& p) {
  if (p.family == Family::H) {
    if (p.y1_size != 0) throw Error(Errc::invalid_argument, "family H: y1_size not applicable");
    return family_h(p.n, p.b, p.x1_size);
  }
  if (p.b != 0) throw Error(Errc::invalid_argument, "family G: b not applicable");
  return family_g(p.n, p.x1_size, p.y1_size);
}

std::vector<Graph> enumerate_family(Family family, int n) {
  if (n < 6) throw Error(Errc::invalid_argument, "enumerate_family: n must be at least 6");
  if (n > kMaxVertices) throw Error(Errc::too_large, "enumerate_family: too many vertices");
  std::map<std::string, Graph> classes;
  auto add = [&](const Graph& g) {
    Graph c = canonical_graph(g);
    classes.emplace(graph6_encode(c), c);
  };
  if (family == Family::H) {
    for (int b = 0; b <= (n % 2 == 0 ? 1 : 0); ++b) {
      int xsize = n / 2 - b;
      for (int x1 = 1; x1 <= xsize - 1; ++x1) add(family_h(n, b, x1));
    }
  } else {
    int xsize = (n - 2) / 2, ysize = (n - 3) / 2;
    for (int x1 = 0; x1 <= xsize; ++x1) add(family_g(n, x1, 0));
    for (int y1 = 1; y1 <= ysize; ++y1) add(family_g(n, 0, y1));
    add(family_g(n, 1, 1));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(g);
  return out;
}

}  // namespace thetawb
