#include <doctest.h>

#include <set>

#include "canonical.hpp"
#include "constructions.hpp"
#include "oracles.hpp"

using namespace thetawb;

namespace {

long triangle_count(const Graph& g) {
  long c = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      for (int k = j + 1; k < g.order(); ++k)
        if (g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k)) ++c;
  return c;
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::build(a + b, e);
}

long h_edges(int n) { return 1L * (n - 1) * (n - 1) / 4 + 1; }
long g_edges(int n) { return 1L * (n - 3) * (n - 3) / 4 + n; }

}  // namespace

TEST_CASE("turan graphs") {
  Graph t73 = turan(7, 3);
  CHECK(t73.order() == 7);
  CHECK(t73.edge_count() == 16);
  // Every vertex misses exactly the rest of its own part.
  std::multiset<int> degs;
  for (int v = 0; v < 7; ++v) degs.insert(t73.degree(v));
  // Parts of sizes 3,2,2: the three vertices in the large part have
  // degree 4, the other four have degree 5 (sum 32 = 2*16).
  CHECK(degs == std::multiset<int>{4, 4, 4, 5, 5, 5, 5});

  CHECK(turan(5, 1).edge_count() == 0);
  CHECK(turan(5, 5).edge_count() == 10);
  CHECK(is_isomorphic(turan(9, 2), complete_bipartite(5, 4)));
  CHECK(triangle_count(turan(9, 2)) == 0);
  CHECK_THROWS_AS(turan(5, 0), Error);
  CHECK_THROWS_AS(turan(-1, 2), Error);
}

TEST_CASE("subdivided complete bipartite") {
  Graph s22 = sk(2, 2);
  CHECK(s22.order() == 5);
  CHECK(s22.edge_count() == 5);
  CHECK(odd_girth(s22) == 5);

  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      Graph g = sk(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(g.order() == a + b + 1);
      CHECK(g.edge_count() == a * b + 1);
      CHECK(odd_girth(g) == 5);
      CHECK(triangle_count(g) == 0);
      CHECK(g.degree(a + b) == 2);
    }
  CHECK(is_isomorphic(sk(3, 5), sk(5, 3)));
  CHECK_THROWS_AS(sk(1, 3), Error);
}

TEST_CASE("apex triangle on a complete bipartite graph") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      Graph g = bullet_k3(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(g.order() == a + b + 1);
      CHECK(g.edge_count() == a * b + 2);
      CHECK(odd_girth(g) == 3);
      CHECK(triangle_count(g) == 1);
      CHECK(g.degree(a + b) == 2);
    }
  CHECK(is_isomorphic(bullet_k3(2, 4), bullet_k3(4, 2)));
}

TEST_CASE("pendant triangle on a complete bipartite graph") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      Graph g = circ_k3(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(g.order() == a + b + 2);
      CHECK(g.edge_count() == a * b + 3);
      CHECK(odd_girth(g) == 3);
      CHECK(triangle_count(g) == 1);
    }
}

TEST_CASE("two-apex family members") {
  for (int n = 7; n <= 12; ++n) {
    int bmax = (n % 2 == 0) ? 1 : 0;
    for (int b = 0; b <= bmax; ++b) {
      int xsize = n / 2 - b;
      for (int x1 = 1; x1 < xsize; ++x1) {
        FamilyParams p{Family::H, n, b, x1, 0};
        Graph g = family_member(p);
        CAPTURE(n);
        CAPTURE(b);
        CAPTURE(x1);
        CHECK(g.order() == n);
        CHECK(g.edge_count() == h_edges(n));
        CHECK(triangle_count(g) == 0);
        CHECK(!is_bipartite(g).has_value());
        CHECK(odd_girth(g) == 5);
      }
    }
  }
}

TEST_CASE("two-apex member with a singleton side equals the subdivision graph") {
  for (int n = 7; n <= 12; ++n) {
    int bmax = (n % 2 == 0) ? 1 : 0;
    for (int b = 0; b <= bmax; ++b) {
      int ysize = (n + 1) / 2 + b;
      int xsize = n / 2 - b;
      if (xsize < 2) continue;
      Graph h = family_member({Family::H, n, b, 1, 0});
      CAPTURE(n);
      CAPTURE(b);
      CHECK(is_isomorphic(h, sk(ysize - 1, xsize)));
    }
  }
}

TEST_CASE("two-apex family validation") {
  CHECK_THROWS_AS(family_member({Family::H, 9, 1, 1, 0}), Error);  // b=1 needs even n
  CHECK_THROWS_AS(family_member({Family::H, 10, 2, 1, 0}), Error);
  CHECK_THROWS_AS(family_member({Family::H, 9, 0, 0, 0}), Error);  // empty X1
  CHECK_THROWS_AS(family_member({Family::H, 9, 0, 4, 0}), Error);  // X1 = X
  CHECK_THROWS_AS(family_member({Family::H, 4, 0, 1, 0}), Error);
}

TEST_CASE("triangle family members") {
  for (int n = 7; n <= 11; ++n) {
    Graph g = family_member({Family::G, n, 0, 0, 0});
    CAPTURE(n);
    CHECK(g.order() == n);
    CHECK(g.edge_count() == g_edges(n));
    CHECK(odd_girth(g) == 3);
  }
  CHECK(is_isomorphic(family_member({Family::G, 9, 0, 0, 0}), bullet_k3(4, 4)));
  int x = (9 - 3 + 1) / 2;  // |X| for n = 9
  CHECK_THROWS_AS(family_member({Family::G, 9, 0, x + 1, 0}), Error);
  CHECK_THROWS_AS(family_member({Family::G, 9, 0, 2, 2}), Error);  // |X1||Y1| > 1
  CHECK(family_member({Family::G, 9, 0, 1, 1}).edge_count() == g_edges(9));
}

TEST_CASE("family enumeration is deduplicated and complete") {
  for (int n = 7; n <= 10; ++n) {
    for (Family fam : {Family::H, Family::G}) {
      auto reps = enumerate_family(fam, n);
      CAPTURE(n);
      CAPTURE(fam == Family::H);
      REQUIRE(!reps.empty());
      std::set<std::string> forms;
      std::vector<std::string> order;
      for (const Graph& g : reps) {
        CHECK(g.order() == n);
        CHECK(g.edge_count() == (fam == Family::H ? h_edges(n) : g_edges(n)));
        std::string f = canonical_form(g);
        CHECK(forms.insert(f).second);  // pairwise non-isomorphic
        CHECK(canonical_graph(g) == g);
        order.push_back(f);
      }
      CHECK(std::is_sorted(order.begin(), order.end()));
    }
  }

  // Every valid parameter choice lands on exactly one listed representative.
  auto reps = enumerate_family(Family::H, 10);
  std::set<std::string> forms;
  for (const Graph& g : reps) forms.insert(canonical_form(g));
  for (int b = 0; b <= 1; ++b) {
    int xsize = 10 / 2 - b;
    for (int x1 = 1; x1 < xsize; ++x1)
      CHECK(forms.count(canonical_form(family_member({Family::H, 10, b, x1, 0}))));
  }
  CHECK_THROWS_AS(enumerate_family(Family::H, 5), Error);
}
