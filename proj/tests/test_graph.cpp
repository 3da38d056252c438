#include <doctest.h>

#include <algorithm>
#include <set>

#include "graph.hpp"
#include "oracles.hpp"

using namespace thetawb;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::build(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::build(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::build(a + b, e);
}

}  // namespace

TEST_CASE("build basics") {
  Graph g = Graph::build(4, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);  // duplicate collapses
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.vertex_mask() == 0xf);

  auto e = g.edges();
  REQUIRE(e.size() == 2);
  CHECK(e[0] == std::pair<int, int>{0, 1});
  CHECK(e[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), Error);
  CHECK_THROWS_AS(Graph::build(-1, {}), Error);
  CHECK_THROWS_AS(Graph::build(65, {}), Error);
  CHECK_NOTHROW(Graph::build(64, {{0, 63}}));
  CHECK(Graph::build(64, {}).vertex_mask() == ~uint64_t{0});
}

TEST_CASE("edit helpers") {
  Graph g = Graph::build(3, {{0, 1}});
  Graph h = g.with_edge(1, 2);
  CHECK(g.edge_count() == 1);  // original untouched
  CHECK(h.edge_count() == 2);
  CHECK(h.without_edge(0, 1).edge_count() == 1);

  Graph k = h.with_vertex(0b101);  // new vertex 3 adjacent to 0 and 2
  CHECK(k.order() == 4);
  CHECK(k.has_edge(3, 0));
  CHECK(k.has_edge(3, 2));
  CHECK(!k.has_edge(3, 1));

  Graph d = k.without_vertex(1);  // 2,3 shift down to 1,2
  CHECK(d.order() == 3);
  CHECK(d.has_edge(2, 0));
  CHECK(d.has_edge(2, 1));
  CHECK(!d.has_edge(0, 1));

  Graph ind = k.induced(0b1101);  // drop vertex 1
  CHECK(ind == d);
}

TEST_CASE("components") {
  Graph g = Graph::build(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b0000111);
  CHECK(comps[1] == 0b0111000);
  CHECK(comps[2] == 0b1000000);
  uint64_t all = 0;
  for (auto m : comps) all |= m;
  CHECK(all == g.vertex_mask());

  CHECK(Graph::build(0, {}).components().empty());
}

TEST_CASE("bipartiteness on fixed graphs") {
  auto part = is_bipartite(complete_bipartite(3, 3));
  REQUIRE(part.has_value());
  CHECK((part->side[0] | part->side[1]) == 0b111111);
  CHECK((part->side[0] & part->side[1]) == 0);

  CHECK(!is_bipartite(cycle(5)).has_value());
  CHECK(!is_bipartite(complete(3)).has_value());
  CHECK(is_bipartite(cycle(6)).has_value());
  CHECK(is_bipartite(Graph::build(0, {})).has_value());
  CHECK(is_bipartite(Graph::build(3, {})).has_value());
}

TEST_CASE("odd girth on fixed graphs") {
  CHECK(odd_girth(cycle(5)) == 5);
  CHECK(odd_girth(cycle(7)) == 7);
  CHECK(odd_girth(complete(4)) == 3);
  CHECK(!odd_girth(cycle(6)).has_value());
  CHECK(!odd_girth(complete_bipartite(2, 3)).has_value());
  // Two components: the odd one decides.
  Graph g = Graph::build(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                             {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
  CHECK(odd_girth(g) == 5);
}

TEST_CASE("bipartite and odd girth agree with brute force") {
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 60; ++t) {
      Graph g = oracle::random_graph(1000 * n + t, n, 20 + 7 * (t % 10));
      auto expect = oracle::odd_girth_bruteforce(g);
      auto got = odd_girth(g);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(got == expect);
      auto part = is_bipartite(g);
      CHECK(part.has_value() == !expect.has_value());
      if (part) {
        CHECK((part->side[0] | part->side[1]) == g.vertex_mask());
        CHECK((part->side[0] & part->side[1]) == 0);
        for (auto [u, v] : g.edges()) {
          bool u0 = (part->side[0] >> u) & 1;
          bool v0 = (part->side[0] >> v) & 1;
          CHECK(u0 != v0);
        }
      }
    }
  }
}

TEST_CASE("graph6 fixed strings") {
  CHECK(graph6_encode(Graph::build(0, {})) == "?");
  CHECK(graph6_encode(Graph::build(1, {})) == "@");
  CHECK(graph6_encode(Graph::build(2, {{0, 1}})) == "A_");
  CHECK(graph6_encode(cycle(5)) == "Dhc");
  CHECK(graph6_decode("Dhc") == cycle(5));
}

TEST_CASE("graph6 agrees with the independent encoder") {
  for (int n = 0; n <= 12; ++n)
    for (int t = 0; t < 25; ++t) {
      Graph g = oracle::random_graph(7777 + 100 * n + t, n, 15 + 6 * (t % 12));
      CHECK(graph6_encode(g) == oracle::graph6_bruteforce(g));
    }
}

TEST_CASE("graph6 roundtrip including the long header") {
  for (int n : {0, 1, 2, 5, 10, 31, 62, 63, 64}) {
    for (int t = 0; t < 8; ++t) {
      Graph g = oracle::random_graph(31 * n + t, n, 37);
      std::string s = graph6_encode(g);
      if (n >= 63) CHECK(s[0] == '~');
      CHECK(graph6_decode(s) == g);
    }
  }
}

TEST_CASE("graph6 decode rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), Error);
  CHECK_THROWS_AS(graph6_decode("D"), Error);        // truncated payload
  CHECK_THROWS_AS(graph6_decode("Dhc "), Error);     // trailing byte
  CHECK_THROWS_AS(graph6_decode("Dhc\n"), Error);    // trailing newline
  CHECK_THROWS_AS(graph6_decode("DhcX"), Error);     // extra payload
  CHECK_THROWS_AS(graph6_decode("~"), Error);        // short long-form header
  CHECK_THROWS_AS(graph6_decode("\x1f"), Error);     // byte below the range
  CHECK_THROWS_AS(graph6_decode("A\x7f"), Error);    // byte above the range
  // K2 is "A_" = 'A' then 63+32; any nonzero padding bit must be rejected.
  CHECK_THROWS_AS(graph6_decode(std::string("A") + char(63 + 33)), Error);
  CHECK_THROWS_AS(graph6_decode(std::string("A") + char(63 + 63)), Error);
  CHECK(graph6_decode(std::string("A") + char(63)) == Graph::build(2, {}));
}
