#pragma once

#include <vector>

#include "graph.hpp"

namespace thetawb {

// Complete multipartite Turan graph T_{n,r}; the first n mod r parts get the
// extra vertex. Error when r == 0.
Graph turan(int n, int r);

// K_{a,b} with one edge subdivided: n = a+b+1 vertices, ab+1 edges.
// Vertices 0..a-1 and a..a+b-1 are the two sides, a+b is the degree-2
// subdivision vertex replacing the edge (0, a). Requires a, b >= 2, the
// smallest sides whose subdivision leaves an odd cycle.
Graph sk(int a, int b);

// K_{a,b} with a triangle sharing one vertex, glued at the side of size b:
// n = a+b+2 vertices, ab+3 edges. Vertices a+b and a+b+1 are the two
// triangle vertices hanging off vertex a.
Graph circ_k3(int a, int b);

// K_{a,b} with a triangle sharing one edge: the apex a+b is adjacent to
// exactly 0 and a. n = a+b+1 vertices, ab+2 edges.
Graph bullet_k3(int a, int b);

enum class Family { H, G };

// Family H: start from K_{|X|,|Y|} with |Y| = ceil(n/2)+b, |X| = floor(n/2)-b.
// Pick u1, u2 in Y, add the edge u1u2, then detach u1 from X minus X1 and u2
// from X1, where X1 is a nonempty proper subset of X of size x1_size.
// Every member has floor((n-1)^2/4)+1 edges, no triangle, and an odd cycle;
// defined for n >= 5.
//
// Family G: start from T_{n-3,2} with parts X (size ceil((n-3)/2)) and Y,
// add a triangle w1 w2 w3, join w1 to X minus X1, w2 to Y minus Y1, w3 to
// X1 union Y1, subject to |X1| * |Y1| <= 1. Every member has
// floor((n-3)^2/4)+n edges and contains a triangle.
struct FamilyParams {
  Family family = Family::H;
  int n = 0;
  int b = 0;        // H only: 0 for odd n, 0 or 1 for even n
  int x1_size = 0;  // H: 1 <= x1_size <= |X|-1; G: 0 <= x1_size <= |X|
  int y1_size = 0;  // G only: 0 <= y1_size <= |Y|
};

Graph family_member(const FamilyParams& p);

// One representative per isomorphism class over the whole parameter range,
// deduped by canonical form and sorted by canonical graph6. Requires n >= 6.
std::vector<Graph> enumerate_family(Family family, int n);

}  // namespace thetawb
