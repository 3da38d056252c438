#pragma once

#include "poly.hpp"

namespace thetawb {

// A real algebraic number, represented by a squarefree integer polynomial
// together with an isolating open interval (lo, hi): the interval contains
// exactly one root of the polynomial and neither endpoint is a root.
struct AlgebraicReal {
  Poly p;
  std::vector<Poly> chain;
  mpq_class lo, hi;
};

// The largest real root of p.  p must have at least one real root
// (adjacency characteristic polynomials always do).
AlgebraicReal largest_root(const Poly& p);

void refine_once(AlgebraicReal& a);
void refine_below(AlgebraicReal& a, const mpq_class& width);

// Exact trichotomy: -1, 0, +1 as a <, ==, > b.
int compare(AlgebraicReal a, AlgebraicReal b);
int compare_with_rational(AlgebraicReal a, const mpq_class& r);

// The square of a, for a > 0.
AlgebraicReal square_positive(AlgebraicReal a);

// a + c for integer c.
AlgebraicReal shifted(const AlgebraicReal& a, long c);

}  // namespace thetawb
