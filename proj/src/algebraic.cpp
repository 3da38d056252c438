#include "algebraic.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace thetawb {

namespace {

// A point strictly inside (lo, hi) that is not a root of p.  Tries deg+2
// equally spaced candidates; p has at most deg roots, so at least two work.
mpq_class split_point(const Poly& p, const mpq_class& lo, const mpq_class& hi) {
  int d = poly_degree(p);
  mpq_class width = hi - lo;
  for (int k = 0; k <= d + 1; ++k) {
    mpq_class frac(2 * k + 1, 2 * (d + 2));
    frac.canonicalize();
    mpq_class cand = lo + width * frac;
    cand.canonicalize();
    if (poly_sign_at(p, cand) != 0) return cand;
  }
  throw std::logic_error("no non-root split point found");
}

}  // namespace

AlgebraicReal largest_root(const Poly& p) {
  AlgebraicReal a;
  a.p = poly_squarefree(p);
  if (poly_degree(a.p) < 1) throw std::invalid_argument("polynomial has no roots");
  a.chain = sturm_chain(a.p);
  mpq_class b = poly_cauchy_bound(a.p);
  a.lo = -b;
  a.hi = b;
  if (sturm_roots_between(a.chain, a.lo, a.hi) < 1)
    throw std::invalid_argument("polynomial has no real roots");
  while (sturm_roots_between(a.chain, a.lo, a.hi) > 1) {
    mpq_class m = split_point(a.p, a.lo, a.hi);
    if (sturm_roots_between(a.chain, m, a.hi) >= 1)
      a.lo = m;
    else
      a.hi = m;
  }
  return a;
}

void refine_once(AlgebraicReal& a) {
  // Exactly one simple root inside, so the sign flips across the interval.
  mpq_class m = split_point(a.p, a.lo, a.hi);
  if (poly_sign_at(a.p, m) == poly_sign_at(a.p, a.lo))
    a.lo = m;
  else
    a.hi = m;
}

void refine_below(AlgebraicReal& a, const mpq_class& width) {
  while (a.hi - a.lo >= width) refine_once(a);
}

int compare(AlgebraicReal a, AlgebraicReal b) {
  Poly g = poly_gcd(a.p, b.p);
  bool common = poly_degree(g) >= 1;
  std::vector<Poly> gchain;
  bool a_in_g = false, b_in_g = false;
  if (common) {
    gchain = sturm_chain(g);
    // Each isolating interval holds one root of its own polynomial; the
    // common factor's roots are a subset, so a count of 1 says the number
    // itself is a root of g.  Endpoints are non-roots of g a fortiori.
    a_in_g = sturm_roots_between(gchain, a.lo, a.hi) == 1;
    b_in_g = sturm_roots_between(gchain, b.lo, b.hi) == 1;
  }
  bool may_be_equal = common && a_in_g && b_in_g;
  while (true) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    if (may_be_equal) {
      mpq_class hl = std::min(a.lo, b.lo), hh = std::max(a.hi, b.hi);
      if (sturm_roots_between(gchain, hl, hh) == 1) return 0;
    }
    refine_once(a);
    refine_once(b);
  }
}

int compare_with_rational(AlgebraicReal a, const mpq_class& r) {
  while (true) {
    if (r <= a.lo) return 1;
    if (r >= a.hi) return -1;
    if (poly_sign_at(a.p, r) == 0) return 0;  // isolated root hit exactly
    refine_once(a);
  }
}

AlgebraicReal square_positive(AlgebraicReal a) {
  while (a.lo <= 0) refine_once(a);
  AlgebraicReal s;
  s.p = poly_squarefree(poly_root_squares(a.p));
  s.chain = sturm_chain(s.p);
  while (true) {
    mpq_class lo2 = a.lo * a.lo, hi2 = a.hi * a.hi;
    lo2.canonicalize();
    hi2.canonicalize();
    if (poly_sign_at(s.p, lo2) != 0 && poly_sign_at(s.p, hi2) != 0 &&
        sturm_roots_between(s.chain, lo2, hi2) == 1) {
      s.lo = lo2;
      s.hi = hi2;
      return s;
    }
    refine_once(a);
  }
}

AlgebraicReal shifted(const AlgebraicReal& a, long c) {
  AlgebraicReal s;
  s.p = poly_primitive(poly_shift_roots(a.p, c));
  s.chain = sturm_chain(s.p);
  s.lo = a.lo + c;
  s.hi = a.hi + c;
  return s;
}

}  // namespace thetawb
