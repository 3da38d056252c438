#pragma once

#include <gmpxx.h>

#include <vector>

namespace thetawb {

// Integer polynomial, coefficients ascending by degree, no trailing zeros
// (the zero polynomial is the empty vector).
using Poly = std::vector<mpz_class>;

int poly_degree(const Poly& p);
void poly_trim(Poly& p);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
mpq_class poly_eval(const Poly& p, const mpq_class& x);
int poly_sign_at(const Poly& p, const mpq_class& x);

// Primitive part with the sign of the leading coefficient made positive.
Poly poly_primitive(const Poly& p);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_squarefree(const Poly& p);

// p(x - c), i.e. every root moves up by c.
Poly poly_shift_roots(const Poly& p, long c);

// Polynomial whose roots are exactly the squares of p's roots (with
// multiplicity bookkeeping irrelevant here): the even part of p(y)p(-y).
Poly poly_root_squares(const Poly& p);

// All real roots lie strictly inside (-bound, bound).
mpq_class poly_cauchy_bound(const Poly& p);

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& squarefree);
int sturm_variations(const std::vector<Poly>& chain, const mpq_class& x);
// Number of distinct roots in (lo, hi); both endpoints must be non-roots.
int sturm_roots_between(const std::vector<Poly>& chain, const mpq_class& lo, const mpq_class& hi);

}  // namespace thetawb
