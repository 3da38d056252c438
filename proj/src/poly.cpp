#include "poly.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace thetawb {

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  poly_trim(d);
  return d;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

mpq_class poly_eval(const Poly& p, const mpq_class& x) {
  mpq_class acc(0);
  for (size_t i = p.size(); i-- > 0;) {
    acc = acc * x + p[i];
  }
  acc.canonicalize();
  return acc;
}

int poly_sign_at(const Poly& p, const mpq_class& x) {
  mpq_class v = poly_eval(p, x);
  return sgn(v);
}

namespace {

mpz_class content(const Poly& p) {
  mpz_class c(0);
  for (const auto& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  return c;  // nonnegative; 0 only for the zero polynomial
}

// Pseudo-remainder r with lc(b)^(deg a - deg b + 1) * a = q*b + r, combined
// with a sign fix so that sgn(r) matches the sign of the rational remainder
// of a by b.  Requires deg a >= deg b >= 0.
Poly signed_prem(Poly a, const Poly& b) {
  int da = poly_degree(a), db = poly_degree(b);
  const mpz_class& lb = b.back();
  int steps = da - db + 1;
  for (int k = 0; k < steps; ++k) {
    int cur = poly_degree(a);
    for (auto& c : a) c *= lb;
    if (cur >= db) {
      mpz_class q = a[cur] / lb;  // exact: a's lead is divisible after scaling
      for (int i = 0; i <= db; ++i) a[cur - db + i] -= q * b[i];
      poly_trim(a);
    }
  }
  // Total multiplier applied to a is lb^steps; flip sign if that was negative.
  if (lb < 0 && (steps & 1)) {
    for (auto& c : a) c = -c;
  }
  return a;
}

}  // namespace

Poly poly_primitive(const Poly& p) {
  Poly r = p;
  poly_trim(r);
  if (r.empty()) return r;
  mpz_class c = content(r);
  if (r.back() < 0) c = -c;
  for (auto& a : r) a /= c;
  return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly f = poly_primitive(a), g = poly_primitive(b);
  if (f.empty()) return g;
  if (g.empty()) return f;
  if (poly_degree(f) < poly_degree(g)) std::swap(f, g);
  while (!g.empty()) {
    Poly r = poly_primitive(signed_prem(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  return f;  // primitive, positive leading coefficient
}

Poly poly_squarefree(const Poly& p) {
  Poly q = poly_primitive(p);
  if (poly_degree(q) <= 1) return q;
  Poly g = poly_gcd(q, poly_derivative(q));
  if (poly_degree(g) == 0) return q;
  // Exact division q / g over the integers (both primitive).
  Poly r;
  Poly rem = q;
  int dg = poly_degree(g);
  int dr = poly_degree(q) - dg;
  r.assign(dr + 1, mpz_class(0));
  for (int k = dr; k >= 0; --k) {
    if (poly_degree(rem) < dg + k) continue;
    mpz_class c = rem[dg + k] / g[dg];
    r[k] = c;
    for (int i = 0; i <= dg; ++i) rem[i + k] -= c * g[i];
    poly_trim(rem);
  }
  assert(rem.empty());
  return poly_primitive(r);
}

Poly poly_shift_roots(const Poly& p, long c) {
  // q(x) = p(x - c) via Horner in the ring of polynomials.
  Poly q;
  Poly base = {mpz_class(-c), mpz_class(1)};  // (x - c)
  for (size_t i = p.size(); i-- > 0;) {
    q = poly_mul(q, base);
    if (q.empty()) q.push_back(mpz_class(0));
    q[0] += p[i];
    poly_trim(q);
  }
  return q;
}

Poly poly_root_squares(const Poly& p) {
  Poly neg = p;
  for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  Poly prod = poly_mul(p, neg);  // even polynomial in y
  Poly out;
  for (size_t i = 0; i < prod.size(); i += 2) {
    if (i + 1 < prod.size()) assert(prod[i + 1] == 0);
    out.push_back(prod[i]);
  }
  poly_trim(out);
  return out;
}

mpq_class poly_cauchy_bound(const Poly& p) {
  if (p.empty() || poly_degree(p) == 0) return mpq_class(1);
  mpz_class mx(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    mpz_class a = abs(p[i]);
    if (a > mx) mx = a;
  }
  mpq_class b(mx, abs(p.back()));
  b.canonicalize();
  return b + 1;
}

std::vector<Poly> sturm_chain(const Poly& squarefree) {
  std::vector<Poly> chain;
  Poly p0 = poly_primitive(squarefree);
  if (p0.empty()) throw std::invalid_argument("sturm chain of zero polynomial");
  chain.push_back(p0);
  Poly p1 = poly_derivative(p0);
  poly_trim(p1);
  if (p1.empty()) return chain;  // constant p0
  chain.push_back(p1);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    if (poly_degree(b) == 0) break;
    Poly r = signed_prem(a, b);
    if (r.empty()) break;  // cannot happen for squarefree input, kept defensive
    for (auto& c : r) c = -c;
    // Positive scaling preserves the sign sequence.
    mpz_class cont = content(r);
    for (auto& c : r) c /= cont;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sturm_variations(const std::vector<Poly>& chain, const mpq_class& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = poly_sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sturm_roots_between(const std::vector<Poly>& chain, const mpq_class& lo, const mpq_class& hi) {
  assert(lo <= hi);
  assert(poly_sign_at(chain[0], lo) != 0 && poly_sign_at(chain[0], hi) != 0);
  return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

}  // namespace thetawb
