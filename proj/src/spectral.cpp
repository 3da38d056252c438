#include "spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <random>

namespace thetawb {

Poly char_poly(const Graph& g) {
  int n = g.order();
  Poly p(n + 1, mpz_class(0));
  p[n] = 1;
  if (n == 0) return p;
  // Faddeev-LeVerrier: N_0 = I, M_k = A N_{k-1}, c_k = -tr(M_k)/k,
  // N_k = M_k + c_k I.  The trace divisions are exact.
  std::vector<mpz_class> N(static_cast<size_t>(n) * n, mpz_class(0));
  for (int i = 0; i < n; ++i) N[static_cast<size_t>(i) * n + i] = 1;
  std::vector<mpz_class> M(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = g.neighbors(i);
      for (int j = 0; j < n; ++j) {
        mpz_class acc(0);
        std::uint64_t m = row;
        while (m) {
          int t = __builtin_ctzll(m);
          m &= m - 1;
          acc += N[static_cast<size_t>(t) * n + j];
        }
        M[static_cast<size_t>(i) * n + j] = acc;
      }
    }
    mpz_class tr(0);
    for (int i = 0; i < n; ++i) tr += M[static_cast<size_t>(i) * n + i];
    assert(tr % k == 0);
    mpz_class c = -tr / k;
    p[n - k] = c;
    N.swap(M);
    for (int i = 0; i < n; ++i) N[static_cast<size_t>(i) * n + i] += c;
  }
  return p;
}

namespace {

struct ComponentResult {
  std::vector<int> verts;
  std::vector<double> x;   // positive, aligned with verts
  mpq_class lo, hi;        // certified bounds on the component's rho
  double ray = 0.0;        // Rayleigh quotient of x, inside [lo, hi] roughly
};

// Power iteration on (A+I) restricted to one component, followed by an
// exact-rational Collatz-Wielandt pass: for any positive x,
//   min_i (Ax)_i / x_i  <=  rho  <=  max_i (Ax)_i / x_i.
ComponentResult iterate_component(const Graph& g, std::uint64_t comp, double tol,
                                  std::uint64_t seed) {
  ComponentResult r;
  for (std::uint64_t m = comp; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    r.verts.push_back(v);
  }
  size_t m = r.verts.size();
  r.x.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
  if (m == 1) {
    r.lo = r.hi = 0;
    r.x[0] = 1.0;
    return r;
  }
  std::vector<int> idx(kMaxVertices, -1);
  for (size_t i = 0; i < m; ++i) idx[r.verts[i]] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::vector<double> y(m);
  double best_spread = std::numeric_limits<double>::infinity();
  int stall = 0;
  const int max_iters = 20000;
  for (int it = 0; it < max_iters; ++it) {
    for (size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      std::uint64_t row = g.neighbors(r.verts[i]) & comp;
      while (row) {
        int t = __builtin_ctzll(row);
        row &= row - 1;
        acc += r.x[idx[t]];
      }
      y[i] = acc;
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double ratio = y[i] / r.x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    double spread = hi - lo;
    if (spread <= tol) break;
    if (spread < best_spread * 0.999) {
      best_spread = spread;
      stall = 0;
    } else if (++stall >= 1000) {
      std::uniform_real_distribution<double> dist(0.5, 1.5);
      for (size_t i = 0; i < m; ++i) r.x[i] = dist(rng);
      best_spread = std::numeric_limits<double>::infinity();
      stall = 0;
      continue;
    }
    double mx = 0.0;
    for (size_t i = 0; i < m; ++i) {
      r.x[i] += y[i];  // (A+I)x keeps iterates positive on bipartite parts
      mx = std::max(mx, r.x[i]);
    }
    for (size_t i = 0; i < m; ++i) r.x[i] /= mx;
  }
  // Certification: doubles convert to rationals exactly.
  std::vector<mpq_class> xq(m);
  for (size_t i = 0; i < m; ++i) {
    assert(r.x[i] > 0.0);
    xq[i] = mpq_class(r.x[i]);
  }
  bool first = true;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < m; ++i) {
    mpq_class acc(0);
    double accd = 0.0;
    std::uint64_t row = g.neighbors(r.verts[i]) & comp;
    while (row) {
      int t = __builtin_ctzll(row);
      row &= row - 1;
      acc += xq[idx[t]];
      accd += r.x[idx[t]];
    }
    mpq_class ratio = acc / xq[i];
    ratio.canonicalize();
    if (first || ratio < r.lo) r.lo = ratio;
    if (first || ratio > r.hi) r.hi = ratio;
    first = false;
    num += r.x[i] * accd;
    den += r.x[i] * r.x[i];
  }
  r.ray = num / den;
  return r;
}

std::vector<ComponentResult> all_components(const Graph& g, double tol, std::uint64_t seed) {
  std::vector<ComponentResult> out;
  for (std::uint64_t comp : g.components()) out.push_back(iterate_component(g, comp, tol, seed));
  return out;
}

}  // namespace

PerronEstimate rho_estimate(const Graph& g, double tol, std::uint64_t seed) {
  PerronEstimate est;
  est.vec.assign(g.order(), 0.0);
  if (g.order() == 0) return est;
  auto comps = all_components(g, tol, seed);
  size_t dom = 0;
  mpq_class glo = comps[0].lo;
  for (size_t c = 1; c < comps.size(); ++c) {
    if (comps[c].hi > comps[dom].hi) dom = c;
    if (comps[c].lo > glo) glo = comps[c].lo;
  }
  const ComponentResult& d = comps[dom];
  double norm = 0.0;
  for (double v : d.x) norm += v * v;
  norm = std::sqrt(norm);
  for (size_t i = 0; i < d.verts.size(); ++i) est.vec[d.verts[i]] = d.x[i] / norm;
  est.rayleigh = d.ray;
  // rho lies in [max_c lo_c, hi_dom] and the Rayleigh quotient of a positive
  // vector is a convex combination of the Collatz-Wielandt ratios, hence in
  // [lo_dom, hi_dom]; both points sit inside [lo_dom, hi_dom].
  double spread = mpq_class(d.hi - d.lo).get_d();
  est.residual = spread * (1.0 + 1e-9) + 1e-15;
  return est;
}

RhoInterval rho_bracket(const Graph& g, double tol) {
  RhoInterval iv{mpq_class(0), mpq_class(0)};
  if (g.order() == 0) return iv;
  auto comps = all_components(g, tol, /*seed=*/2026);
  iv.lo = comps[0].lo;
  iv.hi = comps[0].hi;
  for (size_t c = 1; c < comps.size(); ++c) {
    if (comps[c].lo > iv.lo) iv.lo = comps[c].lo;
    if (comps[c].hi > iv.hi) iv.hi = comps[c].hi;
  }
  if (iv.lo < 0) iv.lo = 0;
  return iv;
}

RhoInterval rho_exact(const Graph& g, const mpq_class& width) {
  if (g.order() > 32) throw Error(Errc::too_large, "exact spectral tier is limited to order 32");
  if (g.order() == 0) return {mpq_class(0), mpq_class(0)};
  AlgebraicReal a = largest_root(char_poly(g));
  refine_below(a, width);
  RhoInterval iv{a.lo, a.hi};
  if (iv.lo < 0) iv.lo = 0;
  return iv;
}

Cmp compare_rho(const Graph& a, const Graph& b) {
  for (double tol : {1e-6, 1e-10}) {
    RhoInterval ia = rho_bracket(a, tol), ib = rho_bracket(b, tol);
    if (ia.hi < ib.lo) return Cmp::Less;
    if (ib.hi < ia.lo) return Cmp::Greater;
    if (ia.lo == ia.hi && ib.lo == ib.hi) {
      return ia.lo < ib.lo ? Cmp::Less : (ia.lo > ib.lo ? Cmp::Greater : Cmp::Equal);
    }
  }
  if (a.order() > 32 || b.order() > 32)
    throw Error(Errc::too_large, "rho comparison undecided within the certified brackets");
  AlgebraicReal ra = largest_root(char_poly(a));
  AlgebraicReal rb = largest_root(char_poly(b));
  int c = compare(ra, rb);
  return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
}

bool vertex_deletion_bound_check(const Graph& g, int u) {
  int n = g.order();
  if (n < 2 || u < 0 || u >= n) throw Error(Errc::invalid_argument, "vertex deletion needs 2 <= n and a valid vertex");
  long d = g.degree(u);
  if (d == 0) return true;  // deletion only removes a zero eigenvalue's worth
  Graph h = g.without_vertex(u);
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    RhoInterval bg = rho_bracket(g, tol), bh = rho_bracket(h, tol);
    mpq_class lhs_hi = bg.hi * bg.hi, lhs_lo = bg.lo * bg.lo;
    mpq_class rhs_lo = bh.lo * bh.lo + 2 * d, rhs_hi = bh.hi * bh.hi + 2 * d;
    if (lhs_hi <= rhs_lo) return true;
    if (lhs_lo > rhs_hi) return false;
  }
  if (n > 32) throw Error(Errc::unsupported, "vertex deletion bound undecided within the certified brackets");
  AlgebraicReal sg = square_positive(largest_root(char_poly(g)));
  if (h.edge_count() == 0) return compare_with_rational(sg, mpq_class(2 * d)) <= 0;
  AlgebraicReal sh = square_positive(largest_root(char_poly(h)));
  return compare(sg, shifted(sh, 2 * d)) <= 0;
}

mpq_class rayleigh_lower_bound(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::invalid_argument, "empty graph has no Rayleigh quotient");
  mpq_class q(2 * static_cast<long>(g.edge_count()), g.order());
  q.canonicalize();
  return q;
}

}  // namespace thetawb
