#pragma once

#include <cstdint>
#include <vector>

#include "algebraic.hpp"
#include "graph.hpp"
#include "poly.hpp"

namespace thetawb {

// Characteristic polynomial of the adjacency matrix, monic with integer
// coefficients, ascending by degree.
Poly char_poly(const Graph& g);

// Certified enclosure of the spectral radius: lo <= rho(G) <= hi, both
// rational, established by exact arithmetic.
struct RhoInterval {
  mpq_class lo, hi;
};

struct PerronEstimate {
  std::vector<double> vec;  // unit vector supported on a dominant component
  double rayleigh = 0.0;
  double residual = 0.0;  // certified bound on |rho(G) - rayleigh|
};

// Floating-point power iteration with an exact-rational certification pass.
// Deterministic for a fixed seed.  Works for any graph order.
PerronEstimate rho_estimate(const Graph& g, double tol, std::uint64_t seed = 2026);
RhoInterval rho_bracket(const Graph& g, double tol);

// Isolate rho(G) to the requested interval width via the characteristic
// polynomial.  Exact-arithmetic tier, order at most 32.
RhoInterval rho_exact(const Graph& g, const mpq_class& width);

enum class Cmp { Less, Equal, Greater };

// Exact trichotomy of rho(A) against rho(B).  Tries certified brackets
// first; falls back to algebraic comparison (order at most 32) only when
// the brackets overlap.
Cmp compare_rho(const Graph& a, const Graph& b);

// Decides rho(G)^2 <= rho(G - u)^2 + 2 deg(u) exactly.
bool vertex_deletion_bound_check(const Graph& g, int u);

// 2e/n, the Rayleigh quotient of the all-ones vector: a lower bound on rho.
mpq_class rayleigh_lower_bound(const Graph& g);

}  // namespace thetawb
