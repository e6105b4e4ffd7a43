#pragma once

#include <vector>

#include "k3ns/cyclotomic.hpp"

namespace k3ns {

// c0 + c1 * alpha, with alpha the curve parameter 1 - g + k.
struct LinearInAlpha {
  Rat c0;
  Rat c1;
  Rat eval(const Rat& alpha) const { return c0 + c1 * alpha; }
  bool operator==(const LinearInAlpha& o) const { return c0 == o.c0 && c1 == o.c1; }
};

// c0 + c1 * r.
struct AffineInR {
  Rat c0;
  Rat c1;
  Rat eval(long r) const { return c0 + c1 * Rat(r); }
  bool operator==(const AffineInR& o) const { return c0 == o.c0 && c1 == o.c1; }
};

struct LefschetzSolution {
  int p = 0;
  // Indexed by point type: n_t[t-1] for t = 1..(p-1)/2, the unordered
  // eigenvalue pairs {zeta^{t+1}, zeta^{p-t}}. Empty for p = 2.
  std::vector<LinearInAlpha> n_t;
  LinearInAlpha n_total{Rat(0), Rat(0)};
  AffineInR alpha_of_r{Rat(0), Rat(0)};
};

// det(I - A_{p,t}) = (1 - z^{t+1})(1 - z^{p-t}) for the local action
// A_{p,t} = diag(z^{t+1}, z^{p-t}), 1 <= t <= p-2. Computed from the
// matrix; the reindexed factorization (1 - z^t)(1 - z^{p-t+1}) sometimes
// quoted for it vanishes at t = 1 and is wrong.
Cyclotomic local_determinant(int p, int t);

// a(t) = 1 / det(I - A_{p,t}).
Cyclotomic point_contribution(int p, int t);

// b(g) = (1 + z)(1 - g)/(1 - z)^2. b(1) = 0, and b(0) = 0 when p = 2.
Cyclotomic curve_contribution(int p, const Int& g);

// Derives the isolated-point counts by exact linear algebra over Q(zeta_p):
// the holomorphic Lefschetz identity 1 + z^{p-1} = sum_t n_t a(t) + alpha b(0)
// gives p-1 rational equations whose solution space is one-dimensional in
// alpha; alpha_of_r then comes from the topological count
// chi(fixed locus) = 2 + r - m = n(alpha) + 2 alpha with m = (22-r)/(p-1).
// p = 2 degenerates (both sides vanish) and is defined directly as
// "no point types, alpha = r - 10".
LefschetzSolution solve_table1(int p);

}  // namespace k3ns
