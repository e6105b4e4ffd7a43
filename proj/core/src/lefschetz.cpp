#include "k3ns/lefschetz.hpp"

#include "k3ns/linalg.hpp"

namespace k3ns {

namespace {

constexpr int kSupported[] = {2, 3, 5, 7, 11, 13, 17, 19};

void require_supported(int p) {
  for (int q : kSupported)
    if (q == p) return;
  throw domain_error("unsupported prime p = " + std::to_string(p));
}

}  // namespace

Cyclotomic local_determinant(int p, int t) {
  require_supported(p);
  if (t < 1 || t > p - 2)
    throw domain_error("point type t = " + std::to_string(t) + " out of range 1.." +
                       std::to_string(p - 2));
  Cyclotomic one = Cyclotomic::one(p);
  Cyclotomic a = one - Cyclotomic::zeta_pow(p, t + 1);
  Cyclotomic b = one - Cyclotomic::zeta_pow(p, p - t);
  return a * b;
}

Cyclotomic point_contribution(int p, int t) { return local_determinant(p, t).inv(); }

Cyclotomic curve_contribution(int p, const Int& g) {
  require_supported(p);
  Cyclotomic one = Cyclotomic::one(p);
  Cyclotomic zeta = Cyclotomic::zeta_pow(p, 1);
  Cyclotomic numerator = (one + zeta) * Cyclotomic::from_rational(p, Rat(Int(1) - g));
  if (numerator.is_zero()) return numerator;  // g = 1, or p = 2 where 1 + z = 0
  Cyclotomic denom = (one - zeta) * (one - zeta);
  return numerator * denom.inv();
}

LefschetzSolution solve_table1(int p) {
  require_supported(p);
  LefschetzSolution sol;
  sol.p = p;
  if (p == 2) {
    // Holomorphic identity degenerates (both sides zero); Table 1 row p=2
    // comes straight from the Euler count: chi = 2 + r - m = 2alpha.
    sol.n_total = LinearInAlpha{Rat(0), Rat(0)};
    sol.alpha_of_r = AffineInR{Rat(-10), Rat(1)};
    return sol;
  }

  // The local actions A_{p,t} and A_{p,p-1-t} differ by swapping the two
  // eigenvalues, so isolated points come in (p-1)/2 unordered types with
  // a(t) = a(p-1-t); those are the n_t columns of the table.
  const int types = (p - 1) / 2;
  const int coords = p - 1;  // power-basis coordinates

  // Coordinates of a(t) as columns.
  RatMatrix a(coords, types);
  for (int t = 1; t <= types; ++t) {
    Cyclotomic at = point_contribution(p, t);
    const auto& col = rational_coordinates(at);
    for (int i = 0; i < coords; ++i) a(i, t - 1) = col[static_cast<std::size_t>(i)];
  }
  // Right-hand sides: solve A n0 = lhs and A n1 = -b0, so that
  // n(alpha) = n0 + alpha n1 solves the full identity for every alpha.
  Cyclotomic lhs = Cyclotomic::one(p) + Cyclotomic::zeta_pow(p, p - 1);
  Cyclotomic b0 = curve_contribution(p, Int(0));
  RatMatrix rhs(coords, 2);
  for (int i = 0; i < coords; ++i) {
    rhs(i, 0) = rational_coordinates(lhs)[static_cast<std::size_t>(i)];
    rhs(i, 1) = -rational_coordinates(b0)[static_cast<std::size_t>(i)];
  }

  RatMatrix x = solve_exact(a, rhs);

  Rat total0(0), total1(0);
  for (int t = 0; t < types; ++t) {
    sol.n_t.push_back(LinearInAlpha{x(t, 0), x(t, 1)});
    total0 += x(t, 0);
    total1 += x(t, 1);
  }
  sol.n_total = LinearInAlpha{total0, total1};

  // 2 alpha + n(alpha) = 2 + r - (22 - r)/(p - 1), solved for alpha as an
  // affine function of r.
  Rat pm1(p - 1);
  Rat denom = Rat(2) + total1;
  if (denom == 0) throw internal_error("degenerate alpha equation");
  Rat c0 = (Rat(2) - ratio(22, p - 1) - total0) / denom;
  Rat c1 = (Rat(1) + Rat(1) / pm1) / denom;
  sol.alpha_of_r = AffineInR{c0, c1};
  return sol;
}

}  // namespace k3ns
