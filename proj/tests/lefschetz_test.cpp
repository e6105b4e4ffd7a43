#include <doctest.h>

#include "k3ns/lefschetz.hpp"

using namespace k3ns;

namespace {

Cyclotomic one(int p) { return Cyclotomic::one(p); }
Cyclotomic zeta(int p, int k) { return Cyclotomic::zeta_pow(p, k); }

}  // namespace

TEST_CASE("local determinants from the matrix definition") {
  // A_{3,1} = diag(z^2, z^2).
  CHECK(local_determinant(3, 1) == (one(3) - zeta(3, 2)) * (one(3) - zeta(3, 2)));
  // A_{5,2} = diag(z^3, z^3).
  CHECK(local_determinant(5, 2) == (one(5) - zeta(5, 3)) * (one(5) - zeta(5, 3)));
  // A_{7,3} = diag(z^4, z^4).
  CHECK(local_determinant(7, 3) == (one(7) - zeta(7, 4)) * (one(7) - zeta(7, 4)));
  // Unordered type symmetry: t and p-1-t give the same determinant.
  CHECK(local_determinant(7, 1) == local_determinant(7, 5));
  CHECK(local_determinant(11, 2) == local_determinant(11, 8));
  for (int t = 1; t <= 5; ++t) CHECK_FALSE(local_determinant(7, t).is_zero());
  CHECK_THROWS_AS(local_determinant(7, 0), domain_error);
  CHECK_THROWS_AS(local_determinant(7, 6), domain_error);
}

TEST_CASE("curve contributions") {
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19}) CHECK(curve_contribution(p, Int(1)).is_zero());
  // b(0) = (1+z)/(1-z)^2 for p = 3.
  Cyclotomic denom = (one(3) - zeta(3, 1)) * (one(3) - zeta(3, 1));
  CHECK(curve_contribution(3, Int(0)) == (one(3) + zeta(3, 1)) * denom.inv());
  // p = 2: 1 + z = 0 kills b entirely.
  CHECK(curve_contribution(2, Int(0)).is_zero());
  // Two displayed routes to b(g) agree: (1-g)/(1-z) - z(2g-2)/(1-z)^2.
  for (int p : {5, 7, 13}) {
    for (long g : {0L, 2L, 3L}) {
      Cyclotomic z = zeta(p, 1);
      Cyclotomic inv1 = (one(p) - z).inv();
      Cyclotomic route2 = inv1 * Rat(1 - g) - z * inv1 * inv1 * Rat(2 * g - 2);
      CHECK(curve_contribution(p, Int(g)) == route2);
    }
  }
}

TEST_CASE("solved point-count rows") {
  LefschetzSolution s5 = solve_table1(5);
  REQUIRE(s5.n_t.size() == 2);
  CHECK(s5.n_t[0] == LinearInAlpha{Rat(3), Rat(2)});  // 2a+3
  CHECK(s5.n_t[1] == LinearInAlpha{Rat(1), Rat(1)});  // a+1
  CHECK(s5.alpha_of_r == AffineInR{ratio(-3, 2), ratio(1, 4)});  // (r-6)/4

  LefschetzSolution s2 = solve_table1(2);
  CHECK(s2.n_t.empty());
  CHECK(s2.n_total == LinearInAlpha{Rat(0), Rat(0)});
  CHECK(s2.alpha_of_r == AffineInR{Rat(-10), Rat(1)});

  LefschetzSolution s19 = solve_table1(19);
  REQUIRE(s19.n_t.size() == 9);
  CHECK(s19.n_t[4] == LinearInAlpha{Rat(2), Rat(2)});  // n5 = 2a+2
  CHECK(s19.n_t[3] == LinearInAlpha{Rat(1), Rat(2)});
  CHECK(s19.n_t[5] == LinearInAlpha{Rat(1), Rat(2)});
  CHECK(s19.n_t[6] == LinearInAlpha{Rat(1), Rat(2)});
  CHECK(s19.n_t[8] == LinearInAlpha{Rat(0), Rat(1)});  // n9 = a
  CHECK(s19.n_total == LinearInAlpha{Rat(5), Rat(17)});
  CHECK(s19.alpha_of_r == AffineInR{ratio(-2, 9), ratio(1, 18)});

  // p = 13 evaluated at alpha = 1: (3, 3, 2, 1, 0, 0), n = 9.
  LefschetzSolution s13 = solve_table1(13);
  REQUIRE(s13.n_t.size() == 6);
  std::vector<long> expected{3, 3, 2, 1, 0, 0};
  for (std::size_t i = 0; i < 6; ++i) CHECK(s13.n_t[i].eval(Rat(1)) == expected[i]);
  CHECK(s13.n_total.eval(Rat(1)) == 9);

  CHECK_THROWS_AS(solve_table1(4), domain_error);
  CHECK_THROWS_AS(solve_table1(23), domain_error);
}

TEST_CASE("alpha is pinned by the topological count") {
  for (int p : {3, 5, 7, 11, 13, 17, 19}) {
    LefschetzSolution sol = solve_table1(p);
    for (int r = 2; r <= 20; r += 2) {
      if ((22 - r) % (p - 1) != 0) continue;
      int m = (22 - r) / (p - 1);
      Rat alpha = sol.alpha_of_r.eval(r);
      CHECK(sol.n_total.eval(alpha) + 2 * alpha == Rat(2 + r - m));
    }
  }
}
