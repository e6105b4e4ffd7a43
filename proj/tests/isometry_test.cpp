#include <doctest.h>

#include "k3ns/isometry.hpp"

using namespace k3ns;

TEST_CASE("construction validates the isometry conditions") {
  Lattice u = standard_lattice("U");
  CHECK_NOTHROW(make_isometry(u, IntMatrix::identity(2)));
  // Unimodular but not form-preserving.
  CHECK_THROWS_AS(make_isometry(u, IntMatrix{{Int(1), Int(1)}, {Int(0), Int(1)}}), domain_error);
  // Form-preserving scalings with |det| != 1 cannot exist, but check the
  // determinant guard on a plainly non-unimodular matrix.
  CHECK_THROWS_AS(make_isometry(u, IntMatrix{{Int(2), Int(0)}, {Int(0), Int(1)}}), domain_error);
  CHECK_THROWS_AS(make_isometry(u, IntMatrix::identity(3)), domain_error);
}

TEST_CASE("orders") {
  CHECK(order(rho0(), 10) == 7);
  CHECK(order(rho6(), 10) == 7);
  CHECK(order(rho_full(), 10) == 7);
  IntegerIsometry id = make_isometry(standard_lattice("U"), IntMatrix::identity(2));
  CHECK(order(id, 10) == 1);
  CHECK_THROWS_AS(order(rho0(), 5), domain_error);
  CHECK_THROWS_AS(order(id, 0), domain_error);
}

TEST_CASE("fixed sublattices") {
  CHECK(fixed_sublattice(rho0()).rank() == 0);
  CHECK(fixed_sublattice(rho6()).rank() == 0);
  CHECK(fixed_sublattice(rho_full()).rank() == 0);
  IntegerIsometry id = make_isometry(standard_lattice("U"), IntMatrix::identity(2));
  Lattice fixed = fixed_sublattice(id);
  CHECK(fixed.rank() == 2);
  CHECK(abs(det_bareiss(fixed.gram)) == 1);  // all of U, primitively

  // Swap on U + U: fixed part is the diagonal, a copy of U(2).
  IntMatrix swap(4, 4);
  swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = 1;
  IntegerIsometry s = make_isometry(parse_lattice_expr("U+U"), swap);
  Lattice diag = fixed_sublattice(s);
  CHECK(diag.rank() == 2);
  CHECK(det_bareiss(diag.gram) == -4);
}

TEST_CASE("discriminant group action") {
  CHECK(discriminant_action_trivial(rho0()));
  CHECK(discriminant_action_trivial(rho6()));
  CHECK(discriminant_action_trivial(rho_full()));
  // Negation on U(7) moves a generator of (Z/7)^2.
  Lattice u7 = twist(standard_lattice("U"), Int(7));
  IntMatrix neg(2, 2);
  neg(0, 0) = neg(1, 1) = -1;
  CHECK_FALSE(discriminant_action_trivial(make_isometry(u7, neg)));
  // Negation acts trivially on (Z/2)-groups.
  Lattice u2 = twist(standard_lattice("U"), Int(2));
  CHECK(discriminant_action_trivial(make_isometry(u2, neg)));
}

TEST_CASE("appendix eigenvector checks") {
  CHECK(eigen_check(rho0(), appendix_vector_v(), 1));
  CHECK_FALSE(eigen_check(rho0(), appendix_vector_v(), 2));
  CHECK(eigen_check(rho6(), appendix_vector_w(), 1));

  Cyclotomic expected_v = (Cyclotomic::zeta_pow(7, 1) + Cyclotomic::zeta_pow(7, 6)) * Rat(7);
  CHECK(hermitian_norm(rho0().lattice, appendix_vector_v()) == expected_v);
  CHECK(hermitian_norm(rho6().lattice, appendix_vector_w()) ==
        Cyclotomic::from_rational(7, Rat(-7)));

  CycVector zero{7, std::vector<Cyclotomic>(6, Cyclotomic::zero(7))};
  CHECK(hermitian_norm(rho6().lattice, zero).is_zero());

  CycVector wrong{7, std::vector<Cyclotomic>(3, Cyclotomic::zero(7))};
  CHECK_THROWS_AS(hermitian_norm(rho6().lattice, wrong), domain_error);
  CHECK_THROWS_AS(eigen_check(rho6(), wrong, 1), domain_error);
}

TEST_CASE("hermitian norms are real") {
  CHECK(hermitian_norm(rho0().lattice, appendix_vector_v()).conj() ==
        hermitian_norm(rho0().lattice, appendix_vector_v()));
  CHECK(hermitian_norm(rho6().lattice, appendix_vector_w()).conj() ==
        hermitian_norm(rho6().lattice, appendix_vector_w()));
}
