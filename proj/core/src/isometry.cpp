#include "k3ns/isometry.hpp"

namespace k3ns {

IntegerIsometry make_isometry(Lattice lattice, IntMatrix matrix) {
  if (matrix.rows() != lattice.rank() || matrix.cols() != lattice.rank())
    throw domain_error("isometry matrix shape mismatch");
  Int d = det_bareiss(matrix);
  if (d != 1 && d != -1) throw domain_error("isometry matrix is not unimodular");
  if (matrix.transpose() * lattice.gram * matrix != lattice.gram)
    throw domain_error("matrix does not preserve the bilinear form");
  return IntegerIsometry{std::move(lattice), std::move(matrix)};
}

namespace {

// U + U + K7 in the appendix basis e1, f1, e2, f2, x, y with
// x^2 = -2, y^2 = -4, (x, y) = 1.
Lattice appendix_uuk7() {
  IntMatrix u{{Int(0), Int(1)}, {Int(1), Int(0)}};
  IntMatrix k7{{Int(-2), Int(1)}, {Int(1), Int(-4)}};
  return make_lattice(block_diag(block_diag(u, u), k7), "U+U+K7");
}

}  // namespace

IntegerIsometry rho0() {
  // Images of e1, f1, e2, f2, x, y as columns.
  IntMatrix m{{Int(1), Int(2), Int(0), Int(0), Int(1), Int(3)},
              {Int(1), Int(0), Int(-1), Int(-1), Int(2), Int(-1)},
              {Int(1), Int(1), Int(1), Int(1), Int(-1), Int(4)},
              {Int(1), Int(2), Int(1), Int(0), Int(1), Int(3)},
              {Int(0), Int(0), Int(1), Int(0), Int(-1), Int(1)},
              {Int(-1), Int(-1), Int(0), Int(0), Int(-1), Int(-2)}};
  return make_isometry(appendix_uuk7(), std::move(m));
}

IntegerIsometry rho6() {
  // r_i -> r_{i+1} for i <= 5, r_6 -> -(r_1 + ... + r_6).
  const int n = 6;
  IntMatrix m(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -1;
  return make_isometry(standard_lattice("A6"), std::move(m));
}

IntegerIsometry rho_full() {
  IntegerIsometry a = rho0();
  IntegerIsometry b = rho6();
  Lattice l = direct_sum(direct_sum(a.lattice, b.lattice), b.lattice);
  l.label = "U+U+K7+A6+A6";
  IntMatrix m = block_diag(block_diag(a.matrix, b.matrix), b.matrix);
  return make_isometry(std::move(l), std::move(m));
}

int order(const IntegerIsometry& m, int bound) {
  if (bound < 1) throw domain_error("order bound must be >= 1");
  const IntMatrix id = IntMatrix::identity(m.matrix.rows());
  IntMatrix power = m.matrix;
  for (int k = 1; k <= bound; ++k) {
    if (power == id) return k;
    power = power * m.matrix;
  }
  throw domain_error("isometry order exceeds bound " + std::to_string(bound));
}

Lattice fixed_sublattice(const IntegerIsometry& m) {
  const int n = m.matrix.rows();
  IntMatrix shifted = m.matrix - IntMatrix::identity(n);
  IntMatrix basis = integer_kernel(shifted);
  IntMatrix gram = basis.transpose() * m.lattice.gram * basis;
  // Primitive by construction (columns of a unimodular transform).
  return Lattice{std::move(gram), m.lattice.label + "^fixed"};
}

bool discriminant_action_trivial(const IntegerIsometry& m) {
  if (m.lattice.rank() == 0) return true;
  RatMatrix dual = inverse(to_rational(m.lattice.gram));  // columns generate L*
  RatMatrix moved = to_rational(m.matrix) * dual - dual;
  for (int i = 0; i < moved.rows(); ++i)
    for (int j = 0; j < moved.cols(); ++j)
      if (!is_integer(moved(i, j))) return false;
  return true;
}

bool eigen_check(const IntegerIsometry& m, const CycVector& v, int k) {
  const int n = m.matrix.rows();
  if (static_cast<int>(v.entries.size()) != n)
    throw domain_error("eigenvector length does not match lattice rank");
  Cyclotomic zeta_k = Cyclotomic::zeta_pow(v.p, k);
  for (int i = 0; i < n; ++i) {
    Cyclotomic acc = Cyclotomic::zero(v.p);
    for (int j = 0; j < n; ++j) {
      if (m.matrix(i, j) == 0) continue;
      acc = acc + v.entries[static_cast<std::size_t>(j)] * Rat(m.matrix(i, j));
    }
    if (acc != zeta_k * v.entries[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Cyclotomic hermitian_norm(const Lattice& l, const CycVector& v) {
  if (static_cast<int>(v.entries.size()) != l.rank())
    throw domain_error("vector length does not match lattice rank");
  Cyclotomic acc = Cyclotomic::zero(v.p);
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) {
      if (l.gram(i, j) == 0) continue;
      acc = acc + v.entries[static_cast<std::size_t>(i)] *
                      v.entries[static_cast<std::size_t>(j)].conj() * Rat(l.gram(i, j));
    }
  return acc;
}

namespace {

Cyclotomic zsum(std::initializer_list<std::pair<int, int>> terms) {
  // sum of c * zeta^e over (c, e) pairs, in Q(zeta_7).
  Cyclotomic acc = Cyclotomic::zero(7);
  for (auto [c, e] : terms) acc = acc + Cyclotomic::zeta_pow(7, e) * Rat(c);
  return acc;
}

}  // namespace

CycVector appendix_vector_v() {
  // v = (-1 + z^2 + z^4 - z^5) e1 + (z^3 - 1) f1 + (z - z^5) e2 +
  //     (z^2 - z^5) f2 + x + (1 + z^5) y
  return CycVector{7,
                   {zsum({{-1, 0}, {1, 2}, {1, 4}, {-1, 5}}), zsum({{1, 3}, {-1, 0}}),
                    zsum({{1, 1}, {-1, 5}}), zsum({{1, 2}, {-1, 5}}), zsum({{1, 0}}),
                    zsum({{1, 0}, {1, 5}})}};
}

CycVector appendix_vector_w() {
  // w = r1 + (z^6 + 1) r2 + (1 + z^5 + z^6) r3 - (z + z^2 + z^3) r4 -
  //     (z + z^2) r5 - z r6
  return CycVector{7,
                   {zsum({{1, 0}}), zsum({{1, 6}, {1, 0}}), zsum({{1, 0}, {1, 5}, {1, 6}}),
                    zsum({{-1, 1}, {-1, 2}, {-1, 3}}), zsum({{-1, 1}, {-1, 2}}),
                    zsum({{-1, 1}})}};
}

}  // namespace k3ns
