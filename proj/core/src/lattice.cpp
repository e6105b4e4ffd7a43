#include "k3ns/lattice.hpp"

#include <algorithm>

namespace k3ns {

Lattice make_lattice(IntMatrix gram, std::string label) {
  if (gram.rows() != gram.cols()) throw domain_error("Gram matrix must be square");
  if (!gram.is_symmetric()) throw domain_error("Gram matrix must be symmetric");
  for (int i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0)
      throw domain_error("lattice is not even: odd diagonal entry at " + std::to_string(i));
  if (gram.rows() > 0 && det_bareiss(gram) == 0)
    throw domain_error("degenerate Gram matrix (determinant zero)");
  return Lattice{std::move(gram), std::move(label)};
}

std::optional<int> LatticeInvariants::exponent_for(const Int& p) const {
  if (unimodular) return 0;
  if (elementary && elementary->first == p) return elementary->second;
  return std::nullopt;
}

LatticeInvariants invariants(const Lattice& l) {
  LatticeInvariants inv;
  inv.rank = l.rank();
  inv.det = det_bareiss(l.gram);
  if (inv.rank > 0 && inv.det == 0) throw domain_error("degenerate Gram matrix");
  if (inv.rank == 0) inv.det = 1;

  Signature sig = signature_of(to_rational(l.gram));
  inv.s_plus = sig.positive;
  inv.s_minus = sig.negative;

  for (const Int& f : invariant_factors(l.gram))
    if (f > 1) inv.factors.push_back(f);
  inv.unimodular = inv.factors.empty();

  if (!inv.unimodular) {
    const Int& p = inv.factors.front();
    bool uniform = is_prime(p) &&
                   std::all_of(inv.factors.begin(), inv.factors.end(),
                               [&](const Int& f) { return f == p; });
    if (uniform) inv.elementary = {p, static_cast<int>(inv.factors.size())};
  }

  if (inv.exponent_for(Int(2))) {
    // delta = 0 iff q is integer valued on the discriminant group. The
    // dual basis (columns of gram^-1) generates L*/L and q(x+y) - q(x) -
    // q(y) = 2 b(x,y) is integral for a 2-elementary lattice, so checking
    // the diagonal of gram^-1 suffices.
    int delta = 0;
    if (inv.rank > 0) {
      RatMatrix ig = inverse(to_rational(l.gram));
      for (int i = 0; i < inv.rank; ++i)
        if (!is_integer(ig(i, i))) {
          delta = 1;
          break;
        }
    }
    inv.delta = delta;
  }
  return inv;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string label;
  if (!a.label.empty() && !b.label.empty()) label = a.label + "+" + b.label;
  return Lattice{block_diag(a.gram, b.gram), std::move(label)};
}

Lattice twist(const Lattice& l, const Int& c) {
  if (c == 0) throw domain_error("twist by zero");
  IntMatrix g = l.gram;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g(i, j) *= c;
  std::string label = l.label.empty() ? "" : l.label + "(" + to_string(c) + ")";
  return Lattice{std::move(g), std::move(label)};
}

namespace {

IntMatrix dynkin_chain(int n) {
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return g;
}

Lattice lattice_U() { return make_lattice(IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}}, "U"); }

Lattice lattice_A(int m) {
  if (m < 1) throw domain_error("A_m requires m >= 1");
  return make_lattice(dynkin_chain(m), "A" + std::to_string(m));
}

Lattice lattice_D(int n) {
  if (n < 4) throw domain_error("D_n requires n >= 4");
  IntMatrix g = dynkin_chain(n);
  // Last node attaches to node n-2 instead of continuing the chain.
  g(n - 1, n - 2) = g(n - 2, n - 1) = 0;
  g(n - 1, n - 3) = g(n - 3, n - 1) = 1;
  return make_lattice(std::move(g), "D" + std::to_string(n));
}

Lattice lattice_E(int l) {
  if (l < 6 || l > 8) throw domain_error("E_l requires l in {6,7,8}");
  IntMatrix g = dynkin_chain(l);
  // Branch node: chain of l-1 vertices with the last vertex on vertex 2,
  // giving arm lengths (2, l-4+1, 1).
  g(l - 1, l - 2) = g(l - 2, l - 1) = 0;
  g(l - 1, 2) = g(2, l - 1) = 1;
  return make_lattice(std::move(g), "E" + std::to_string(l));
}

Lattice lattice_K(const Int& p) {
  if (!is_prime(p) || p % 4 != 3)
    throw domain_error("K_p requires a prime p = 3 mod 4, got " + to_string(p));
  Int d = -(p + 1) / 2;
  return make_lattice(IntMatrix{{d, Int(1)}, {Int(1), Int(-2)}}, "K" + to_string(p));
}

Lattice lattice_H(const Int& p) {
  if (!is_prime(p) || p % 4 != 1)
    throw domain_error("H_p requires a prime p = 1 mod 4, got " + to_string(p));
  Int d = (p - 1) / 2;
  return make_lattice(IntMatrix{{d, Int(1)}, {Int(1), Int(-2)}}, "H" + to_string(p));
}

Lattice lattice_A4star5() {
  IntMatrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = (i == j) ? Int(-4) : Int(1);
  return make_lattice(std::move(g), "A4*5");
}

Lattice lattice_L17() {
  IntMatrix g{{Int(-2), Int(1), Int(0), Int(1)},
              {Int(1), Int(-2), Int(0), Int(0)},
              {Int(0), Int(0), Int(-2), Int(1)},
              {Int(1), Int(0), Int(1), Int(-4)}};
  return make_lattice(std::move(g), "L17");
}

// E6 dual rescaled by 3: integral and even; 3-elementary with a = 5.
Lattice lattice_E6star3() {
  RatMatrix ig = inverse(to_rational(lattice_E(6).gram));
  IntMatrix g(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g(i, j) = to_integer(Rat(3) * ig(i, j));
  return make_lattice(std::move(g), "E6*3");
}

}  // namespace

Lattice standard_lattice(std::string_view name) {
  if (name == "U") return lattice_U();
  if (name == "A4*5") return lattice_A4star5();
  if (name == "L17") return lattice_L17();
  if (name == "E6*3") return lattice_E6star3();
  if (name.size() >= 2) {
    char kind = name[0];
    std::string rest(name.substr(1));
    if (rest.find_first_not_of("0123456789") == std::string::npos && !rest.empty()) {
      Int param(rest);
      switch (kind) {
        case 'A': return lattice_A(static_cast<int>(param.get_si()));
        case 'D': return lattice_D(static_cast<int>(param.get_si()));
        case 'E': return lattice_E(static_cast<int>(param.get_si()));
        case 'K': return lattice_K(param);
        case 'H': return lattice_H(param);
        default: break;
      }
    }
  }
  throw domain_error("unknown lattice name: " + std::string(name));
}

}  // namespace k3ns
