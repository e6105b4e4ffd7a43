#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3ns/linalg.hpp"
#include "k3ns/matrix.hpp"

namespace k3ns {

// An even non-degenerate integer lattice given by its Gram matrix.
// Values are immutable after construction; all operations below are pure.
struct Lattice {
  IntMatrix gram;
  std::string label;

  int rank() const { return gram.rows(); }
};

// Validates symmetry, even diagonal and non-degeneracy (rank 0 allowed,
// with det 1 by convention: it occurs as a fixed sublattice).
Lattice make_lattice(IntMatrix gram, std::string label = "");

struct LatticeInvariants {
  int rank = 0;
  int s_plus = 0;
  int s_minus = 0;
  Int det;
  // Invariant factors > 1 of the Gram matrix (the discriminant group).
  std::vector<Int> factors;
  bool unimodular = false;
  // (p, a) when every invariant factor equals the one prime p, a >= 1.
  // Unimodular lattices are reported via the flag above (a = 0, any p).
  std::optional<std::pair<Int, int>> elementary;
  // Only when 2-elementary (including unimodular): 0 iff the discriminant
  // quadratic form is integer valued.
  std::optional<int> delta;

  bool hyperbolic() const { return s_plus == 1 && s_minus == rank - 1; }
  bool negative_definite() const { return s_plus == 0 && rank > 0; }
  // Exponent a if the lattice is p-elementary for this prime, else nullopt.
  std::optional<int> exponent_for(const Int& p) const;
};

LatticeInvariants invariants(const Lattice& l);

// The fixed catalog of Section-2 building blocks:
//   U, A<m> (m>=1), D<n> (n>=4), E<6|7|8>, K<p> (p = 3 mod 4),
//   H<p> (p = 1 mod 4), A4*5, L17, E6*3.
// A/D/E are in the negative-definite convention.
Lattice standard_lattice(std::string_view name);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice twist(const Lattice& l, const Int& c);

// Lattice expression mini-language:
//   expr := term ('+' term)*
//   term := atom ['(' int ')'] ['^' int]
//   atom := 'U' | 'A'int | 'D'int | 'E'int | 'K'int | 'H'int
//         | 'A4*5' | 'L17' | 'E6*3'
// Whitespace is ignored; twists may be negative, powers are >= 1.
Lattice parse_lattice_expr(std::string_view text);

}  // namespace k3ns
