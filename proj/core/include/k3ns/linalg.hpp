#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3ns/matrix.hpp"

namespace k3ns {

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(const IntMatrix& m);

// Smith normal form d = u * a * v with u, v unimodular, d diagonal with
// non-negative entries forming a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};
SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero diagonal entries of the Smith form, in chain order.
std::vector<Int> invariant_factors(const IntMatrix& a);

// Primitive basis of the integer kernel {x : a x = 0}; columns of the result.
IntMatrix integer_kernel(const IntMatrix& a);

// Exact inverse; throws domain_error on a singular input.
RatMatrix inverse(const RatMatrix& m);

// Signature of a symmetric rational matrix by exact congruence
// diagonalization. A zero diagonal pivot with a nonzero off-diagonal
// partner is split as a hyperbolic 2x2 block contributing (+1, -1).
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature_of(const RatMatrix& symmetric);

// Solves a x = b_k exactly for every column b_k of b. Requires the
// solution to be unique (full column rank) and the system consistent;
// throws internal_error otherwise. a may have more rows than columns.
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b);

}  // namespace k3ns
