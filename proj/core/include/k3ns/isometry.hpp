#pragma once

#include <vector>

#include "k3ns/cyclotomic.hpp"
#include "k3ns/lattice.hpp"

namespace k3ns {

// An isometry of an integer lattice: columns of `matrix` are the images of
// the basis vectors; matrix^T gram matrix = gram and |det| = 1.
struct IntegerIsometry {
  Lattice lattice;
  IntMatrix matrix;
};

IntegerIsometry make_isometry(Lattice lattice, IntMatrix matrix);

// The explicit order-7 isometries: rho0 on U + U + K7 (basis
// e1, f1, e2, f2, x, y with x^2 = -2, y^2 = -4, (x, y) = 1), rho6 the
// cyclic isometry of A6, and their direct sum rho0 + rho6 + rho6 on the
// rank-18 lattice U + U + K7 + A6 + A6.
IntegerIsometry rho0();
IntegerIsometry rho6();
IntegerIsometry rho_full();

// Least k <= bound with M^k = 1; throws domain_error if none.
int order(const IntegerIsometry& m, int bound);

// ker(M - 1) as a primitive sublattice with its induced Gram (possibly of
// rank 0; the induced form may be degenerate only if the input was).
Lattice fixed_sublattice(const IntegerIsometry& m);

// True iff M fixes every class of the discriminant group: (M - 1) maps the
// dual basis gram^{-1} into the lattice.
bool discriminant_action_trivial(const IntegerIsometry& m);

// Vector with Q(zeta_p) entries over the lattice basis.
struct CycVector {
  int p = 0;
  std::vector<Cyclotomic> entries;
};

// M v = zeta^k v, entrywise in Q(zeta_p).
bool eigen_check(const IntegerIsometry& m, const CycVector& v, int k);

// sum_ij gram_ij v_i conj(v_j).
Cyclotomic hermitian_norm(const Lattice& l, const CycVector& v);

// The appendix eigenvectors: v on U + U + K7 (eigenvalue zeta for rho0,
// norm 7 (zeta + zeta^6)) and w on A6 (eigenvalue zeta for rho6, norm -7).
CycVector appendix_vector_v();
CycVector appendix_vector_w();

}  // namespace k3ns
