#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3ns/lattice.hpp"
#include "k3ns/lefschetz.hpp"

namespace k3ns {

enum class SpecialLocus { kGeneric, kEmpty, kTwoEllipticCurves };

std::string to_string(SpecialLocus s);

// Topological type of the fixed locus: either one of the two order-2
// exceptions, or curves plus isolated points. The canonical curve datum is
// the multiset of fixed-curve genera (descending); the classical (g, k)
// pairs are emitted as views on the classification row.
struct FixedLocusProfile {
  SpecialLocus special = SpecialLocus::kGeneric;
  std::vector<int> curve_genera;  // descending
  std::vector<Int> points;        // n_t for t = 1..p-2; empty for p = 2
  Int n = 0;                      // total isolated points
  Int alpha = 0;                  // 1 - g + k
  int g_prime = 0;                // (m - a)/2 when generic

  Int euler() const;
};

struct ClassificationRow {
  int p = 0;
  int r = 0;
  int a = 0;
  std::optional<int> delta;  // p = 2 only
  int m = 0;                 // (22 - r)/(p - 1)
  FixedLocusProfile profile;
  std::optional<std::string> S_name;
  std::optional<std::string> T_name;
  // Genus/curve-count pair in the convention g = (22-r-(p-1)a)/(2(p-1)),
  // k = alpha + g' - 1 with k = -1 encoding "no fixed curves". Absent for
  // the two order-2 exceptional rows.
  std::optional<Int> g_thm;
  std::optional<Int> k_thm;
  // Curve columns as the per-prime tables print them: for p <= 11 the
  // (g, k) pair when curves exist ("-" otherwise); for p >= 13 no genus
  // column and k counts all fixed curves.
  std::optional<Int> table_g;
  std::optional<Int> table_k;
  Int moduli_dim = 0;
};

// All (r, a) with an even hyperbolic p-elementary lattice of that type
// realized by an order-p automorphism: existence conditions plus condition
// (*) m - a in 2Z>=0. Odd p only; ordered by ascending (r, a).
std::vector<std::pair<int, int>> admissible_pairs(int p);

// Fixed-locus profile of the admissible type. delta is required for p = 2
// (the triple must be in the reference set) and ignored otherwise.
FixedLocusProfile fixed_locus(int p, int r, int a, std::optional<int> delta = std::nullopt);

// One row per admissible type, ordered by ascending (r, a, delta), with
// invariant/orthogonal lattice names attached from the built-in catalog
// where the classification names them. Every named lattice is constructed
// and its invariants verified before emission.
std::vector<ClassificationRow> classification_table(int p);

// (22-r)/(p-1) - 1 for p > 2 and 22 - r - 2 for p = 2.
Int moduli_dimension(int p, int r);
Int moduli_dimension(const ClassificationRow& row);

struct ModuliComponent {
  int p = 0;
  std::string S_expr;
  std::string display;
  int rank = 0;
  Int dim = 0;
};

// Irreducible moduli components for the prime, from the embedded reference
// list; dimensions recomputed from the rank and lattice invariants verified.
std::vector<ModuliComponent> irreducible_components(int p);

struct P2Triple {
  int r = 0;
  int a = 0;
  int delta = 0;
  bool operator==(const P2Triple& o) const { return r == o.r && a == o.a && delta == o.delta; }
};

// The embedded order-2 chart: all realized (r, a, delta), ascending.
const std::vector<P2Triple>& figure1_triples();

inline const int kClassifiablePrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace k3ns
