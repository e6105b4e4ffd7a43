#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3ns/cyclotomic.hpp"
#include "k3ns/polynomial.hpp"

namespace k3ns {

// Sentinel order for an identically-zero coefficient polynomial.
inline constexpr int kOrdInfinity = 1 << 20;

struct KodairaClass {
  enum Kind { kIn, kII, kIII, kIV, kInStar, kIVStar, kIIIStar, kIIStar };
  Kind kind = kIn;
  int n = 0;  // for I_n (n >= 1) and I_n* (n >= 0)

  int euler() const;
  std::string str() const;  // "I5", "I0*", "III*", ...
  bool operator==(const KodairaClass& o) const { return kind == o.kind && n == o.n; }
  bool operator<(const KodairaClass& o) const {
    return kind != o.kind ? kind < o.kind : n < o.n;
  }
};

KodairaClass kodaira_from_string(const std::string& s);

// Kodaira type from the exact valuations of (f, g, Delta) at a place of a
// minimal model, characteristic 0. Returns nullopt for a smooth fiber
// (ord_delta = 0); throws domain_error on a non-minimal triple
// (ord f >= 4 and ord g >= 6) and internal_error on a triple matching no
// table row.
std::optional<KodairaClass> kodaira_type(int ord_f, int ord_g, int ord_delta);

// y^2 = x^3 + f(t) x + g(t) with deg f <= 8, deg g <= 12 after binding all
// named parameters to rationals.
struct WeierstrassModel {
  RatPoly f;
  RatPoly g;
  std::string label;
  std::map<std::string, Rat> bindings;
};

WeierstrassModel make_model(RatPoly f, RatPoly g, std::string label = "",
                            std::map<std::string, Rat> bindings = {});

// Delta = 4 f^3 + 27 g^2; throws domain_error when identically zero.
RatPoly discriminant(const WeierstrassModel& w);

struct FiberReport {
  std::string place;  // squarefree factor of Delta, or "infinity"
  bool at_infinity = false;
  int ord_f = 0;  // kOrdInfinity when the coefficient vanishes identically
  int ord_g = 0;
  int ord_delta = 0;
  KodairaClass type;
  int count = 1;  // number of geometric places: the degree of `place`
  int euler_each() const { return type.euler(); }
};

struct FiberSummary {
  std::vector<FiberReport> places;  // finite places sorted by factor, then infinity
  int euler_total = 0;

  // Multiset view: type string -> total fiber count.
  std::map<std::string, int> multiset() const;
};

// Exact fiber classification: squarefree-decompose Delta, split each part
// by the exact (ord f, ord g) at its roots, classify via the Kodaira table,
// and handle t = infinity through s^8 f(1/s), s^12 g(1/s), s^24 Delta(1/s).
FiberSummary classify_fibers(const WeierstrassModel& w);

// The weighted action (x, y, t) -> (z^u x, z^v y, z^w t), z = zeta_p.
struct ModelAction {
  int p = 0;
  int u = 0;
  int v = 0;
  int w = 0;
};

// True iff every monomial with nonzero coefficient has weighted degree
// congruent to required_character mod p.
bool weighted_invariance(const std::vector<std::array<int, 3>>& monomials, int p,
                         const std::array<int, 3>& weights, int required_character);

// Weierstrass wrapper: 3u = 2v, each f-monomial t^k has wk = 2v - u and
// each g-monomial wk = 2v (mod p).
bool model_invariant_under(const WeierstrassModel& w, const ModelAction& action);

// Independent route to the same predicate: checks z^{3u} = z^{2v},
// z^u f(z^w t) = z^{2v} f(t) and g(z^w t) = z^{2v} g(t) literally in
// Q(zeta_p)[t].
bool model_invariant_under_exact(const WeierstrassModel& w, const ModelAction& action);

// Sparse polynomial in x0, x1, x2 with rational coefficients, for the
// plane-sextic invariance checks.
class TriPoly {
 public:
  TriPoly() = default;
  static TriPoly monomial(const Rat& c, int e0, int e1, int e2);
  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly operator*(const Rat& s) const;
  std::vector<std::array<int, 3>> support() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

 private:
  void prune();
  std::map<std::array<int, 3>, Rat> terms_;
};

bool weighted_invariance(const TriPoly& poly, int p, const std::array<int, 3>& weights,
                         int required_character);

// --- Built-in catalog -----------------------------------------------------

struct CatalogEntry {
  std::string key;
  std::string description;
  ModelAction action;
  // Parameters in sampling order; nullopt value means "generic" (sampled).
  std::vector<std::pair<std::string, std::optional<Rat>>> parameters;
  // Expected singular-fiber multiset, e.g. {"IV": 1, "I1": 20}.
  std::map<std::string, int> expected_fibers;
  // Builds f and g from bound parameter values.
  RatPoly (*build_f)(const std::map<std::string, Rat>&);
  RatPoly (*build_g)(const std::map<std::string, Rat>&);
};

const std::vector<CatalogEntry>& example_catalog();
const CatalogEntry& catalog_entry(const std::string& key);

// Instantiates the entry at deterministic parameter bindings derived from
// the seed. Generic parameters are sampled as small rationals and resampled
// (bounded retries) until the fiber multiset is the expected one, i.e.
// Delta is squarefree away from the declared special places.
WeierstrassModel instantiate(const CatalogEntry& entry, unsigned long seed = 0);

// The two order-5 plane-sextic families, at deterministic generic
// parameters, with the projective action weights and character they must
// satisfy: A = x0(x0-x1) prod (x0 - lambda_i x1) + x2^5 x1 (weights 0,0,1)
// and B = a1 x0^6 + a2 x0^3 x1 x2^2 + a3 x0^2 x1^3 x2 + a4 x0 x1^5 +
// a5 x0 x2^5 + a6 x1^2 x2^4 (weights 0,1,2); character 0 for both.
struct SexticFamily {
  std::string key;
  TriPoly poly;
  int p = 5;
  std::array<int, 3> weights{};
  int character = 0;
};
std::vector<SexticFamily> sextic_families(unsigned long seed = 0);

}  // namespace k3ns
