#include <random>

#include "k3ns/weierstrass.hpp"

namespace k3ns {

namespace {

using Params = std::map<std::string, Rat>;

Rat P(const Params& b, const char* name) { return b.at(name); }

RatPoly tpow(int k) { return RatPoly::monomial(Rat(1), k); }

// --- model builders ---------------------------------------------------------

RatPoly f_56(const Params& b) { return tpow(5) + RatPoly::constant(P(b, "alpha")); }
RatPoly g_56(const Params& b) {
  return tpow(10) * P(b, "beta") + tpow(5) + RatPoly::constant(P(b, "gamma"));
}

RatPoly f_71(const Params& b) { return tpow(7) * P(b, "a") + RatPoly::constant(P(b, "b")); }
RatPoly g_71(const Params& b) { return tpow(7) * P(b, "c") - RatPoly::constant(P(b, "d")); }

RatPoly f_111(const Params& b) { return RatPoly::constant(P(b, "a")); }
RatPoly g_111(const Params& b) { return tpow(11) - RatPoly::constant(P(b, "d")); }

RatPoly f_t3(const Params&) { return tpow(3); }
RatPoly f_t5(const Params&) { return tpow(5); }
RatPoly f_t7(const Params&) { return tpow(7); }
RatPoly g_t1(const Params&) { return tpow(1); }
RatPoly g_t2(const Params&) { return tpow(2); }
RatPoly g_t7(const Params&) { return tpow(7); }
RatPoly g_t8(const Params&) { return tpow(8); }

using OptRat = std::optional<Rat>;
const OptRat kGeneric = std::nullopt;

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };

  // Order 5 family y^2 = x^3 + (t^5 + alpha) x + (beta t^10 + t^5 + gamma)
  // with sigma(x, y, t) = (x, y, z5 t), and its degenerations.
  add({"5.6",
       "order-5 family, generic parameters",
       {5, 0, 0, 1},
       {{"alpha", kGeneric}, {"beta", kGeneric}, {"gamma", kGeneric}},
       {{"IV", 1}, {"I1", 20}},
       f_56,
       g_56});
  add({"5.6-1",
       "order-5 family at beta = 0",
       {5, 0, 0, 1},
       {{"alpha", kGeneric}, {"beta", Rat(0)}, {"gamma", kGeneric}},
       {{"III*", 1}, {"I1", 15}},
       f_56,
       g_56});
  add({"5.6-2",
       "order-5 family on the locus alpha^3 = -27 gamma^2 / 4 (alpha = -3, gamma = 2)",
       {5, 0, 0, 1},
       {{"alpha", Rat(-3)}, {"beta", kGeneric}, {"gamma", Rat(2)}},
       {{"IV", 1}, {"I5", 1}, {"I1", 15}},
       f_56,
       g_56});
  add({"5.6-3",
       "order-5 family at alpha = gamma = 0",
       {5, 0, 0, 1},
       {{"alpha", Rat(0)}, {"beta", kGeneric}, {"gamma", Rat(0)}},
       {{"IV", 1}, {"II*", 1}, {"I1", 10}},
       f_56,
       g_56});
  add({"5.6-4",
       "order-5 family at alpha = beta = gamma = 0",
       {5, 0, 0, 1},
       {{"alpha", Rat(0)}, {"beta", Rat(0)}, {"gamma", Rat(0)}},
       {{"III*", 1}, {"II*", 1}, {"I1", 5}},
       f_56,
       g_56});

  // Order 7 family y^2 = x^3 + (a t^7 + b) x + (c t^7 - d) with
  // sigma(x, y, t) = (x, y, z7 t). The I7 locus 4 b^3 + 27 d^2 = 0 is
  // realized at the rational point (b, d) = (-3, 2).
  add({"7.1",
       "order-7 family, generic parameters",
       {7, 0, 0, 1},
       {{"a", kGeneric}, {"b", kGeneric}, {"c", Rat(1)}, {"d", Rat(1)}},
       {{"III", 1}, {"I1", 21}},
       f_71,
       g_71});
  add({"7.1-1",
       "order-7 family at a = 0",
       {7, 0, 0, 1},
       {{"a", Rat(0)}, {"b", kGeneric}, {"c", Rat(1)}, {"d", Rat(1)}},
       {{"II*", 1}, {"I1", 14}},
       f_71,
       g_71});
  add({"7.1-2",
       "order-7 family on the I7 locus 4b^3 + 27d^2 = 0",
       {7, 0, 0, 1},
       {{"a", kGeneric}, {"b", Rat(-3)}, {"c", Rat(1)}, {"d", Rat(2)}},
       {{"III", 1}, {"I7", 1}, {"I1", 14}},
       f_71,
       g_71});
  add({"7.1-3",
       "order-7 family at a = 0 on the I7 locus",
       {7, 0, 0, 1},
       {{"a", Rat(0)}, {"b", Rat(-3)}, {"c", Rat(1)}, {"d", Rat(2)}},
       {{"II*", 1}, {"I7", 1}, {"I1", 7}},
       f_71,
       g_71});

  // Order 11 family y^2 = x^3 + a x + (t^11 - d) with
  // sigma(x, y, t) = (x, y, z11 t); I11 locus 4 a^3 + 27 d^2 = 0 at (-3, 2).
  add({"11.1",
       "order-11 family, generic parameter",
       {11, 0, 0, 1},
       {{"a", kGeneric}, {"d", Rat(1)}},
       {{"II", 1}, {"I1", 22}},
       f_111,
       g_111});
  add({"11.1-1",
       "order-11 family on the I11 locus 4a^3 + 27d^2 = 0",
       {11, 0, 0, 1},
       {{"a", Rat(-3)}, {"d", Rat(2)}},
       {{"II", 1}, {"I11", 1}, {"I1", 11}},
       f_111,
       g_111});

  // The isolated models of orders 13, 17, 19.
  add({"8.1",
       "order-13 model y^2 = x^3 + t^5 x + t",
       {13, 5, 1, 2},
       {},
       {{"II", 1}, {"III*", 1}, {"I1", 13}},
       f_t5,
       g_t1});
  add({"8.2",
       "order-17 model y^2 = x^3 + t^7 x + t^2",
       {17, 7, 2, 2},
       {},
       {{"IV", 1}, {"III", 1}, {"I1", 17}},
       f_t7,
       g_t2});
  add({"8.3",
       "order-19 model y^2 = x^3 + t^7 x + t",
       {19, 7, 1, 2},
       {},
       {{"II", 1}, {"III", 1}, {"I1", 19}},
       f_t7,
       g_t1});

  // The isolated elliptic models with weighted coordinate actions
  // (classically attributed to Kondo).
  add({"kondo-5",
       "order-5 model y^2 = x^3 + t^3 x + t^7",
       {5, 3, 2, 2},
       {},
       {{"III*", 1}, {"II*", 1}, {"I1", 5}},
       f_t3,
       g_t7});
  add({"kondo-7",
       "order-7 model y^2 = x^3 + t^3 x + t^8",
       {7, 3, 1, 2},
       {},
       {{"III*", 1}, {"IV*", 1}, {"I1", 7}},
       f_t3,
       g_t8});
  add({"kondo-11",
       "order-11 model y^2 = x^3 + t^5 x + t^2",
       {11, 5, 2, 2},
       {},
       {{"IV", 1}, {"III*", 1}, {"I1", 11}},
       f_t5,
       g_t2});
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Small nonzero rational with numerator in [-8, 8] and denominator in
// {1, 2, 3}. Engine output is reduced directly so results do not depend on
// the standard library's distribution implementations.
Rat sample_rational(std::mt19937_64& rng) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % 17) - 8;
  long den = 1 + static_cast<long>(rng() % 3);
  return ratio(num, den);
}

}  // namespace

const std::vector<CatalogEntry>& example_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : example_catalog())
    if (e.key == key) return e;
  throw domain_error("unknown catalog example: " + key);
}

WeierstrassModel instantiate(const CatalogEntry& entry, unsigned long seed) {
  std::mt19937_64 rng(fnv1a(entry.key) ^ (0x9e3779b97f4a7c15ull * (seed + 1)));
  const int kRetryBudget = 32;
  std::string last_failure;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Params bindings;
    for (const auto& [name, fixed] : entry.parameters)
      bindings[name] = fixed ? *fixed : sample_rational(rng);
    try {
      WeierstrassModel w =
          make_model(entry.build_f(bindings), entry.build_g(bindings), entry.key, bindings);
      // Genericity: the sampled member must realize the declared fiber
      // multiset, i.e. Delta is squarefree away from the declared special
      // places. Failures are resampled within the budget.
      if (classify_fibers(w).multiset() == entry.expected_fibers) return w;
      last_failure = "fiber multiset of the sample differs from the declared one";
    } catch (const error& e) {
      last_failure = e.what();
    }
    if (entry.parameters.empty()) break;  // nothing to resample
  }
  throw internal_error("catalog entry " + entry.key +
                       " failed to instantiate: " + last_failure);
}

std::vector<SexticFamily> sextic_families(unsigned long seed) {
  std::mt19937_64 rng(fnv1a("sextics") ^ (0x9e3779b97f4a7c15ull * (seed + 1)));
  auto x0 = [](int e) { return TriPoly::monomial(Rat(1), e, 0, 0); };

  // Family A: x0 (x0 - x1) prod_{i=1..4} (x0 - lambda_i x1) + x2^5 x1,
  // invariant under (x0, x1, x2) -> (x0, x1, z5 x2).
  TriPoly a = x0(1) * (x0(1) + TriPoly::monomial(Rat(-1), 0, 1, 0));
  for (int i = 0; i < 4; ++i) {
    Rat lambda = sample_rational(rng);
    a = a * (x0(1) + TriPoly::monomial(-lambda, 0, 1, 0));
  }
  a = a + TriPoly::monomial(Rat(1), 0, 1, 5);

  // Family B: a1 x0^6 + a2 x0^3 x1 x2^2 + a3 x0^2 x1^3 x2 + a4 x0 x1^5 +
  // a5 x0 x2^5 + a6 x1^2 x2^4, invariant under
  // (x0, x1, x2) -> (x0, z5 x1, z5^2 x2).
  TriPoly b = TriPoly::monomial(sample_rational(rng), 6, 0, 0) +
              TriPoly::monomial(sample_rational(rng), 3, 1, 2) +
              TriPoly::monomial(sample_rational(rng), 2, 3, 1) +
              TriPoly::monomial(sample_rational(rng), 1, 5, 0) +
              TriPoly::monomial(sample_rational(rng), 1, 0, 5) +
              TriPoly::monomial(sample_rational(rng), 0, 2, 4);

  return {SexticFamily{"5.1", a, 5, {0, 0, 1}, 0}, SexticFamily{"5.2", b, 5, {0, 1, 2}, 0}};
}

}  // namespace k3ns
