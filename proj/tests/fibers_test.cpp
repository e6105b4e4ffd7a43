#include <doctest.h>

#include "k3ns/weierstrass.hpp"

using namespace k3ns;

namespace {

RatPoly t_to(int k) { return RatPoly::monomial(Rat(1), k); }

std::map<std::string, int> fibers_of(const WeierstrassModel& w) {
  return classify_fibers(w).multiset();
}

}  // namespace

TEST_CASE("kodaira table") {
  CHECK(kodaira_type(0, 0, 0) == std::nullopt);  // smooth
  CHECK(kodaira_type(0, 0, 1) == KodairaClass{KodairaClass::kIn, 1});
  CHECK(kodaira_type(1, 1, 2) == KodairaClass{KodairaClass::kII, 0});
  CHECK(kodaira_type(7, 1, 2) == KodairaClass{KodairaClass::kII, 0});
  CHECK(kodaira_type(1, 5, 3) == KodairaClass{KodairaClass::kIII, 0});
  CHECK(kodaira_type(3, 2, 4) == KodairaClass{KodairaClass::kIV, 0});
  CHECK(kodaira_type(2, 3, 6) == KodairaClass{KodairaClass::kInStar, 0});
  CHECK(kodaira_type(2, 3, 9) == KodairaClass{KodairaClass::kInStar, 3});
  CHECK(kodaira_type(3, 3, 6) == KodairaClass{KodairaClass::kInStar, 0});
  CHECK(kodaira_type(2, 4, 6) == KodairaClass{KodairaClass::kInStar, 0});
  CHECK(kodaira_type(3, 4, 8) == KodairaClass{KodairaClass::kIVStar, 0});
  CHECK(kodaira_type(3, 5, 9) == KodairaClass{KodairaClass::kIIIStar, 0});
  CHECK(kodaira_type(5, 5, 10) == KodairaClass{KodairaClass::kIIStar, 0});
  CHECK_THROWS_AS(kodaira_type(4, 6, 12), domain_error);  // non-minimal
  CHECK_THROWS_AS(kodaira_type(1, 1, 3), internal_error);  // no table row
}

TEST_CASE("euler numbers and names") {
  CHECK(KodairaClass{KodairaClass::kIn, 5}.euler() == 5);
  CHECK(KodairaClass{KodairaClass::kInStar, 2}.euler() == 8);
  CHECK(KodairaClass{KodairaClass::kIIStar, 0}.euler() == 10);
  CHECK(KodairaClass{KodairaClass::kInStar, 0}.str() == "I0*");
  CHECK(kodaira_from_string("I5") == KodairaClass{KodairaClass::kIn, 5});
  CHECK(kodaira_from_string("III*") == KodairaClass{KodairaClass::kIIIStar, 0});
  CHECK_THROWS_AS(kodaira_from_string("I0"), domain_error);
  CHECK_THROWS_AS(kodaira_from_string("V"), domain_error);
}

TEST_CASE("discriminants") {
  WeierstrassModel w1 = make_model(RatPoly(), t_to(5) - RatPoly::constant(Rat(1)));
  CHECK(discriminant(w1) == (t_to(5) - RatPoly::constant(Rat(1))).pow(2) * Rat(27));

  WeierstrassModel w2 = make_model(t_to(7), t_to(2));
  CHECK(discriminant(w2) == t_to(21) * Rat(4) + t_to(4) * Rat(27));

  // 4 f^3 = -27 g^2 identically: rejected.
  CHECK_THROWS_AS(make_model(t_to(2) * Rat(-3), t_to(3) * Rat(2)), domain_error);
  CHECK_THROWS_AS(make_model(t_to(9), t_to(1)), domain_error);   // deg f > 8
  CHECK_THROWS_AS(make_model(t_to(1), t_to(13)), domain_error);  // deg g > 12
}

TEST_CASE("fiber classification of fixed models") {
  // Order-19 model: II at t = 0, III at infinity, 19 nodal fibers.
  WeierstrassModel w = make_model(t_to(7), t_to(1));
  FiberSummary s = classify_fibers(w);
  CHECK(s.euler_total == 24);
  CHECK(s.multiset() == std::map<std::string, int>{{"II", 1}, {"III", 1}, {"I1", 19}});
  bool found_origin = false, found_infinity = false;
  for (const auto& rep : s.places) {
    if (rep.place == "t") {
      found_origin = true;
      CHECK(rep.ord_f == 7);
      CHECK(rep.ord_g == 1);
      CHECK(rep.ord_delta == 2);
      CHECK(rep.type.str() == "II");
    }
    if (rep.at_infinity) {
      found_infinity = true;
      CHECK(rep.type.str() == "III");
    }
  }
  CHECK(found_origin);
  CHECK(found_infinity);

  // Degenerate order-5 member: IV + I5 + 15 I1 at (alpha, gamma) = (-3, 2).
  std::map<std::string, Rat> binds{{"b", ratio(1, 3)}};
  WeierstrassModel w2 = make_model(t_to(5) + RatPoly::constant(Rat(-3)),
                                   t_to(10) * ratio(1, 3) + t_to(5) + RatPoly::constant(Rat(2)));
  CHECK(fibers_of(w2) == std::map<std::string, int>{{"IV", 1}, {"I5", 1}, {"I1", 15}});

  // f identically zero is fine: j = 0 fibration with 27 g^2 discriminant.
  WeierstrassModel w3 = make_model(RatPoly(), t_to(7) - RatPoly::constant(Rat(1)));
  auto ms = fibers_of(w3);
  CHECK(ms == std::map<std::string, int>{{"II", 7}, {"II*", 1}});
  CHECK(classify_fibers(w3).euler_total == 24);

  // With the K3 homogenization bounds, deg g = 5 and f = 0 is non-minimal
  // at infinity (ord f, ord g) = (inf, 7).
  WeierstrassModel w4 = make_model(RatPoly(), t_to(5) - RatPoly::constant(Rat(1)));
  CHECK_THROWS_AS(classify_fibers(w4), domain_error);
}

TEST_CASE("degree-24 balance at infinity") {
  WeierstrassModel w = make_model(t_to(5) + RatPoly::constant(Rat(1)),
                                  t_to(10) * Rat(2) + t_to(5) + RatPoly::constant(Rat(3)));
  RatPoly delta = discriminant(w);
  int ord_inf = order_at(infinity_flip(delta, 24), t_to(1));
  CHECK(delta.degree() + ord_inf == 24);
}

TEST_CASE("catalog instantiation is deterministic") {
  const CatalogEntry& entry = catalog_entry("5.6");
  WeierstrassModel a = instantiate(entry, 42);
  WeierstrassModel b = instantiate(entry, 42);
  CHECK(a.bindings == b.bindings);
  CHECK(fibers_of(a) == entry.expected_fibers);
  CHECK_THROWS_AS(catalog_entry("nope"), domain_error);
  CHECK(example_catalog().size() == 17);
}

TEST_CASE("weighted invariance congruences") {
  // Order-13 action (x, y, t) -> (z^5 x, z y, z^2 t) on y^2 = x^3 + t^5 x + t.
  WeierstrassModel w = make_model(t_to(5), t_to(1));
  CHECK(model_invariant_under(w, ModelAction{13, 5, 1, 2}));
  CHECK(model_invariant_under_exact(w, ModelAction{13, 5, 1, 2}));
  CHECK_FALSE(model_invariant_under(w, ModelAction{13, 1, 1, 1}));
  CHECK_FALSE(model_invariant_under_exact(w, ModelAction{13, 1, 1, 1}));

  // The trivial-weights action fixes any model with exponents = 0 mod p.
  WeierstrassModel w2 = make_model(t_to(5) + RatPoly::constant(Rat(2)),
                                   t_to(10) + t_to(5) + RatPoly::constant(Rat(1)));
  CHECK(model_invariant_under(w2, ModelAction{5, 0, 0, 1}));
  CHECK_FALSE(model_invariant_under(w2, ModelAction{7, 0, 0, 1}));

  // Both routes agree across the catalog and all unit rescalings.
  for (const auto& entry : example_catalog()) {
    WeierstrassModel m = instantiate(entry, 3);
    for (int s = 1; s < entry.action.p; ++s) {
      ModelAction scaled{entry.action.p, (entry.action.u * s) % entry.action.p,
                         (entry.action.v * s) % entry.action.p,
                         (entry.action.w * s) % entry.action.p};
      CHECK(model_invariant_under(m, scaled) == model_invariant_under_exact(m, scaled));
    }
  }
}

TEST_CASE("sextic families") {
  auto families = sextic_families(0);
  REQUIRE(families.size() == 2);
  for (const auto& fam : families) {
    CHECK(weighted_invariance(fam.poly, fam.p, fam.weights, fam.character));
  }
  // Family A expands to x0 * (quintic) + x2^5 x1: 6 + 1 monomials for
  // generic sampled lambdas.
  CHECK(families[0].poly.term_count() == 7);
  // Perturbing family B with a non-invariant monomial breaks the check.
  TriPoly broken = families[1].poly + TriPoly::monomial(Rat(1), 5, 1, 0);
  CHECK_FALSE(weighted_invariance(broken, 5, families[1].weights, families[1].character));
}

TEST_CASE("plain weighted invariance") {
  std::vector<std::array<int, 3>> mons{{0, 1, 5}, {6, 0, 0}};
  CHECK(weighted_invariance(mons, 5, {0, 0, 1}, 0));
  CHECK_FALSE(weighted_invariance(mons, 5, {0, 1, 1}, 0));
  CHECK(weighted_invariance(std::vector<std::array<int, 3>>{}, 7, {1, 2, 3}, 4));  // vacuous
}
