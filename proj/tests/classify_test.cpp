#include <doctest.h>

#include <set>
#include <tuple>

#include "k3ns/classify.hpp"

using namespace k3ns;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

const ClassificationRow& row_for(const std::vector<ClassificationRow>& rows, int r, int a) {
  for (const auto& row : rows)
    if (row.r == r && row.a == a) return row;
  throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("admissible pairs per prime") {
  CHECK(admissible_pairs(5) == Pairs{{2, 1}, {6, 2}, {6, 4}, {10, 1}, {10, 3}, {14, 2}, {18, 1}});
  CHECK(admissible_pairs(7) == Pairs{{4, 1}, {4, 3}, {10, 0}, {10, 2}, {16, 1}});
  CHECK(admissible_pairs(11) == Pairs{{2, 0}, {2, 2}, {12, 1}});
  CHECK(admissible_pairs(13) == Pairs{{10, 1}});
  CHECK(admissible_pairs(17) == Pairs{{6, 1}});
  CHECK(admissible_pairs(19) == Pairs{{4, 1}});
  CHECK(admissible_pairs(3).size() == 24);
  CHECK_THROWS_AS(admissible_pairs(2), domain_error);
  CHECK_THROWS_AS(admissible_pairs(23), domain_error);
}

TEST_CASE("fixed locus profiles") {
  FixedLocusProfile p1 = fixed_locus(5, 2, 1);
  CHECK(p1.curve_genera == std::vector<int>{2});
  CHECK(p1.points == std::vector<Int>{Int(1), Int(0)});
  CHECK(p1.alpha == -1);

  FixedLocusProfile p2 = fixed_locus(7, 4, 3);
  CHECK(p2.curve_genera.empty());
  CHECK(p2.points == std::vector<Int>{Int(2), Int(1), Int(0)});

  FixedLocusProfile p3 = fixed_locus(13, 10, 1);
  CHECK(p3.curve_genera == std::vector<int>{0});
  CHECK(p3.n == 9);

  FixedLocusProfile p4 = fixed_locus(2, 10, 10, 0);
  CHECK(p4.special == SpecialLocus::kEmpty);
  FixedLocusProfile p5 = fixed_locus(2, 10, 8, 0);
  CHECK(p5.special == SpecialLocus::kTwoEllipticCurves);
  CHECK(p5.curve_genera == std::vector<int>{1, 1});
  FixedLocusProfile p6 = fixed_locus(2, 10, 10, 1);
  CHECK(p6.special == SpecialLocus::kGeneric);
  CHECK(p6.curve_genera == std::vector<int>{1});

  CHECK_THROWS_AS(fixed_locus(5, 4, 1), domain_error);
  CHECK_THROWS_AS(fixed_locus(5, 2, 2), domain_error);
  CHECK_THROWS_AS(fixed_locus(2, 10, 9, 0), domain_error);
  CHECK_THROWS_AS(fixed_locus(2, 10, 10), domain_error);  // delta required
}

TEST_CASE("classification rows carry verified lattice names") {
  auto rows7 = classification_table(7);
  REQUIRE(rows7.size() == 5);
  const auto& r10 = row_for(rows7, 10, 0);
  CHECK(r10.S_name == "U+E8");
  CHECK(r10.T_name == "U+U+E8");
  CHECK(r10.profile.curve_genera == std::vector<int>{1, 0});
  CHECK(r10.profile.points == std::vector<Int>{Int(4), Int(3), Int(1)});

  auto rows11 = classification_table(11);
  const auto& r22 = row_for(rows11, 2, 2);
  CHECK(r22.S_name == "U(11)");
  CHECK(r22.profile.points == std::vector<Int>{Int(1), Int(0), Int(0), Int(1), Int(0)});
  CHECK(r22.profile.n == 2);
  CHECK(!r22.table_g.has_value());  // no fixed curves
}

TEST_CASE("order 3 table") {
  auto rows = classification_table(3);
  REQUIRE(rows.size() == 24);
  const auto& special = row_for(rows, 8, 7);  // m = a = 7
  CHECK(special.profile.curve_genera.empty());
  CHECK(special.profile.n == 3);
  CHECK(special.S_name == "U(3)+E6*3");
  const auto& u_row = row_for(rows, 2, 0);
  CHECK(u_row.S_name == "U");
  CHECK(u_row.profile.n == 0);  // n = 10 - m = 0 for m = 10
  CHECK(!u_row.T_name.has_value());
  int named = 0;
  for (const auto& row : rows) named += row.S_name.has_value();
  CHECK(named == 3);
}

TEST_CASE("order 2 table") {
  auto rows = classification_table(2);
  REQUIRE(rows.size() == 75);
  for (const auto& row : rows) {
    REQUIRE(row.delta.has_value());
    CHECK(row.profile.points.empty());
    CHECK(row.profile.n == 0);
  }
  // (20, 2, 1): genus 0 plus nine rational curves.
  const auto& top = row_for(rows, 20, 2);
  CHECK(top.table_g == Int(0));
  CHECK(top.table_k == Int(9));
  CHECK(top.profile.curve_genera.size() == 10);
}

TEST_CASE("figure-1 triple set") {
  const auto& triples = figure1_triples();
  CHECK(triples.size() == 75);
  auto contains = [&](int r, int a, int d) {
    return std::find(triples.begin(), triples.end(), P2Triple{r, a, d}) != triples.end();
  };
  CHECK(contains(1, 1, 1));
  CHECK(contains(2, 0, 0));
  CHECK(contains(10, 10, 0));
  CHECK(contains(20, 2, 1));
  CHECK_FALSE(contains(20, 2, 0));
  CHECK_FALSE(contains(2, 1, 1));
}

TEST_CASE("order-2 chart: constructive witnesses") {
  // A hyperbolic lattice with the exact invariants of every delta = 0
  // point of the chart, plus a sample of delta = 1 points. Checks the
  // embedded triples and the delta algorithm against each other.
  const std::vector<std::tuple<const char*, int, int, int>> witnesses = {
      {"U", 2, 0, 0},           {"U(2)", 2, 2, 0},
      {"U+D4", 6, 2, 0},        {"U(2)+D4", 6, 4, 0},
      {"U+E8", 10, 0, 0},       {"U+D8", 10, 2, 0},
      {"U+D4+D4", 10, 4, 0},    {"U(2)+D4+D4", 10, 6, 0},
      {"U+E8(2)", 10, 8, 0},    {"U(2)+E8(2)", 10, 10, 0},
      {"U+E8+D4", 14, 2, 0},    {"U(2)+E8+D4", 14, 4, 0},
      {"U(2)+D4+D8", 14, 6, 0}, {"U+E8+E8", 18, 0, 0},
      {"U+E8+D8", 18, 2, 0},    {"U(2)+E8+D8", 18, 4, 0},
      {"A1(-1)", 1, 1, 1},      {"A1(-1)+A1", 2, 2, 1},
      {"A1(-1)+A1^5", 6, 6, 1}, {"A1(-1)+A1^10", 11, 11, 1},
      {"U+A1^10", 12, 10, 1},   {"U+E8^2+A1^2", 20, 2, 1},
  };
  const auto& triples = figure1_triples();
  for (const auto& [expr, r, a, delta] : witnesses) {
    CAPTURE(expr);
    LatticeInvariants inv = invariants(parse_lattice_expr(expr));
    CHECK(inv.rank == r);
    CHECK(inv.hyperbolic());
    CHECK(inv.exponent_for(Int(2)) == a);
    CHECK(inv.delta == delta);
    CHECK(std::find(triples.begin(), triples.end(), P2Triple{r, a, delta}) != triples.end());
  }
}

TEST_CASE("order-2 chart: mirror structure") {
  // The realized set is almost symmetric under (r, a) -> (20 - r, a). The
  // one genuine exception: (14, 6, 0) is realized (see the witness above)
  // while (6, 6, 0) would force an even unimodular hyperbolic lattice of
  // signature (1, 5), which does not exist.
  const auto& triples = figure1_triples();
  auto realized = [&](int r, int a, int d) {
    return std::find(triples.begin(), triples.end(), P2Triple{r, a, d}) != triples.end();
  };
  CHECK(realized(14, 6, 0));
  CHECK_FALSE(realized(6, 6, 0));
  for (const auto& t : triples) {
    int rm = 20 - t.r;
    if (rm < 1 || t.a > rm) continue;
    if (t.r == 14 && t.a == 6 && t.delta == 0) continue;
    CAPTURE(t.r);
    CAPTURE(t.a);
    CAPTURE(t.delta);
    CHECK(realized(rm, t.a, t.delta));
  }
}

TEST_CASE("curve multiset structure") {
  // Outside the two-elliptic-curves exception, at most one fixed curve
  // has positive genus; the rest are rational.
  for (int p : kClassifiablePrimes) {
    for (const auto& row : classification_table(p)) {
      if (row.profile.special != SpecialLocus::kGeneric) continue;
      const auto& genera = row.profile.curve_genera;
      CHECK(std::is_sorted(genera.rbegin(), genera.rend()));
      int positive = 0;
      for (int g : genera) positive += g > 0;
      CHECK(positive <= 1);
    }
  }
}

TEST_CASE("moduli dimensions") {
  CHECK(moduli_dimension(5, 2) == 4);
  CHECK(moduli_dimension(19, 4) == 0);
  CHECK(moduli_dimension(2, 1) == 19);
  auto comps = irreducible_components(3);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].dim == 9);
  CHECK(comps[1].dim == 9);
  CHECK(comps[2].dim == 6);
  CHECK(comps[2].display == "U(3)+E6*(3)");
}

TEST_CASE("theorem closed forms for n and k") {
  for (int p : {3, 5, 7, 11}) {
    for (const auto& row : classification_table(p)) {
      // n = (-2 + (p-2) r)/(p-1) for p = 3, 5, 7 and (2 + 9r)/10 for p = 11.
      Rat n_expected = p == 11 ? ratio(2 + 9 * row.r, 10)
                               : ratio(-2 + (p - 2) * row.r, p - 1);
      CHECK(Rat(row.profile.n) == n_expected);
      // k = (2 + r - (p-1)a)/(2(p-1)) for p = 3, 5, 7 and
      // (-2 + r - 10a)/20 for p = 11.
      Rat k_expected = p == 11 ? ratio(-2 + row.r - 10 * row.a, 20)
                               : ratio(2 + row.r - (p - 1) * row.a, 2 * (p - 1));
      REQUIRE(row.k_thm.has_value());
      CHECK(Rat(*row.k_thm) == k_expected);
      // g formula matches g' whenever curves exist.
      if (!row.profile.curve_genera.empty()) {
        REQUIRE(row.g_thm.has_value());
        CHECK(*row.g_thm == row.profile.curve_genera.front());
      }
    }
  }
}

TEST_CASE("lattice invariants of S and T hold on every named row") {
  for (int p : kClassifiablePrimes) {
    for (const auto& row : classification_table(p)) {
      if (row.S_name) {
        LatticeInvariants inv = invariants(parse_lattice_expr(*row.S_name));
        CHECK(inv.rank == row.r);
        CHECK(inv.hyperbolic());
        CHECK(inv.exponent_for(Int(p)) == row.a);
      }
      if (row.T_name) {
        LatticeInvariants inv = invariants(parse_lattice_expr(*row.T_name));
        CHECK(inv.rank == 22 - row.r);
        CHECK(inv.s_plus == 2);
        CHECK(inv.exponent_for(Int(p)) == row.a);
      }
    }
  }
}
