#include "k3ns/classify.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "reference_data_embedded.hpp"

namespace k3ns {

namespace {

using nlohmann::json;

void require_classifiable(int p) {
  for (int q : kClassifiablePrimes)
    if (q == p) return;
  throw domain_error("unsupported prime p = " + std::to_string(p));
}

// Per-prime invariant/orthogonal lattice names, keyed by (r, a) (plus delta
// for p = 2), in the lattice expression grammar. Only the types the
// classification names explicitly carry names.
struct NamedType {
  int r;
  int a;
  int delta;  // -1 when not applicable
  const char* S;
  const char* T;  // nullptr when not named
};

const NamedType kNamedTypes[] = {
    // p = 2: the two exceptional rows and the two moduli components.
    {1, 1, 1, "A1(-1)", nullptr},
    {2, 2, 0, "U(2)", nullptr},
    {10, 8, 0, "U+E8(2)", nullptr},
    {10, 10, 0, "U(2)+E8(2)", nullptr},
    // p = 3: named only for the moduli components.
    {2, 0, -1, "U", nullptr},
    {2, 2, -1, "U(3)", nullptr},
    {8, 7, -1, "U(3)+E6*3", nullptr},
    // p = 5.
    {2, 1, -1, "H5", "H5+U+E8+E8"},
    {6, 2, -1, "H5+A4", "H5+U+E8+A4"},
    {6, 4, -1, "H5+A4*5", "H5+U(5)+E8+A4"},
    {10, 1, -1, "H5+E8", "U+H5+E8"},
    {10, 3, -1, "H5+A4^2", "U+H5+A4^2"},
    {14, 2, -1, "H5+A4+E8", "U+H5+A4"},
    {18, 1, -1, "H5+E8+E8", "U+H5"},
    // p = 7.
    {4, 1, -1, "U+K7", "U+U+E8+A6"},
    {4, 3, -1, "U(7)+K7", "U(7)+U+E8+A6"},
    {10, 0, -1, "U+E8", "U+U+E8"},
    {10, 2, -1, "U(7)+E8", "U(7)+U+E8"},
    {16, 1, -1, "U+E8+A6", "U+U+K7"},
    // p = 11.
    {2, 0, -1, "U", "U+U+E8+E8"},
    {2, 2, -1, "U(11)", "U+U(11)+E8+E8"},
    {12, 1, -1, "U+A10", "K11(-1)+E8"},
    // p = 13, 17, 19.
    {10, 1, -1, "H13+E8", "U+H13+E8"},
    {6, 1, -1, "U+L17", "U+U+E8+L17"},
    {4, 1, -1, "U+K19", "K19(-1)+E8+E8"},
};

std::map<std::pair<int, int>, const NamedType*> named_types_for(int p) {
  std::map<std::pair<int, int>, const NamedType*> out;
  auto add_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      out[{kNamedTypes[i].r, kNamedTypes[i].a}] = &kNamedTypes[i];
  };
  switch (p) {
    case 2: add_range(0, 4); break;
    case 3: add_range(4, 7); break;
    case 5: add_range(7, 14); break;
    case 7: add_range(14, 19); break;
    case 11: add_range(19, 22); break;
    case 13: add_range(22, 23); break;
    case 17: add_range(23, 24); break;
    case 19: add_range(24, 25); break;
    default: break;
  }
  return out;
}

void verify_named_lattice(const std::string& expr, int p, int rank, int a,
                          std::optional<int> delta, bool is_invariant_lattice) {
  Lattice l = parse_lattice_expr(expr);
  LatticeInvariants inv = invariants(l);
  auto fail = [&](const std::string& what) {
    throw internal_error("catalog lattice " + expr + ": " + what);
  };
  if (inv.rank != rank) fail("rank " + std::to_string(inv.rank) + " != " + std::to_string(rank));
  auto exp = inv.exponent_for(Int(p));
  if (!exp || *exp != a) fail("not p-elementary with a = " + std::to_string(a));
  if (is_invariant_lattice) {
    if (!inv.hyperbolic()) fail("not hyperbolic");
  } else {
    if (inv.s_plus != 2 || inv.s_minus != rank - 2) fail("signature is not (2, rank-2)");
  }
  if (delta && (!inv.delta || *inv.delta != *delta)) fail("delta mismatch");
}

const json& table8_json() {
  static const json data = json::parse(embedded::kTable8Json);
  return data;
}

}  // namespace

std::string to_string(SpecialLocus s) {
  switch (s) {
    case SpecialLocus::kGeneric: return "generic";
    case SpecialLocus::kEmpty: return "empty";
    case SpecialLocus::kTwoEllipticCurves: return "two-elliptic-curves";
  }
  throw internal_error("bad SpecialLocus");
}

Int FixedLocusProfile::euler() const {
  Int chi = 0;
  for (int g : curve_genera) chi += 2 - 2 * g;
  return chi + n;
}

const std::vector<P2Triple>& figure1_triples() {
  static const std::vector<P2Triple> triples = [] {
    json data = json::parse(embedded::kFigure1Json);
    std::vector<P2Triple> out;
    for (const auto& t : data.at("triples"))
      out.push_back(P2Triple{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    std::sort(out.begin(), out.end(), [](const P2Triple& x, const P2Triple& y) {
      return std::tie(x.r, x.a, x.delta) < std::tie(y.r, y.a, y.delta);
    });
    return out;
  }();
  return triples;
}

std::vector<std::pair<int, int>> admissible_pairs(int p) {
  require_classifiable(p);
  if (p == 2) throw domain_error("admissible_pairs is defined for odd primes");
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= 20; ++r) {
    if (r % 2 != 0) continue;
    if ((22 - r) % (p - 1) != 0) continue;
    const int m = (22 - r) / (p - 1);
    for (int a = 0; a <= std::min(r, m); ++a) {
      if ((m - a) % 2 != 0) continue;  // condition (*): m - a in 2Z>=0
      if (a % 2 == 0) {
        if (r % 4 != 2) continue;
      } else {
        // p = (-1)^{r/2-1} mod 4
        int want = (r / 2 - 1) % 2 == 0 ? 1 : 3;
        if (p % 4 != want) continue;
      }
      if (r % 8 != 2 && !(r > a && a > 0)) continue;
      out.emplace_back(r, a);
    }
  }
  return out;
}

FixedLocusProfile fixed_locus(int p, int r, int a, std::optional<int> delta) {
  require_classifiable(p);
  FixedLocusProfile profile;
  if (p == 2) {
    if (!delta) throw domain_error("p = 2 requires delta");
    P2Triple triple{r, a, *delta};
    const auto& all = figure1_triples();
    if (std::find(all.begin(), all.end(), triple) == all.end())
      throw domain_error("(r, a, delta) = (" + std::to_string(r) + ", " + std::to_string(a) +
                         ", " + std::to_string(*delta) + ") is not a realized order-2 type");
    profile.alpha = r - 10;
    if (r == 10 && a == 10 && *delta == 0) {
      profile.special = SpecialLocus::kEmpty;
    } else if (r == 10 && a == 8 && *delta == 0) {
      profile.special = SpecialLocus::kTwoEllipticCurves;
      profile.curve_genera = {1, 1};
    } else {
      const int g = (22 - r - a) / 2;
      const int k = (r - a) / 2;
      profile.g_prime = g;
      profile.curve_genera.assign(static_cast<std::size_t>(k) + 1, 0);
      profile.curve_genera.front() = g;
    }
    if (profile.euler() != 24 - Int(22 - r) * 2)
      throw internal_error("Euler count mismatch for order-2 type");
    return profile;
  }

  auto pairs = admissible_pairs(p);
  if (std::find(pairs.begin(), pairs.end(), std::make_pair(r, a)) == pairs.end())
    throw domain_error("(r, a) = (" + std::to_string(r) + ", " + std::to_string(a) +
                       ") is not admissible for p = " + std::to_string(p));

  const int m = (22 - r) / (p - 1);
  LefschetzSolution sol = solve_table1(p);
  Rat alpha_rat = sol.alpha_of_r.eval(r);
  if (!is_integer(alpha_rat)) throw internal_error("non-integral alpha");
  profile.alpha = to_integer(alpha_rat);
  profile.g_prime = (m - a) / 2;

  for (const auto& nt : sol.n_t) {
    Rat v = nt.eval(Rat(profile.alpha));
    if (!is_integer(v) || v < 0)
      throw internal_error("n_t is not a non-negative integer for (p, r, a) = (" +
                           std::to_string(p) + ", " + std::to_string(r) + ", " +
                           std::to_string(a) + ")");
    profile.points.push_back(to_integer(v));
    profile.n += profile.points.back();
  }

  Int k_thm = profile.alpha + profile.g_prime - 1;
  if (k_thm < -1) throw internal_error("negative curve count");
  if (k_thm >= 0) {
    profile.curve_genera.assign(static_cast<std::size_t>(k_thm.get_si()) + 1, 0);
    profile.curve_genera.front() = profile.g_prime;
  }

  if (profile.euler() != 24 - Int(m) * p)
    throw internal_error("Euler count mismatch for (p, r, a) = (" + std::to_string(p) + ", " +
                         std::to_string(r) + ", " + std::to_string(a) + ")");
  return profile;
}

namespace {

ClassificationRow build_row(int p, int r, int a, std::optional<int> delta,
                            const std::map<std::pair<int, int>, const NamedType*>& names) {
  ClassificationRow row;
  row.p = p;
  row.r = r;
  row.a = a;
  row.delta = delta;
  row.m = (22 - r) / (p - 1);
  row.profile = fixed_locus(p, r, a, delta);
  row.moduli_dim = moduli_dimension(p, r);

  const bool exceptional = row.profile.special != SpecialLocus::kGeneric;
  if (!exceptional) {
    row.g_thm = Int(22 - r - (p - 1) * a) / (2 * (p - 1));
    row.k_thm = row.profile.alpha + row.profile.g_prime - 1;
    if (p <= 11) {
      if (!row.profile.curve_genera.empty()) {
        row.table_g = *row.g_thm;
        row.table_k = *row.k_thm;
      }
    } else {
      row.table_k = Int(static_cast<long>(row.profile.curve_genera.size()));
    }
  }

  auto it = names.find({r, a});
  if (it != names.end() && (p != 2 || it->second->delta == delta.value_or(-1))) {
    row.S_name = it->second->S;
    verify_named_lattice(*row.S_name, p, r, a, delta, true);
    if (it->second->T) {
      row.T_name = it->second->T;
      verify_named_lattice(*row.T_name, p, 22 - r, a, std::nullopt, false);
    }
  }
  return row;
}

}  // namespace

std::vector<ClassificationRow> classification_table(int p) {
  require_classifiable(p);
  auto names = named_types_for(p);
  std::vector<ClassificationRow> rows;
  if (p == 2) {
    for (const P2Triple& t : figure1_triples())
      rows.push_back(build_row(2, t.r, t.a, t.delta, names));
  } else {
    for (auto [r, a] : admissible_pairs(p)) rows.push_back(build_row(p, r, a, std::nullopt, names));
  }
  return rows;
}

Int moduli_dimension(int p, int r) {
  require_classifiable(p);
  if (p == 2) return Int(22 - r - 2);
  return Int((22 - r) / (p - 1) - 1);
}

Int moduli_dimension(const ClassificationRow& row) { return moduli_dimension(row.p, row.r); }

std::vector<ModuliComponent> irreducible_components(int p) {
  require_classifiable(p);
  std::vector<ModuliComponent> out;
  for (const auto& entry : table8_json().at("components")) {
    if (entry.at("p").get<int>() != p) continue;
    ModuliComponent c;
    c.p = p;
    c.S_expr = entry.at("S").get<std::string>();
    c.display = entry.at("display").get<std::string>();
    Lattice l = parse_lattice_expr(c.S_expr);
    LatticeInvariants inv = invariants(l);
    if (!inv.hyperbolic())
      throw internal_error("component lattice " + c.S_expr + " is not hyperbolic");
    if (!inv.exponent_for(Int(p)))
      throw internal_error("component lattice " + c.S_expr + " is not " + std::to_string(p) +
                           "-elementary");
    c.rank = inv.rank;
    c.dim = moduli_dimension(p, c.rank);
    Int expected(entry.at("dim").get<int>());
    if (c.dim != expected)
      throw internal_error("component dimension mismatch for " + c.S_expr + ": computed " +
                           to_string(c.dim) + ", reference " + to_string(expected));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace k3ns
