#include "k3ns/weierstrass.hpp"

#include <algorithm>

namespace k3ns {

int KodairaClass::euler() const {
  switch (kind) {
    case kIn: return n;
    case kII: return 2;
    case kIII: return 3;
    case kIV: return 4;
    case kInStar: return n + 6;
    case kIVStar: return 8;
    case kIIIStar: return 9;
    case kIIStar: return 10;
  }
  throw internal_error("bad Kodaira kind");
}

std::string KodairaClass::str() const {
  switch (kind) {
    case kIn: return "I" + std::to_string(n);
    case kII: return "II";
    case kIII: return "III";
    case kIV: return "IV";
    case kInStar: return "I" + std::to_string(n) + "*";
    case kIVStar: return "IV*";
    case kIIIStar: return "III*";
    case kIIStar: return "II*";
  }
  throw internal_error("bad Kodaira kind");
}

KodairaClass kodaira_from_string(const std::string& s) {
  if (s == "II") return {KodairaClass::kII, 0};
  if (s == "III") return {KodairaClass::kIII, 0};
  if (s == "IV") return {KodairaClass::kIV, 0};
  if (s == "II*") return {KodairaClass::kIIStar, 0};
  if (s == "III*") return {KodairaClass::kIIIStar, 0};
  if (s == "IV*") return {KodairaClass::kIVStar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(digits);
      if (star) return {KodairaClass::kInStar, n};
      if (n >= 1) return {KodairaClass::kIn, n};
    }
  }
  throw domain_error("unknown Kodaira type: " + s);
}

std::optional<KodairaClass> kodaira_type(int ord_f, int ord_g, int ord_delta) {
  if (ord_f < 0 || ord_g < 0 || ord_delta < 0) throw domain_error("negative valuation");
  if (ord_f >= 4 && ord_g >= 6)
    throw domain_error("non-minimal model: ord(f) >= 4 and ord(g) >= 6");
  if (ord_delta == 0) return std::nullopt;  // smooth fiber

  auto expect_delta = [&](int want, KodairaClass type) {
    if (ord_delta != want)
      throw internal_error("inconsistent valuation triple (" + std::to_string(ord_f) + ", " +
                           std::to_string(ord_g) + ", " + std::to_string(ord_delta) + ")");
    return type;
  };

  if (ord_f == 0) return KodairaClass{KodairaClass::kIn, ord_delta};
  // From here ord_f >= 1, and ord_g >= 1 (otherwise ord_delta would be 0).
  if (ord_g == 1) return expect_delta(2, {KodairaClass::kII, 0});
  if (ord_f == 1) return expect_delta(3, {KodairaClass::kIII, 0});
  if (ord_g == 2) return expect_delta(4, {KodairaClass::kIV, 0});
  if (ord_f == 2 && ord_g == 3) {
    if (ord_delta < 6)
      throw internal_error("inconsistent valuation triple at potential I_n*");
    return KodairaClass{KodairaClass::kInStar, ord_delta - 6};
  }
  if ((ord_f >= 3 && ord_g == 3) || (ord_f == 2 && ord_g >= 4))
    return expect_delta(6, {KodairaClass::kInStar, 0});
  if (ord_g == 4) return expect_delta(8, {KodairaClass::kIVStar, 0});
  if (ord_f == 3) return expect_delta(9, {KodairaClass::kIIIStar, 0});
  if (ord_g == 5) return expect_delta(10, {KodairaClass::kIIStar, 0});
  throw internal_error("valuation triple matches no Kodaira row");
}

WeierstrassModel make_model(RatPoly f, RatPoly g, std::string label,
                            std::map<std::string, Rat> bindings) {
  if (f.degree() > 8) throw domain_error("deg f > 8");
  if (g.degree() > 12) throw domain_error("deg g > 12");
  WeierstrassModel w{std::move(f), std::move(g), std::move(label), std::move(bindings)};
  discriminant(w);  // rejects identically-zero Delta
  return w;
}

RatPoly discriminant(const WeierstrassModel& w) {
  RatPoly d = w.f.pow(3) * Rat(4) + w.g.pow(2) * Rat(27);
  if (d.is_zero()) throw domain_error("identically zero discriminant");
  return d;
}

std::map<std::string, int> FiberSummary::multiset() const {
  std::map<std::string, int> out;
  for (const auto& rep : places) out[rep.type.str()] += rep.count;
  return out;
}

namespace {

int ord_or_infinity(const RatPoly& f, const RatPoly& q) {
  if (f.is_zero()) return kOrdInfinity;
  return order_at(f, q);
}

// Splits the squarefree polynomial d into (part, k) pieces where k is the
// exact vanishing order of h at every root of the part. Roots of d with
// ord_h >= k are the roots of gcd(d, h, h', ..., h^{(k-1)}) in
// characteristic 0.
std::vector<std::pair<RatPoly, int>> split_by_order(const RatPoly& d, const RatPoly& h) {
  std::vector<std::pair<RatPoly, int>> out;
  if (h.is_zero()) {
    out.emplace_back(d.monic(), kOrdInfinity);
    return out;
  }
  std::vector<RatPoly> at_least{d.monic()};  // at_least[k]: roots with ord >= k
  RatPoly deriv = h;
  while (at_least.back().degree() > 0) {
    RatPoly next = poly_gcd(at_least.back(), deriv);
    at_least.push_back(next);
    deriv = deriv.derivative();
    if (static_cast<int>(at_least.size()) > h.degree() + 2)
      throw internal_error("split_by_order failed to terminate");
  }
  for (std::size_t k = 0; k + 1 < at_least.size(); ++k) {
    RatPoly exact = divexact(at_least[k], at_least[k + 1]).monic();
    if (exact.degree() > 0) out.emplace_back(exact, static_cast<int>(k));
  }
  return out;
}

FiberReport classify_place(const RatPoly& place, int ord_f, int ord_g, int ord_delta) {
  auto type = kodaira_type(std::min(ord_f, kOrdInfinity), std::min(ord_g, kOrdInfinity), ord_delta);
  if (!type) throw internal_error("classify_place called on a smooth place");
  FiberReport rep;
  rep.place = place.str();
  rep.ord_f = ord_f;
  rep.ord_g = ord_g;
  rep.ord_delta = ord_delta;
  rep.type = *type;
  rep.count = place.degree();
  return rep;
}

}  // namespace

FiberSummary classify_fibers(const WeierstrassModel& w) {
  RatPoly delta = discriminant(w);
  FiberSummary summary;

  // Finite places: for each multiplicity class of Delta, refine by the
  // exact orders of f and g; every root of a combined part is one place.
  for (const auto& [part, mult] : squarefree_decomposition(delta)) {
    for (const auto& [f_part, ord_f] : split_by_order(part, w.f)) {
      for (const auto& [fg_part, ord_g] : split_by_order(f_part, w.g)) {
        summary.places.push_back(classify_place(fg_part, ord_f, ord_g, mult));
      }
    }
  }
  std::sort(summary.places.begin(), summary.places.end(),
            [](const FiberReport& a, const FiberReport& b) {
              return std::tie(a.place, a.ord_delta) < std::tie(b.place, b.ord_delta);
            });

  // Place at infinity, through the degree-(8, 12, 24) homogenization.
  RatPoly f_inf = w.f.is_zero() ? RatPoly() : infinity_flip(w.f, 8);
  RatPoly g_inf = w.g.is_zero() ? RatPoly() : infinity_flip(w.g, 12);
  RatPoly d_inf = infinity_flip(delta, 24);
  RatPoly s = RatPoly::monomial(Rat(1), 1);
  int ord_d_inf = order_at(d_inf, s);
  if (ord_d_inf > 0) {
    FiberReport rep =
        classify_place(s, ord_or_infinity(f_inf, s), ord_or_infinity(g_inf, s), ord_d_inf);
    rep.place = "infinity";
    rep.at_infinity = true;
    rep.count = 1;
    summary.places.push_back(rep);
  }

  for (const auto& rep : summary.places) summary.euler_total += rep.euler_each() * rep.count;
  return summary;
}

bool weighted_invariance(const std::vector<std::array<int, 3>>& monomials, int p,
                         const std::array<int, 3>& weights, int required_character) {
  if (p < 2) throw domain_error("weighted_invariance requires p >= 2");
  auto mod = [&](long x) { return ((x % p) + p) % p; };
  for (const auto& e : monomials) {
    long w = 0;
    for (int i = 0; i < 3; ++i) w += static_cast<long>(weights[static_cast<std::size_t>(i)]) * e[static_cast<std::size_t>(i)];
    if (mod(w) != mod(required_character)) return false;
  }
  return true;
}

bool weighted_invariance(const TriPoly& poly, int p, const std::array<int, 3>& weights,
                         int required_character) {
  return weighted_invariance(poly.support(), p, weights, required_character);
}

bool model_invariant_under(const WeierstrassModel& w, const ModelAction& action) {
  const int p = action.p;
  auto mod = [&](long x) { return ((x % p) + p) % p; };
  if (mod(3L * action.u) != mod(2L * action.v)) return false;
  std::vector<std::array<int, 3>> f_mons, g_mons;
  for (int k = 0; k <= w.f.degree(); ++k)
    if (w.f.coeff(k) != 0) f_mons.push_back({0, 0, k});
  for (int k = 0; k <= w.g.degree(); ++k)
    if (w.g.coeff(k) != 0) g_mons.push_back({0, 0, k});
  std::array<int, 3> weights{0, 0, action.w};
  return weighted_invariance(f_mons, p, weights, mod(2L * action.v - action.u)) &&
         weighted_invariance(g_mons, p, weights, mod(2L * action.v));
}

bool model_invariant_under_exact(const WeierstrassModel& w, const ModelAction& action) {
  const int p = action.p;
  auto zeta = [&](long k) { return Cyclotomic::zeta_pow(p, k); };
  if (zeta(3L * action.u) != zeta(2L * action.v)) return false;
  // z^u f(z^w t) = z^{2v} f(t) and g(z^w t) = z^{2v} g(t), coefficientwise
  // in Q(zeta_p)[t].
  for (int k = 0; k <= w.f.degree(); ++k) {
    if (w.f.coeff(k) == 0) continue;
    if (zeta(action.u + static_cast<long>(action.w) * k) != zeta(2L * action.v)) return false;
  }
  for (int k = 0; k <= w.g.degree(); ++k) {
    if (w.g.coeff(k) == 0) continue;
    if (zeta(static_cast<long>(action.w) * k) != zeta(2L * action.v)) return false;
  }
  return true;
}

TriPoly TriPoly::monomial(const Rat& c, int e0, int e1, int e2) {
  TriPoly p;
  if (c != 0) p.terms_[{e0, e1, e2}] = c;
  return p;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  TriPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.prune();
  return r;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.terms_[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
  r.prune();
  return r;
}

TriPoly TriPoly::operator*(const Rat& s) const {
  TriPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  r.prune();
  return r;
}

void TriPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

std::vector<std::array<int, 3>> TriPoly::support() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

}  // namespace k3ns
