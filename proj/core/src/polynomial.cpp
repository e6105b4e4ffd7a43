#include "k3ns/polynomial.hpp"

#include <algorithm>

namespace k3ns {

RatPoly RatPoly::constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }

RatPoly RatPoly::monomial(const Rat& c, int k) {
  if (k < 0) throw domain_error("negative monomial degree");
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

Rat RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

Rat RatPoly::leading() const {
  if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < o.c_.size()) v[i] += o.c_[i];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x = -x;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(int e) const {
  if (e < 0) throw domain_error("negative polynomial power");
  RatPoly r = RatPoly::constant(Rat(1));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() <= 0) return RatPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    if (k == 0) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  RatPoly r = a;
  std::vector<Rat> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0);
  const Rat lead_inv = Rat(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rat c = r.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = c;
    r = r - RatPoly::monomial(c, shift) * b;
  }
  return {RatPoly(std::move(q)), std::move(r)};
}

RatPoly divexact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw internal_error("divexact: division is not exact");
  return q;
}

namespace {

using IntVec = std::vector<Int>;  // little-endian, no trailing zeros

void trim_int(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Scales a rational polynomial to a primitive integer one (same roots).
IntVec to_primitive_int(const RatPoly& f) {
  Int lcm_den(1);
  for (const Rat& c : f.coeffs()) lcm_den = lcm(lcm_den, denominator(c));
  IntVec v;
  v.reserve(f.coeffs().size());
  Int content(0);
  for (const Rat& c : f.coeffs()) {
    Rat scaled = c * Rat(lcm_den);
    v.push_back(to_integer(scaled));
    content = gcd(content, v.back());
  }
  if (content > 1)
    for (Int& x : v) x /= content;
  trim_int(v);
  return v;
}

void make_primitive(IntVec& v) {
  Int content(0);
  for (const Int& x : v) content = gcd(content, x);
  if (content > 1)
    for (Int& x : v) x /= content;
  if (!v.empty() && v.back() < 0)
    for (Int& x : v) x = -x;
}

// Pseudo-remainder: eliminates leading terms of a against b by cross
// multiplication, staying in Z[t].
IntVec pseudo_rem(IntVec a, const IntVec& b) {
  const Int& lead_b = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Int lead_a = a.back();
    for (Int& x : a) x *= lead_b;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead_a * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

// Primitive polynomial remainder sequence over Z; naive division over Q
// explodes coefficientwise already at degree ~20.
RatPoly poly_gcd(RatPoly a, RatPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntVec x = to_primitive_int(a);
  IntVec y = to_primitive_int(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntVec r = pseudo_rem(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(x.size());
  for (const Int& c : x) coeffs.emplace_back(c);
  return RatPoly(std::move(coeffs)).monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
  std::vector<std::pair<RatPoly, int>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm (characteristic 0). The leading unit of f rides along
  // in w; the extracted parts are monic.
  RatPoly g = poly_gcd(f, f.derivative());
  RatPoly w = divexact(f, g);
  RatPoly y = divexact(f.derivative(), g);
  RatPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    RatPoly a = poly_gcd(w, z);
    if (a.degree() > 0) out.emplace_back(a, i);
    w = divexact(w, a);
    y = divexact(z, a);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

int order_at(const RatPoly& f, const RatPoly& q) {
  if (f.is_zero()) throw domain_error("order_at of zero polynomial");
  if (q.degree() < 1) throw domain_error("order_at requires a nonconstant place");
  int ord = 0;
  RatPoly cur = f;
  for (;;) {
    auto [quot, rem] = divrem(cur, q);
    if (!rem.is_zero()) return ord;
    cur = std::move(quot);
    ++ord;
  }
}

RatPoly infinity_flip(const RatPoly& f, int d) {
  if (f.degree() > d) throw domain_error("infinity_flip: degree exceeds homogenization bound");
  std::vector<Rat> v(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= f.degree(); ++k) v[static_cast<std::size_t>(d - k)] = f.coeff(k);
  return RatPoly(std::move(v));
}

}  // namespace k3ns
