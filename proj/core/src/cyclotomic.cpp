#include "k3ns/cyclotomic.hpp"

#include <algorithm>
#include <utility>

namespace k3ns {

namespace {

void require_prime(int p) {
  if (p < 2 || !is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
}

// Reduce a length-p exponent-folded vector (coefficients of 1..z^{p-1}
// modulo z^p = 1) to the canonical power basis of length p-1 using
// z^{p-1} = -(1 + z + ... + z^{p-2}).
std::vector<Rat> reduce_mod_phi(std::vector<Rat> folded, int p) {
  std::vector<Rat> out(static_cast<std::size_t>(p - 1));
  const Rat& top = folded[static_cast<std::size_t>(p - 1)];
  for (int i = 0; i < p - 1; ++i) out[static_cast<std::size_t>(i)] = folded[static_cast<std::size_t>(i)] - top;
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic(int p, std::vector<Rat> coeffs) : p_(p), c_(std::move(coeffs)) {
  require_prime(p);
  if (c_.size() != static_cast<std::size_t>(p - 1))
    throw domain_error("coefficient vector must have length p-1");
}

Cyclotomic Cyclotomic::zero(int p) {
  require_prime(p);
  return Cyclotomic(p, std::vector<Rat>(static_cast<std::size_t>(p - 1)));
}

Cyclotomic Cyclotomic::one(int p) { return from_rational(p, Rat(1)); }

Cyclotomic Cyclotomic::from_rational(int p, const Rat& value) {
  Cyclotomic x = zero(p);
  x.c_[0] = value;
  return x;
}

Cyclotomic Cyclotomic::zeta_pow(int p, long k) {
  require_prime(p);
  long e = ((k % p) + p) % p;
  std::vector<Rat> folded(static_cast<std::size_t>(p));
  folded[static_cast<std::size_t>(e)] = Rat(1);
  return Cyclotomic(p, reduce_mod_phi(std::move(folded), p));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw domain_error("cyclotomic element is not rational");
  return c_[0];
}

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
  if (p_ != o.p_)
    throw domain_error("mixed cyclotomic fields p=" + std::to_string(p_) + " and p=" +
                       std::to_string(o.p_));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same_field(o);
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same_field(o);
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same_field(o);
  const int p = p_;
  // Convolve, folding exponents modulo p (valid since z^p = 1), then
  // reduce the z^{p-1} coefficient.
  std::vector<Rat> folded(static_cast<std::size_t>(p));
  for (int i = 0; i < p - 1; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      folded[static_cast<std::size_t>((i + j) % p)] +=
          c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  return Cyclotomic(p, reduce_mod_phi(std::move(folded), p));
}

Cyclotomic Cyclotomic::operator*(const Rat& s) const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return p_ == o.p_ && c_ == o.c_;
}

Cyclotomic Cyclotomic::galois(long j) const {
  const int p = p_;
  long e = ((j % p) + p) % p;
  if (e == 0) throw domain_error("galois exponent must be nonzero mod p");
  std::vector<Rat> folded(static_cast<std::size_t>(p));
  for (int i = 0; i < p - 1; ++i)
    folded[static_cast<std::size_t>((static_cast<long>(i) * e) % p)] += c_[static_cast<std::size_t>(i)];
  return Cyclotomic(p, reduce_mod_phi(std::move(folded), p));
}

Cyclotomic Cyclotomic::conj() const { return galois(p_ - 1); }

namespace {

// Dense univariate polynomials over Q, little-endian, for the extended
// Euclidean step only.
using QP = std::vector<Rat>;

int qp_deg(const QP& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

QP qp_scale(QP f, const Rat& s) {
  for (auto& c : f) c *= s;
  return f;
}

QP qp_sub_shifted_scaled(QP a, const QP& b, const Rat& s, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift))
    a.resize(b.size() + static_cast<std::size_t>(shift));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= s * b[i];
  return a;
}

// (quotient, remainder) of a by b over Q, b != 0.
std::pair<QP, QP> qp_divrem(QP a, const QP& b) {
  int db = qp_deg(b);
  QP q(a.size());
  const Rat lead_inv = Rat(1) / b[static_cast<std::size_t>(db)];
  for (int da = qp_deg(a); da >= db; da = qp_deg(a)) {
    Rat c = a[static_cast<std::size_t>(da)] * lead_inv;
    int shift = da - db;
    q[static_cast<std::size_t>(shift)] = c;
    a = qp_sub_shifted_scaled(std::move(a), b, c, shift);
  }
  return {std::move(q), std::move(a)};
}

}  // namespace

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw domain_error("inversion of zero in Q(zeta_p)");
  const int p = p_;
  // Extended Euclid: s*f + t*Phi_p = gcd = const, so f^{-1} = s / const.
  QP r0(static_cast<std::size_t>(p), Rat(1));  // Phi_p = 1 + x + ... + x^{p-1}
  QP r1(c_.begin(), c_.end());
  QP s0{Rat(0)};
  QP s1{Rat(1)};
  while (qp_deg(r1) > 0) {
    auto [q, rem] = qp_divrem(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // s_next = s0 - q * s1
    QP s_next = s0;
    int dq = qp_deg(q);
    for (int i = 0; i <= dq; ++i)
      if (q[static_cast<std::size_t>(i)] != 0)
        s_next = qp_sub_shifted_scaled(std::move(s_next), s1, q[static_cast<std::size_t>(i)], i);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  if (qp_deg(r1) != 0)
    throw internal_error("extended Euclid reached zero remainder before a unit");
  QP inv_poly = qp_scale(std::move(s1), Rat(1) / r1[0]);
  inv_poly.resize(static_cast<std::size_t>(p - 1));
  Cyclotomic result(p, std::vector<Rat>(inv_poly.begin(), inv_poly.end()));
  return result;
}

std::string Cyclotomic::str() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat c = c_[i];
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    std::string mag = to_string(a);
    if (i == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  if (first) out = "0";
  return out;
}

}  // namespace k3ns
