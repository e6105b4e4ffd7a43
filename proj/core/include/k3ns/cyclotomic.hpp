#pragma once

#include <string>
#include <vector>

#include "k3ns/errors.hpp"
#include "k3ns/rational.hpp"

namespace k3ns {

// Exact element of Q(zeta_p), p prime, stored in the power basis
// 1, z, ..., z^{p-2} with eager reduction by 1 + z + ... + z^{p-1} = 0.
// The representation is canonical: equality is coefficientwise.
// p = 2 is supported degenerately (zeta_2 = -1, the field is Q).
class Cyclotomic {
 public:
  Cyclotomic(int p, std::vector<Rat> coeffs);

  static Cyclotomic zero(int p);
  static Cyclotomic one(int p);
  static Cyclotomic from_rational(int p, const Rat& value);
  static Cyclotomic zeta_pow(int p, long k);

  int prime() const { return p_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // The rational value when is_rational(); throws otherwise.
  Rat rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rat& s) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Galois action zeta -> zeta^j; j must be nonzero mod p.
  Cyclotomic galois(long j) const;
  // Complex conjugation zeta -> zeta^{p-1}.
  Cyclotomic conj() const;
  // Multiplicative inverse by the extended Euclidean algorithm against
  // the minimal polynomial; throws domain_error on zero.
  Cyclotomic inv() const;

  std::string str() const;

 private:
  void require_same_field(const Cyclotomic& o) const;

  int p_;
  std::vector<Rat> c_;  // length p-1
};

inline Cyclotomic operator*(const Rat& s, const Cyclotomic& x) { return x * s; }

// An identity A = B in Q(zeta_p) holds iff all p-1 coordinates agree.
inline const std::vector<Rat>& rational_coordinates(const Cyclotomic& x) {
  return x.coeffs();
}

}  // namespace k3ns
