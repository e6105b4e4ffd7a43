#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3ns/errors.hpp"
#include "k3ns/rational.hpp"

namespace k3ns {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// Normalized: no trailing zero coefficient; the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& v);
  // c * t^k
  static RatPoly monomial(const Rat& c, int k);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat leading() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly pow(int e) const;
  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Quotient and remainder over Q; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
// Exact quotient; throws internal_error if the division leaves a remainder.
RatPoly divexact(const RatPoly& a, const RatPoly& b);
// Monic gcd (zero polynomial if both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Yun squarefree decomposition: f = lc * prod_i part_i^i with the parts
// monic, squarefree and pairwise coprime. Only nonconstant parts are
// returned, as (part, multiplicity) pairs in increasing multiplicity.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f);

// Largest k with q^k | f; f nonzero, q nonconstant.
int order_at(const RatPoly& f, const RatPoly& q);

// s^d * f(1/s); requires deg f <= d. Used for the place at infinity.
RatPoly infinity_flip(const RatPoly& f, int d);

// Parses integer/rational coefficients, named parameters, '+'/'-', '*'
// (or juxtaposition), '^' powers and parentheses, in one variable `var`.
// Every named parameter must be present in `bindings`.
RatPoly parse_poly(std::string_view text, const std::map<std::string, Rat>& bindings,
                   const std::string& var = "t");

// The names appearing in a polynomial expression, in first-seen order.
std::vector<std::string> poly_parameter_names(std::string_view text, const std::string& var = "t");

}  // namespace k3ns
