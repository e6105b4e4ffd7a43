#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace k3ns {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals backed by GMP. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
inline Rat ratio(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

// Integer value of an integral rational; throws otherwise.
Int to_integer(const Rat& q);

std::string to_string(const Int& z);
// "num" when den == 1, otherwise "num/den".
std::string to_string(const Rat& q);

// Accepts "num", "num/den" or decimal-free signed integers; throws
// parse_error on malformed input or zero denominator.
Rat rat_from_string(std::string_view text);

bool is_prime(const Int& n);
inline bool is_prime(long n) { return is_prime(Int(n)); }

}  // namespace k3ns
