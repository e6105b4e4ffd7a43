#include "k3ns/rational.hpp"

#include <cctype>

#include "k3ns/errors.hpp"

namespace k3ns {

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw domain_error("rational " + to_string(q) + " is not an integer");
  return q.get_num();
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::string {
    std::string out;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) out.push_back(text[i++]);
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i++]);
      ++digits;
    }
    if (digits == 0) throw parse_error("expected integer", i);
    return out;
  };
  skip_ws();
  std::string num = read_int();
  skip_ws();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
    skip_ws();
  }
  if (i != text.size()) throw parse_error("trailing characters in rational", i);
  Int d(den);
  if (d == 0) throw parse_error("zero denominator", i);
  return ratio(Int(num), d);
}

bool is_prime(const Int& n) {
  // GMP's deterministic-for-small / strong-probab-prime test; 2 means
  // definitely prime, 1 probably (never wrong for the sizes used here).
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace k3ns
