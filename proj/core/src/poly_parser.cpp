#include <cctype>

#include "k3ns/polynomial.hpp"

namespace k3ns {

namespace {

// expr   := ['-'|'+'] term (('+'|'-') term)*
// term   := factor ( ('*' | juxtaposition) factor )*
// factor := primary ['^' uint]
// primary := rational | name | var | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::map<std::string, Rat>* bindings,
             const std::string& var, std::vector<std::string>* names_out)
      : text_(text), bindings_(bindings), var_(var), names_out_(names_out) {}

  RatPoly parse() {
    RatPoly r = expr();
    skip_ws();
    if (!eof()) throw parse_error("unexpected character in polynomial", pos_);
    return r;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  RatPoly expr() {
    skip_ws();
    int sign = 1;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    RatPoly acc = term() * Rat(sign);
    for (;;) {
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-')) break;
      int s = peek() == '-' ? -1 : 1;
      ++pos_;
      acc = acc + term() * Rat(s);
    }
    return acc;
  }

  RatPoly term() {
    RatPoly acc = factor();
    for (;;) {
      skip_ws();
      if (eof()) break;
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * factor();  // juxtaposition, e.g. "4t^2" or "a t"
      } else {
        break;
      }
    }
    return acc;
  }

  RatPoly factor() {
    RatPoly base = primary();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string digits;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
      if (digits.empty()) throw parse_error("expected exponent", at);
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  RatPoly primary() {
    skip_ws();
    if (eof()) throw parse_error("unexpected end of polynomial", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatPoly inner = expr();
      skip_ws();
      if (eof() || peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    throw parse_error("expected coefficient, parameter or variable", pos_);
  }

  RatPoly number() {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    Int num(digits);
    if (!eof() && peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      std::string den;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) den.push_back(text_[pos_++]);
      if (den.empty()) throw parse_error("expected denominator", at);
      Int d(den);
      if (d == 0) throw parse_error("zero denominator", at);
      return RatPoly::constant(ratio(num, d));
    }
    return RatPoly::constant(Rat(num));
  }

  RatPoly name() {
    std::size_t at = pos_;
    std::string id;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      id.push_back(text_[pos_++]);
    if (id == var_) return RatPoly::monomial(Rat(1), 1);
    if (names_out_) {
      if (std::find(names_out_->begin(), names_out_->end(), id) == names_out_->end())
        names_out_->push_back(id);
      return RatPoly::constant(Rat(0));
    }
    auto it = bindings_->find(id);
    if (it == bindings_->end())
      throw parse_error("unbound parameter '" + id + "'", at);
    return RatPoly::constant(it->second);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::map<std::string, Rat>* bindings_;
  const std::string& var_;
  std::vector<std::string>* names_out_;
};

}  // namespace

RatPoly parse_poly(std::string_view text, const std::map<std::string, Rat>& bindings,
                   const std::string& var) {
  return PolyParser(text, &bindings, var, nullptr).parse();
}

std::vector<std::string> poly_parameter_names(std::string_view text, const std::string& var) {
  std::vector<std::string> names;
  PolyParser(text, nullptr, var, &names).parse();
  return names;
}

}  // namespace k3ns
