#include <cctype>
#include <optional>

#include "k3ns/lattice.hpp"

namespace k3ns {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Lattice parse() {
    Lattice result = term();
    skip_ws();
    while (!eof() && peek() == '+') {
      ++pos_;
      Lattice next = term();
      result = direct_sum(result, next);
      skip_ws();
    }
    if (!eof()) throw parse_error("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return result;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    std::string digits;
    if (!eof() && (peek() == '-' || peek() == '+')) digits.push_back(text_[pos_++]);
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    if (digits.empty() || digits.back() == '-' || digits.back() == '+')
      throw parse_error("expected integer", start);
    return Int(digits);
  }

  Lattice atom() {
    skip_ws();
    if (eof()) throw parse_error("expected lattice atom", pos_);
    std::size_t start = pos_;
    char kind = peek();
    if (kind == 'U') {
      ++pos_;
      return standard_lattice("U");
    }
    if (kind == 'L') {
      ++pos_;
      std::string digits = digit_run();
      if (digits != "17") throw parse_error("unknown lattice L" + digits, start);
      return standard_lattice("L17");
    }
    if (kind == 'A' || kind == 'D' || kind == 'E' || kind == 'K' || kind == 'H') {
      ++pos_;
      std::string digits = digit_run();
      if (digits.empty()) throw parse_error("expected parameter after '" + std::string(1, kind) + "'", pos_);
      std::string name = std::string(1, kind) + digits;
      // Dual-twist atoms A4*5 and E6*3 are single tokens.
      if (!eof() && peek() == '*') {
        ++pos_;
        std::string scale = digit_run();
        name += "*" + scale;
        if (name != "A4*5" && name != "E6*3")
          throw parse_error("unknown lattice atom " + name, start);
      }
      try {
        return standard_lattice(name);
      } catch (const domain_error& e) {
        throw parse_error(e.what(), start);
      }
    }
    throw parse_error("expected lattice atom", pos_);
  }

  std::string digit_run() {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    return digits;
  }

  Lattice term() {
    Lattice l = atom();
    skip_ws();
    if (!eof() && peek() == '(') {
      ++pos_;
      Int c = integer();
      skip_ws();
      if (eof() || peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      if (c == 0) throw parse_error("twist by zero", pos_);
      std::string base_label = l.label;
      l = twist(l, c);
      l.label = base_label + "(" + to_string(c) + ")";
      skip_ws();
    }
    if (!eof() && peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      Int e = integer();
      if (e < 1) throw parse_error("power must be >= 1", at);
      Lattice repeated = l;
      for (Int i = 1; i < e; ++i) repeated = direct_sum(repeated, l);
      repeated.label = l.label + "^" + to_string(e);
      l = std::move(repeated);
    }
    return l;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Lattice parse_lattice_expr(std::string_view text) {
  Parser p(text);
  Lattice l = p.parse();
  if (l.label.empty()) l.label = std::string(text);
  return l;
}

}  // namespace k3ns
