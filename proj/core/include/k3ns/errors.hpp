#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3ns {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Domain violation: a precondition on the inputs does not hold.
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// Internal consistency failure: signals a bug or bad embedded data,
// never a valid input state.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

// Text parse failure with a 0-based input position.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace k3ns
