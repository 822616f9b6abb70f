#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polychrome {

// Structural misuse of the API: wrong vector lengths, out-of-range residues.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weight set does not generate the whole group.
class NotSurjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction parameters violate their constraints.
class ParamViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A run would need more elementary operations than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, double required_ops)
      : std::runtime_error(std::move(what)), required_ops(required_ops) {}
  double required_ops;
};

// Malformed coloring file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polychrome
