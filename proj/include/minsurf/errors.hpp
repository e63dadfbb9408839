#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

/// Malformed or out-of-domain input (|z| > 1, non-finite coefficients, bad grids).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature hit its panel budget before successive estimates agreed.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double previous, double last, int panels)
      : std::runtime_error(what), previous_(previous), last_(last), panels_(panels) {}

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }
  int panels() const noexcept { return panels_; }

 private:
  double previous_;
  double last_;
  int panels_;
};

/// Evaluation at (or numerically at) a zero of h' or g' where a closed form divides by it.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite-difference stencil would leave the open unit disk.
class StencilError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace minsurf
