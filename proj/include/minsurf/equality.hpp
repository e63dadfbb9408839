#pragma once

#include <optional>

#include "minsurf/boundary.hpp"
#include "minsurf/series.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// H(x, y) = (a x + b y, c x + d y, e x + f y).
struct AffineCoefficients {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;

  Point3 column_x() const noexcept { return {a, c, e}; }
  Point3 column_y() const noexcept { return {b, d, f}; }
};

/// The surface with constant data p = [p0], q = [q0]; lambda is |p0|(1 + |q0|^2).
Surface affine_surface(Complex p0, Complex q0);

/// Linear map of affine_surface(p0, q0): columns are F_x and F_y.
AffineCoefficients affine_coefficients(Complex p0, Complex q0);

struct ConformalityCheck {
  bool pass = false;
  double norm_residual = 0.0;   ///< |a^2+c^2+e^2 - (b^2+d^2+f^2)|
  double ortho_residual = 0.0;  ///< |ab + cd + ef|
};

ConformalityCheck conformality_check(const AffineCoefficients& c, double tol = 1e-12);

/// |d/dt H(cos t, sin t)|. Throws InputError for non-conformal coefficients.
double boundary_speed(const AffineCoefficients& c, double t);

enum class EqualityKind { strict, equality };

struct EqualityOptions {
  double eq_tol = 1e-6;       ///< relative to R
  double affine_tol = 1e-10;  ///< constant-density and constant-coefficient tolerance
  double equa_tol = 1e-8;     ///< circle means vs center value after recentering
};

struct EqualityVerdict {
  EqualityKind kind = EqualityKind::strict;
  std::optional<Complex> witness;  ///< set for equality
  double margin = 0.0;             ///< R - sup
  /// Density of F o m_w is constant over the grid, w the Schwarz argmax.
  bool affine_detected = false;
  double density_deviation = 0.0;
  /// p and q have no coefficient of index >= 1 above affine_tol.
  bool constant_coefficients = false;
  /// Circle means of the recentered density equal its center value (equality only).
  std::optional<bool> mean_value_equality;
  double mean_value_gap = 0.0;
  SchwarzReport schwarz;
  EqualityOptions options;
};

EqualityVerdict equality_certificate(const Surface& s, const PolarGrid& grid,
                                     const QuadratureSpec& quad = {},
                                     const EqualityOptions& options = {});

}  // namespace minsurf
