#include "minsurf/equality.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "minsurf/errors.hpp"
#include "minsurf/mobius.hpp"

namespace minsurf {

namespace {

bool has_constant_coefficients(const PowerSeries& s, double tol) {
  for (int k = 1; k <= s.degree(); ++k) {
    if (std::abs(s[k]) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

Surface affine_surface(Complex p0, Complex q0) {
  return Surface::from_pq(PowerSeries::constant(p0), PowerSeries::constant(q0), "affine");
}

AffineCoefficients affine_coefficients(Complex p0, Complex q0) {
  const Tangents tg = affine_surface(p0, q0).tangents(Complex{});
  return {tg.fx.u, tg.fy.u, tg.fx.v, tg.fy.v, tg.fx.t, tg.fy.t};
}

ConformalityCheck conformality_check(const AffineCoefficients& c, double tol) {
  ConformalityCheck out;
  const Point3 x = c.column_x();
  const Point3 y = c.column_y();
  out.norm_residual = std::abs(x.dot(x) - y.dot(y));
  out.ortho_residual = std::abs(x.dot(y));
  out.pass = out.norm_residual <= tol && out.ortho_residual <= tol;
  return out;
}

double boundary_speed(const AffineCoefficients& c, double t) {
  const double scale = std::max(1.0, c.column_x().dot(c.column_x()));
  if (!conformality_check(c, 1e-10 * scale).pass) {
    throw InputError("boundary speed requires conformal affine coefficients");
  }
  return (c.column_x() * (-std::sin(t)) + c.column_y() * std::cos(t)).norm();
}

EqualityVerdict equality_certificate(const Surface& s, const PolarGrid& grid,
                                     const QuadratureSpec& quad, const EqualityOptions& options) {
  EqualityVerdict v;
  v.options = options;
  v.schwarz = schwarz_report(s, grid, quad, options.eq_tol);
  v.margin = v.schwarz.R - v.schwarz.sup_value;
  v.constant_coefficients = has_constant_coefficients(s.p(), options.affine_tol) &&
                            has_constant_coefficients(s.q(), options.affine_tol);

  const DerivedSurface recentered = precompose(s, DiskMobius(v.schwarz.argmax));
  const double center = recentered.conformal_density(Complex{});
  v.density_deviation = 0.0;
  for (int i = 1; i <= grid.n_r; ++i) {
    for (int j = 0; j < grid.n_theta; ++j) {
      v.density_deviation = std::max(
          v.density_deviation, std::abs(recentered.conformal_density(grid.point(i, j)) - center));
    }
  }
  v.affine_detected =
      center > 0.0 && v.density_deviation <= options.affine_tol * std::max(1.0, center);

  if (v.schwarz.equality_within_tol) {
    v.kind = EqualityKind::equality;
    v.witness = v.schwarz.argmax;
    constexpr std::array<double, 9> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const auto profile = mean_ratio_profile(recentered, radii, quad);
    v.mean_value_gap = 0.0;
    for (const ProfilePoint& pt : profile) {
      v.mean_value_gap = std::max(v.mean_value_gap, std::abs(pt.mean_ratio - center));
    }
    v.mean_value_equality = v.mean_value_gap <= options.equa_tol;
  } else {
    v.kind = EqualityKind::strict;
  }
  return v;
}

}  // namespace minsurf
