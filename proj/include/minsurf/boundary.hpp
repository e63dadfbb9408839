#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "minsurf/series.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// Anything that reports a conformal density lambda(z) on the closed disk.
template <class S>
concept DensitySurface = requires(const S& s, Complex z) {
  { s.conformal_density(z) } -> std::convertible_to<double>;
};

/// Density surfaces that also expose tangent vectors.
template <class S>
concept TangentSurface = DensitySurface<S> && requires(const S& s, Complex z) {
  { s.tangents(z) } -> std::convertible_to<Tangents>;
};

using DiskField = std::function<double(Complex)>;

/// Composite Gauss-Legendre on [0, 2pi], doubling the panel count until two
/// successive estimates differ by at most max(abs_tol, rel_tol*(1+|value|)).
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_panels = 1 << 16;
  int nodes_per_panel = 16;

  void validate() const;
};

/// Integral of f over [0, 2pi]. Throws QuadratureError on non-convergence.
double integrate_periodic(const std::function<double(double)>& f, const QuadratureSpec& quad);

/// Arc-length integral of f over the circle |z| = r: int_0^{2pi} f(r e^{it}) r dt.
double circle_integral(const DiskField& f, double r, const QuadratureSpec& quad);

/// l_r: length of the image of the circle |z| = r, the integral of lambda along it.
template <DensitySurface S>
double circle_length(const S& s, double r, const QuadratureSpec& quad = {}) {
  return circle_integral([&s](Complex z) { return s.conformal_density(z); }, r, quad);
}

struct ProfilePoint {
  double r = 0.0;
  double mean_ratio = 0.0;  ///< l_r / (2 pi r)
};

std::vector<ProfilePoint> mean_ratio_profile(const DiskField& density, std::span<const double> radii,
                                             const QuadratureSpec& quad = {});

template <DensitySurface S>
std::vector<ProfilePoint> mean_ratio_profile(const S& s, std::span<const double> radii,
                                             const QuadratureSpec& quad = {}) {
  return mean_ratio_profile(DiskField([&s](Complex z) { return s.conformal_density(z); }), radii,
                            quad);
}

/// Largest drop between consecutive profile values (0 for a nondecreasing profile).
double profile_max_decrease(std::span<const ProfilePoint> profile);

struct SchwarzReport {
  double R = 0.0;                ///< l_1 / 2pi
  double boundary_length = 0.0;  ///< l_1
  double sup_value = 0.0;        ///< sup of lambda(z)(1-|z|^2) over the polished grid
  Complex argmax{};
  double ratio = 0.0;  ///< sup_value / R, 0 when R = 0
  bool holds = true;
  bool equality_within_tol = false;
  bool degenerate = false;  ///< R == 0 (p identically zero on the circle)
  PolarGrid grid;
  QuadratureSpec quad;
  double eq_tol = 1e-6;
};

/// Sup of lambda(z)(1-|z|^2) by grid sweep plus golden-section polish along the
/// ray and the angle of the best sample. Ties keep the sample with smallest |z|.
struct SupSearch {
  double value = 0.0;
  Complex argmax{};
};
SupSearch weighted_density_sup(const DiskField& density, const PolarGrid& grid);

SchwarzReport schwarz_report(const DiskField& density, const PolarGrid& grid,
                             const QuadratureSpec& quad = {}, double eq_tol = 1e-6);

template <DensitySurface S>
SchwarzReport schwarz_report(const S& s, const PolarGrid& grid, const QuadratureSpec& quad = {},
                             double eq_tol = 1e-6) {
  return schwarz_report(DiskField([&s](Complex z) { return s.conformal_density(z); }), grid, quad,
                        eq_tol);
}

/// Max over `samples` boundary angles of ||F_t(e^{it})| - lambda(e^{it})| with
/// F_t = -sin(t) F_x + cos(t) F_y; ties the density-based l_1 to the image-curve speed.
template <TangentSurface S>
double boundary_speed_gap(const S& s, int samples = 256) {
  double gap = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples;
    const Complex z = std::polar(1.0, t);
    const Tangents tg = s.tangents(z);
    const Point3 ft = tg.fx * (-std::sin(t)) + tg.fy * std::cos(t);
    gap = std::max(gap, std::abs(ft.norm() - s.conformal_density(z)));
  }
  return gap;
}

}  // namespace minsurf
