#pragma once

#include <optional>
#include <string>
#include <utility>

#include "minsurf/series.hpp"

namespace minsurf {

/// A point or vector in R^3; (u, v, t) for surface coordinates.
struct Point3 {
  double u = 0.0;
  double v = 0.0;
  double t = 0.0;

  double norm() const noexcept;
  double dot(const Point3& o) const noexcept { return u * o.u + v * o.v + t * o.t; }
  Point3 operator+(const Point3& o) const noexcept { return {u + o.u, v + o.v, t + o.t}; }
  Point3 operator-(const Point3& o) const noexcept { return {u - o.u, v - o.v, t - o.t}; }
  Point3 operator*(double s) const noexcept { return {u * s, v * s, t * s}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Tangent pair (F_x, F_y) at a parameter point.
struct Tangents {
  Point3 fx;
  Point3 fy;
};

/// Polar sampling of the disk |z| <= r_max: the center plus n_r rings at
/// radii r_max*i/n_r (i = 1..n_r), each with n_theta equispaced angles.
struct PolarGrid {
  int n_r = 50;
  int n_theta = 64;
  double r_max = 0.95;

  /// Throws InputError unless n_r, n_theta > 0 and 0 < r_max < 1.
  void validate() const;
  double radius(int i) const noexcept { return r_max * static_cast<double>(i) / n_r; }
  double angle(int j) const noexcept;
  Complex point(int i, int j) const noexcept;
  int point_count() const noexcept { return 1 + n_r * n_theta; }
};

struct IsothermalReport {
  double max_norm_gap = 0.0;    ///< max ||F_x| - |F_y||
  double max_dot = 0.0;         ///< max |<F_x, F_y>|
  double max_lambda_gap = 0.0;  ///< max ||F_x| - lambda|
};

/// Throws InputError when |z| exceeds 1 beyond rounding slack.
void require_closed_disk(Complex z);

/// Minimal surface built from Weierstrass data (p, q):
///   h' = p, g' = p q^2,
///   phi1 = h' + g', phi2 = -i (h' - g'), phi3 = 2 i p q,
/// with coordinates x_k = Re int_0^z phi_k, so F(0) = 0.
class Surface {
 public:
  static Surface from_pq(PowerSeries p, PowerSeries q, std::optional<std::string> name = {});

  const PowerSeries& p() const noexcept { return p_; }
  const PowerSeries& q() const noexcept { return q_; }
  const PowerSeries& hprime() const noexcept { return hprime_; }
  const PowerSeries& gprime() const noexcept { return gprime_; }
  const PowerSeries& hsecond() const noexcept { return hsecond_; }
  const PowerSeries& gsecond() const noexcept { return gsecond_; }
  const PowerSeries& phi1() const noexcept { return phi_[0]; }
  const PowerSeries& phi2() const noexcept { return phi_[1]; }
  const PowerSeries& phi3() const noexcept { return phi_[2]; }
  const PowerSeries& Phi1() const noexcept { return primitive_[0]; }
  const PowerSeries& Phi2() const noexcept { return primitive_[1]; }
  const PowerSeries& Phi3() const noexcept { return primitive_[2]; }
  const std::optional<std::string>& name() const noexcept { return name_; }

  Point3 position(Complex z) const;
  /// lambda = |p| (1 + |q|^2) = |h'| + |g'|. Zero at branch points.
  double conformal_density(Complex z) const;
  Tangents tangents(Complex z) const;

 private:
  Surface() = default;

  PowerSeries p_, q_, hprime_, gprime_, hsecond_, gsecond_;
  PowerSeries phi_[3];
  PowerSeries primitive_[3];
  std::optional<std::string> name_;
};

IsothermalReport isothermal_report(const Surface& s, const PolarGrid& g);

/// phi1^2 + phi2^2 + phi3^2, identically zero for valid Weierstrass data.
PowerSeries sum_of_squares_residual(const Surface& s);

}  // namespace minsurf
