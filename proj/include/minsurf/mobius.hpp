#pragma once

#include "minsurf/series.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// Disk automorphism z -> (z + a) / (1 + conj(a) z), |a| < 1.
class DiskMobius {
 public:
  explicit DiskMobius(Complex a = {});

  Complex a() const noexcept { return a_; }
  Complex apply(Complex z) const;
  Complex derivative(Complex z) const;
  /// The map with parameter -a.
  DiskMobius inverse() const { return DiskMobius(-a_); }

 private:
  Complex a_;
};

/// H = F o m, evaluated lazily by composition.
class DerivedSurface {
 public:
  DerivedSurface(Surface base, DiskMobius m) : base_(std::move(base)), m_(m) {}

  const Surface& base() const noexcept { return base_; }
  const DiskMobius& mobius() const noexcept { return m_; }

  Point3 position(Complex z) const;
  /// lambda_H(z) = lambda_F(m(z)) |m'(z)|.
  double conformal_density(Complex z) const;
  /// Chain rule: with m' = alpha + i beta, H_x = alpha F_x + beta F_y and
  /// H_y = -beta F_x + alpha F_y, all at m(z).
  Tangents tangents(Complex z) const;

 private:
  Surface base_;
  DiskMobius m_;
};

DerivedSurface precompose(const Surface& s, const DiskMobius& m);

/// ||H_x(0)| - lambda_F(a)(1 - |a|^2)| with H = F o m_a; H_x from the chain rule
/// on tangent vectors, the right side from the density formula.
double pullback_identity_residual(const Surface& s, Complex a);

/// Re-expand H into Weierstrass data p_H = (p o m) m', q_H = q o m by sampling on a
/// circle of radius rho = (1 + 1/|a|)/2 and discrete Fourier inversion. The degree is
/// chosen so the Cauchy tail bound on the closed disk falls below `tol`; rounding in
/// the samples, which grow toward the pole at -1/conj(a), sets a separate floor of
/// roughly 1e-8 relative for |a| ~ 0.7 and quartic data. The result is normalized
/// to H(0) = 0, i.e. it equals position(z) - F(a).
Surface reexpand(const DerivedSurface& h, double tol = 1e-12);

}  // namespace minsurf
