#include "minsurf/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr int kMaxReexpansionDegree = 4096;

// Taylor coefficients 0..degree of f, analytic on |z| <= rho, from 2(degree+1) samples.
std::vector<Complex> coefficients_on_circle(const std::function<Complex(Complex)>& f, double rho,
                                            int degree) {
  const int samples = 2 * (degree + 1);
  std::vector<Complex> values(samples);
  for (int j = 0; j < samples; ++j) {
    values[j] = f(std::polar(rho, 2.0 * std::numbers::pi * j / samples));
  }
  std::vector<Complex> coeffs(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    Complex acc{};
    for (int j = 0; j < samples; ++j) {
      const long long phase = (static_cast<long long>(j) * k) % samples;
      acc += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * phase / samples);
    }
    coeffs[k] = acc / static_cast<double>(samples) / std::pow(rho, k);
  }
  return coeffs;
}

}  // namespace

DiskMobius::DiskMobius(Complex a) : a_(a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0)) {
    throw InputError("Mobius parameter must satisfy |a| < 1");
  }
}

Complex DiskMobius::apply(Complex z) const { return (z + a_) / (1.0 + z * std::conj(a_)); }

Complex DiskMobius::derivative(Complex z) const {
  const Complex den = 1.0 + z * std::conj(a_);
  return (1.0 - std::norm(a_)) / (den * den);
}

Point3 DerivedSurface::position(Complex z) const {
  require_closed_disk(z);
  return base_.position(m_.apply(z));
}

double DerivedSurface::conformal_density(Complex z) const {
  require_closed_disk(z);
  return base_.conformal_density(m_.apply(z)) * std::abs(m_.derivative(z));
}

Tangents DerivedSurface::tangents(Complex z) const {
  require_closed_disk(z);
  const Tangents f = base_.tangents(m_.apply(z));
  const Complex dm = m_.derivative(z);
  const double alpha = dm.real();
  const double beta = dm.imag();
  return {f.fx * alpha + f.fy * beta, f.fx * (-beta) + f.fy * alpha};
}

DerivedSurface precompose(const Surface& s, const DiskMobius& m) { return DerivedSurface(s, m); }

double pullback_identity_residual(const Surface& s, Complex a) {
  const DerivedSurface h = precompose(s, DiskMobius(a));
  const double lhs = h.tangents(Complex{}).fx.norm();
  const double rhs = s.conformal_density(a) * (1.0 - std::norm(a));
  return std::abs(lhs - rhs);
}

Surface reexpand(const DerivedSurface& h, double tol) {
  const Surface& base = h.base();
  const DiskMobius& m = h.mobius();
  const double abs_a = std::abs(m.a());
  if (abs_a == 0.0) {
    return base;
  }
  if (!(tol > 0.0)) {
    throw InputError("re-expansion tolerance must be positive");
  }
  const auto p_h = [&](Complex z) { return base.p()(m.apply(z)) * m.derivative(z); };
  const auto q_h = [&](Complex z) { return base.q()(m.apply(z)); };

  const double rho = 0.5 * (1.0 + 1.0 / abs_a);
  double bound = 0.0;
  double scale = 1.0;
  constexpr int kProbe = 256;
  for (int j = 0; j < kProbe; ++j) {
    const double t = 2.0 * std::numbers::pi * j / kProbe;
    const Complex outer = std::polar(rho, t);
    bound = std::max({bound, std::abs(p_h(outer)), std::abs(q_h(outer))});
    const Complex unit = std::polar(1.0, t);
    scale = std::max({scale, std::abs(p_h(unit)), std::abs(q_h(unit))});
  }
  // Cauchy: |c_k| <= bound rho^-k, so the tail past N is <= bound rho^-N / (1 - 1/rho).
  const double tail_factor = bound / (1.0 - 1.0 / rho) / (tol * scale);
  const int degree =
      std::max(1, static_cast<int>(std::ceil(std::log(std::max(tail_factor, 1.0)) / std::log(rho))));
  if (degree > kMaxReexpansionDegree) {
    throw InputError("Mobius parameter too close to the unit circle for re-expansion");
  }
  return Surface::from_pq(PowerSeries(coefficients_on_circle(p_h, rho, degree)),
                          PowerSeries(coefficients_on_circle(q_h, rho, degree)), base.name());
}

}  // namespace minsurf
