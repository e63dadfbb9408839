#include "minsurf/subharmonic.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kSingularRelTol = 1e-12;

double closed_form_term(const PowerSeries& first, const PowerSeries& second, Complex z) {
  if (first.is_zero()) {
    return 0.0;
  }
  const double w1 = std::abs(first(z));
  if (w1 <= kSingularRelTol * first.max_abs_coeff()) {
    throw SingularPointError("h' or g' vanishes at the evaluation point");
  }
  return std::norm(second(z)) / w1;
}

bool near_zero(const PowerSeries& first, const PowerSeries& second, Complex z, double radius) {
  if (first.is_zero()) {
    return false;
  }
  const double w1 = std::abs(first(z));
  const double w2 = std::abs(second(z));
  if (w2 == 0.0) {
    return w1 <= kSingularRelTol * first.max_abs_coeff();
  }
  return w1 / w2 < radius;
}

}  // namespace

DiskField density_field(const Surface& s) {
  return [&s](Complex z) { return std::abs(s.hprime()(z)) + std::abs(s.gprime()(z)); };
}

double fd_laplacian(const DiskField& f, Complex z, double step) {
  if (!(step > 0.0)) {
    throw InputError("finite-difference step must be positive");
  }
  const Complex h{step, 0.0};
  const Complex ih{0.0, step};
  for (Complex w : {z + h, z - h, z + ih, z - ih}) {
    if (!(std::abs(w) < 1.0)) {
      throw StencilError("Laplacian stencil leaves the open unit disk");
    }
  }
  return (f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z)) / (step * step);
}

double laplacian_closed_form(const Surface& s, Complex z) {
  return closed_form_term(s.hprime(), s.hsecond(), z) + closed_form_term(s.gprime(), s.gsecond(), z);
}

double laplacian_identity_residual(const Surface& s, Complex z, double step) {
  const double closed = laplacian_closed_form(s, z);
  return std::abs(fd_laplacian(density_field(s), z, step) - closed);
}

RieszReport riesz_balance(const Surface& s, double r, const PolarGrid& grid, double step,
                          const QuadratureSpec& quad) {
  if (!(r > 0.0 && r < 1.0)) {
    throw InputError("Riesz balance radius must lie in (0, 1)");
  }
  if (!(step > 0.0) || !(r + step < 1.0)) {
    throw StencilError("Riesz balance needs step > 0 and r + step < 1");
  }
  if (grid.n_r <= 0 || grid.n_theta <= 0) {
    throw InputError("Riesz balance grid needs positive n_r and n_theta");
  }
  const DiskField u = density_field(s);

  RieszReport rep;
  rep.r = r;
  rep.n_r = grid.n_r;
  rep.n_theta = grid.n_theta;
  rep.step = step;
  rep.circle_mean_minus_center =
      circle_integral(u, r, quad) / (2.0 * std::numbers::pi * r) - u(Complex{});

  const double d_rho = r / grid.n_r;
  const double d_theta = 2.0 * std::numbers::pi / grid.n_theta;
  // laplacians[i][j] is empty for excluded nodes.
  std::vector<std::vector<std::optional<double>>> laplacians(
      grid.n_r, std::vector<std::optional<double>>(grid.n_theta));
  for (int i = 0; i < grid.n_r; ++i) {
    const double rho = (i + 0.5) * d_rho;
    for (int j = 0; j < grid.n_theta; ++j) {
      const Complex z = std::polar(rho, (j + 0.5) * d_theta);
      if (near_zero(s.hprime(), s.hsecond(), z, 2.0 * step) ||
          near_zero(s.gprime(), s.gsecond(), z, 2.0 * step)) {
        ++rep.excluded_points;
        continue;
      }
      laplacians[i][j] = fd_laplacian(u, z, step);
    }
  }

  double mass = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    const double rho = (i + 0.5) * d_rho;
    const double weight = std::log(r / rho) * rho * d_rho * d_theta;
    for (int j = 0; j < grid.n_theta; ++j) {
      std::optional<double> value = laplacians[i][j];
      for (int offset = 1; !value && offset < grid.n_r; ++offset) {
        if (i + offset < grid.n_r && laplacians[i + offset][j]) {
          value = laplacians[i + offset][j];
        } else if (i - offset >= 0 && laplacians[i - offset][j]) {
          value = laplacians[i - offset][j];
        }
      }
      mass += weight * value.value_or(0.0);
    }
  }
  rep.weighted_mass = mass / (2.0 * std::numbers::pi);
  rep.residual = std::abs(rep.circle_mean_minus_center - rep.weighted_mass);
  return rep;
}

}  // namespace minsurf
