#include "minsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kDiskSlack = 1e-12;

}  // namespace

double Point3::norm() const noexcept { return std::sqrt(u * u + v * v + t * t); }

void PolarGrid::validate() const {
  if (n_r <= 0 || n_theta <= 0) {
    throw InputError("polar grid needs positive n_r and n_theta");
  }
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw InputError("polar grid r_max must lie in (0, 1)");
  }
}

double PolarGrid::angle(int j) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / n_theta;
}

Complex PolarGrid::point(int i, int j) const noexcept { return std::polar(radius(i), angle(j)); }

void require_closed_disk(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InputError("parameter point is not finite");
  }
  if (std::abs(z) > 1.0 + kDiskSlack) {
    throw InputError("parameter point lies outside the closed unit disk");
  }
}

Surface Surface::from_pq(PowerSeries p, PowerSeries q, std::optional<std::string> name) {
  Surface s;
  s.p_ = std::move(p);
  s.q_ = std::move(q);
  s.name_ = std::move(name);
  s.hprime_ = s.p_;
  s.gprime_ = s.p_ * s.q_ * s.q_;
  s.hsecond_ = s.hprime_.derivative();
  s.gsecond_ = s.gprime_.derivative();
  s.phi_[0] = s.hprime_ + s.gprime_;
  s.phi_[1] = -kI * (s.hprime_ - s.gprime_);
  s.phi_[2] = (2.0 * kI) * (s.p_ * s.q_);
  for (int k = 0; k < 3; ++k) {
    s.primitive_[k] = s.phi_[k].antiderivative();
  }
  return s;
}

Point3 Surface::position(Complex z) const {
  require_closed_disk(z);
  return {Phi1()(z).real(), Phi2()(z).real(), Phi3()(z).real()};
}

double Surface::conformal_density(Complex z) const {
  require_closed_disk(z);
  return std::abs(p_(z)) * (1.0 + std::norm(q_(z)));
}

Tangents Surface::tangents(Complex z) const {
  require_closed_disk(z);
  const Complex a = phi1()(z);
  const Complex b = phi2()(z);
  const Complex c = phi3()(z);
  // d/dx Re Phi = Re phi, d/dy Re Phi = Re(i phi) = -Im phi.
  return {{a.real(), b.real(), c.real()}, {-a.imag(), -b.imag(), -c.imag()}};
}

IsothermalReport isothermal_report(const Surface& s, const PolarGrid& g) {
  g.validate();
  IsothermalReport rep;
  auto visit = [&](Complex z) {
    const Tangents tg = s.tangents(z);
    const double nx = tg.fx.norm();
    const double ny = tg.fy.norm();
    rep.max_norm_gap = std::max(rep.max_norm_gap, std::abs(nx - ny));
    rep.max_dot = std::max(rep.max_dot, std::abs(tg.fx.dot(tg.fy)));
    rep.max_lambda_gap = std::max(rep.max_lambda_gap, std::abs(nx - s.conformal_density(z)));
  };
  visit(Complex{});
  for (int i = 1; i <= g.n_r; ++i) {
    for (int j = 0; j < g.n_theta; ++j) {
      visit(g.point(i, j));
    }
  }
  return rep;
}

PowerSeries sum_of_squares_residual(const Surface& s) {
  // One extended-precision accumulation over all three squares, rounded once.
  using Wide = std::complex<long double>;
  const PowerSeries* phis[] = {&s.phi1(), &s.phi2(), &s.phi3()};
  int degree = 0;
  for (const PowerSeries* phi : phis) {
    degree = std::max(degree, 2 * phi->degree());
  }
  std::vector<Wide> acc(static_cast<std::size_t>(degree) + 1);
  for (const PowerSeries* phi : phis) {
    const auto& c = phi->coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        acc[i + j] += Wide(c[i]) * Wide(c[j]);
      }
    }
  }
  std::vector<Complex> out(acc.size());
  std::transform(acc.begin(), acc.end(), out.begin(), [](Wide w) { return Complex(w); });
  return PowerSeries(std::move(out));
}

}  // namespace minsurf
