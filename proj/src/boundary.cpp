#include "minsurf/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guess.
GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

double composite(const std::function<double(double)>& f, const GaussRule& rule, int panels) {
  const double width = kTwoPi / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    sum += panel;
  }
  return 0.5 * width * sum;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double& best_x) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-12; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  best_x = fc >= fd ? c : d;
  return std::max(fc, fd);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw InputError("quadrature tolerances must be positive");
  }
  if (max_panels < 1 || nodes_per_panel < 1) {
    throw InputError("quadrature needs max_panels >= 1 and nodes_per_panel >= 1");
  }
}

double integrate_periodic(const std::function<double(double)>& f, const QuadratureSpec& quad) {
  quad.validate();
  const GaussRule rule = gauss_legendre(quad.nodes_per_panel);
  int panels = std::min(4, quad.max_panels);
  double previous = std::nan("");
  double last = composite(f, rule, panels);
  while (panels <= quad.max_panels / 2) {
    panels *= 2;
    previous = last;
    last = composite(f, rule, panels);
    if (std::abs(last - previous) <= std::max(quad.abs_tol, quad.rel_tol * (1.0 + std::abs(last)))) {
      return last;
    }
  }
  throw QuadratureError("circle quadrature did not converge within " +
                            std::to_string(quad.max_panels) + " panels",
                        previous, last, panels);
}

double circle_integral(const DiskField& f, double r, const QuadratureSpec& quad) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw InputError("circle radius must lie in (0, 1]");
  }
  return integrate_periodic([&](double t) { return f(std::polar(r, t)) * r; }, quad);
}

std::vector<ProfilePoint> mean_ratio_profile(const DiskField& density, std::span<const double> radii,
                                             const QuadratureSpec& quad) {
  std::vector<ProfilePoint> out;
  out.reserve(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    if (!(r > 0.0 && r <= 1.0)) {
      throw InputError("profile radii must lie in (0, 1]");
    }
    if (k > 0 && !(r > radii[k - 1])) {
      throw InputError("profile radii must be strictly increasing");
    }
    out.push_back({r, circle_integral(density, r, quad) / (kTwoPi * r)});
  }
  return out;
}

double profile_max_decrease(std::span<const ProfilePoint> profile) {
  double drop = 0.0;
  for (std::size_t k = 1; k < profile.size(); ++k) {
    drop = std::max(drop, profile[k - 1].mean_ratio - profile[k].mean_ratio);
  }
  return drop;
}

SupSearch weighted_density_sup(const DiskField& density, const PolarGrid& grid) {
  grid.validate();
  auto weighted = [&](Complex z) { return density(z) * (1.0 - std::norm(z)); };

  SupSearch best{weighted(Complex{}), Complex{}};
  int best_i = 0;
  int best_j = 0;
  for (int i = 1; i <= grid.n_r; ++i) {
    for (int j = 0; j < grid.n_theta; ++j) {
      const double w = weighted(grid.point(i, j));
      if (w > best.value) {
        best = {w, grid.point(i, j)};
        best_i = i;
        best_j = j;
      }
    }
  }

  // Ray direction for a center maximum: the best sample on the first ring.
  double theta = grid.angle(best_j);
  if (best_i == 0) {
    double ring_best = -1.0;
    for (int j = 0; j < grid.n_theta; ++j) {
      const double w = weighted(grid.point(1, j));
      if (w > ring_best) {
        ring_best = w;
        theta = grid.angle(j);
      }
    }
  }
  double radius = grid.radius(best_i);
  const double r_lo = grid.radius(std::max(best_i - 1, 0));
  const double r_hi = grid.radius(std::min(best_i + 1, grid.n_r));
  const double dtheta = 2.0 * std::numbers::pi / grid.n_theta;
  const double t_lo = theta - dtheta;
  const double t_hi = theta + dtheta;

  for (int round = 0; round < 8; ++round) {
    const double before = best.value;
    double r_new = radius;
    const double along_ray =
        golden_max([&](double r) { return weighted(std::polar(r, theta)); }, r_lo, r_hi, r_new);
    if (along_ray > best.value) {
      best = {along_ray, std::polar(r_new, theta)};
      radius = r_new;
    }
    if (radius == 0.0) {
      break;
    }
    double t_new = theta;
    const double along_arc =
        golden_max([&](double t) { return weighted(std::polar(radius, t)); }, t_lo, t_hi, t_new);
    if (along_arc > best.value) {
      best = {along_arc, std::polar(radius, t_new)};
      theta = t_new;
    }
    if (round > 0 && best.value <= before) {
      break;
    }
  }
  return best;
}

SchwarzReport schwarz_report(const DiskField& density, const PolarGrid& grid,
                             const QuadratureSpec& quad, double eq_tol) {
  grid.validate();
  quad.validate();
  if (!(eq_tol >= 0.0)) {
    throw InputError("equality tolerance must be nonnegative");
  }
  SchwarzReport rep;
  rep.grid = grid;
  rep.quad = quad;
  rep.eq_tol = eq_tol;
  rep.boundary_length = circle_integral(density, 1.0, quad);
  rep.R = rep.boundary_length / kTwoPi;

  const SupSearch sup = weighted_density_sup(density, grid);
  rep.sup_value = sup.value;
  rep.argmax = sup.argmax;

  if (rep.R <= 0.0) {
    rep.degenerate = true;
    rep.ratio = 0.0;
    rep.holds = true;
    rep.equality_within_tol = false;
    return rep;
  }
  rep.ratio = rep.sup_value / rep.R;
  rep.holds = rep.sup_value <= rep.R * (1.0 + quad.rel_tol);
  rep.equality_within_tol = std::abs(rep.sup_value - rep.R) <= rep.R * eq_tol;
  return rep;
}

}  // namespace minsurf
