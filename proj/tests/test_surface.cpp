#include <cmath>
#include <random>

#include "doctest.h"
#include "minsurf/errors.hpp"
#include "minsurf/surface.hpp"
#include "test_support.hpp"

using namespace minsurf;
using minsurf::testing::enneper;
using minsurf::testing::planar;

namespace {
constexpr Complex I{0.0, 1.0};
}

TEST_CASE("from_pq derived fields") {
  const Surface e = enneper();
  CHECK(e.phi1() == PowerSeries{1.0, 0.0, 1.0});
  CHECK(e.phi2() == PowerSeries{-I, 0.0, I});
  CHECK(e.phi3() == PowerSeries{0.0, 2.0 * I});
  CHECK(e.hprime() == e.p());
  CHECK(e.gprime() == e.p() * e.q() * e.q());

  const Surface pl = planar();
  CHECK(pl.phi1() == PowerSeries{1.0});
  CHECK(pl.phi2() == PowerSeries{-I});
  CHECK(pl.phi3() == PowerSeries{0.0});

  const Surface s = Surface::from_pq(PowerSeries{2.0}, PowerSeries{0.5 * I});
  CHECK(s.gprime() == PowerSeries{-0.5});
  CHECK(s.phi3() == PowerSeries{-2.0});
}

TEST_CASE("position") {
  const Point3 a = planar().position({0.3, 0.4});
  CHECK(a.u == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(a.v == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(a.t == 0.0);

  // Closed forms at real z: z + z^3/3, -i(z - z^3/3), i z^2.
  const Point3 b = enneper().position(0.5);
  CHECK(b.u == doctest::Approx(0.5 + 0.125 / 3.0).epsilon(1e-15));
  CHECK(std::abs(b.v) < 1e-16);
  CHECK(std::abs(b.t) < 1e-16);

  CHECK(enneper().position(0.0) == Point3{});
  CHECK_THROWS_AS(enneper().position({0.8, 0.7}), InputError);
}

TEST_CASE("conformal density") {
  CHECK(enneper().conformal_density(0.5) == doctest::Approx(1.25));
  CHECK(enneper().conformal_density(0.0) == 1.0);
  CHECK(planar().conformal_density({-0.2, 0.9}) == 1.0);
  CHECK_THROWS_AS(planar().conformal_density(1.1), InputError);
  // Branch point: p(0) = 0.
  CHECK(Surface::from_pq(PowerSeries{0.0, 1.0}, PowerSeries{1.0}).conformal_density(0.0) == 0.0);
}

TEST_CASE("tangents") {
  const Tangents pl = planar().tangents({0.1, -0.6});
  CHECK(pl.fx == Point3{1.0, 0.0, 0.0});
  CHECK(pl.fy == Point3{0.0, 1.0, 0.0});

  const Tangents e0 = enneper().tangents(0.0);
  CHECK(e0.fx == Point3{1.0, 0.0, 0.0});
  CHECK(e0.fy == Point3{0.0, 1.0, 0.0});

  const Tangents e = enneper().tangents(0.5);
  CHECK(e.fx.norm() == doctest::Approx(1.25));
  CHECK(e.fy.norm() == doctest::Approx(1.25));
}

TEST_CASE("tangents match finite differences of position") {
  std::mt19937_64 rng(21);
  const double h = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 5);
    const Complex z = minsurf::testing::random_point(rng, 0.9);
    const Tangents tg = s.tangents(z);
    const Point3 fx = (s.position(z + h) - s.position(z - h)) * (0.5 / h);
    const Point3 fy = (s.position(z + h * I) - s.position(z - h * I)) * (0.5 / h);
    const double scale = std::max(1.0, tg.fx.norm());
    CHECK((fx - tg.fx).norm() < 1e-7 * scale);
    CHECK((fy - tg.fy).norm() < 1e-7 * scale);
  }
}

TEST_CASE("isothermal report") {
  const IsothermalReport pl = isothermal_report(planar(), {10, 16, 0.9});
  CHECK(pl.max_norm_gap < 1e-14);
  CHECK(pl.max_dot < 1e-14);
  CHECK(pl.max_lambda_gap < 1e-14);

  const IsothermalReport e = isothermal_report(enneper(), {50, 64, 0.95});
  CHECK(e.max_norm_gap < 1e-10);
  CHECK(e.max_dot < 1e-10);
  CHECK(e.max_lambda_gap < 1e-10);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Surface s = Surface::from_pq(minsurf::testing::random_series(rng, 5),
                                       minsurf::testing::random_series(rng, 5));
    const IsothermalReport r = isothermal_report(s, {20, 32, 0.95});
    CHECK(r.max_norm_gap < 1e-9);
    CHECK(r.max_dot < 1e-9);
    CHECK(r.max_lambda_gap < 1e-9);
  }

  CHECK_THROWS_AS(isothermal_report(planar(), {10, 16, 1.0}), InputError);
  CHECK_THROWS_AS(isothermal_report(planar(), {0, 16, 0.5}), InputError);
}

TEST_CASE("sum of squares vanishes") {
  const PowerSeries e = sum_of_squares_residual(enneper());
  for (const Complex c : e.coeffs()) {
    CHECK(std::abs(c) == 0.0);
  }
  const PowerSeries pl = sum_of_squares_residual(planar());
  for (const Complex c : pl.coeffs()) {
    CHECK(std::abs(c) == 0.0);
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 6);
    const PowerSeries residual = sum_of_squares_residual(s);
    const std::vector<double> scale = minsurf::testing::sum_of_squares_scale(s);
    for (int n = 0; n <= residual.degree(); ++n) {
      CHECK(std::abs(residual[n]) <= 1e-15 * std::max(1.0, scale[n]));
    }
  }
}

TEST_CASE("density agrees with |h'|+|g'| and the first fundamental form") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 6);
    const Complex z = minsurf::testing::random_point(rng, 1.0);
    const double lambda = s.conformal_density(z);
    const double hg = std::abs(s.hprime()(z)) + std::abs(s.gprime()(z));
    const double fff = 0.5 * (std::norm(s.phi1()(z)) + std::norm(s.phi2()(z)) + std::norm(s.phi3()(z)));
    const double scale = std::max(1.0, lambda * lambda);
    CHECK(std::abs(lambda - hg) <= 1e-12 * scale);
    CHECK(std::abs(lambda * lambda - fff) <= 1e-12 * scale);
  }
}

TEST_CASE("position is Lipschitz with the density along segments") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 5);
    const Complex z = minsurf::testing::random_point(rng, 0.95);
    const Complex w = minsurf::testing::random_point(rng, 0.95);
    double lambda_max = 0.0;
    for (int k = 0; k <= 400; ++k) {
      lambda_max = std::max(lambda_max, s.conformal_density(z + (w - z) * (k / 400.0)));
    }
    const double dist = (s.position(z) - s.position(w)).norm();
    CHECK(dist <= lambda_max * std::abs(z - w) * (1.0 + 1e-3) + 1e-14);
  }
}
