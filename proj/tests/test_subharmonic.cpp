#include <cmath>
#include <random>

#include "doctest.h"
#include "minsurf/errors.hpp"
#include "minsurf/subharmonic.hpp"
#include "test_support.hpp"

using namespace minsurf;
using minsurf::testing::enneper;
using minsurf::testing::planar;

TEST_CASE("fd_laplacian on closed forms") {
  const DiskField sq = [](Complex z) { return std::norm(z); };
  CHECK(std::abs(fd_laplacian(sq, {0.2, -0.4}, 1e-3) - 4.0) < 1e-6);
  const DiskField re = [](Complex z) { return z.real(); };
  CHECK(std::abs(fd_laplacian(re, {0.6, 0.1}, 1e-3)) < 1e-8);
  // Enneper: u = 1 + |z|^2.
  CHECK(std::abs(fd_laplacian(density_field(enneper()), 0.5, 1e-3) - 4.0) < 1e-6);

  CHECK_THROWS_AS(fd_laplacian(sq, 0.9995, 1e-3), StencilError);
  CHECK_THROWS_AS(fd_laplacian(sq, 0.0, 0.0), InputError);
}

TEST_CASE("Laplacian identity residual") {
  CHECK(laplacian_closed_form(enneper(), 0.5) == doctest::Approx(4.0));
  CHECK(laplacian_identity_residual(enneper(), 0.5, 1e-3) < 1e-4);
  CHECK(laplacian_identity_residual(planar(), 0.3, 1e-3) < 1e-8);

  // h' = 1 + z, g' = 0: Delta|1+z| = 1/|1+z|, which is 1 at the origin.
  const Surface lin = Surface::from_pq(PowerSeries{1.0, 1.0}, PowerSeries{0.0});
  CHECK(laplacian_closed_form(lin, 0.0) == doctest::Approx(1.0));
  CHECK(laplacian_identity_residual(lin, 0.0, 1e-3) < 1e-4);

  CHECK_THROWS_AS(laplacian_identity_residual(enneper(), 0.0, 1e-3), SingularPointError);
  const Surface branch = Surface::from_pq(PowerSeries{-0.5, 1.0}, PowerSeries{0.2});
  CHECK_THROWS_AS(laplacian_identity_residual(branch, 0.5, 1e-3), SingularPointError);
}

TEST_CASE("Laplacian identity on random data away from zeros") {
  std::mt19937_64 rng(51);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 4);
    const Complex z = minsurf::testing::random_point(rng, 0.8);
    const double hp = std::abs(s.hprime()(z));
    const double gp = std::abs(s.gprime()(z));
    if (hp < 0.2 || (!s.gprime().is_zero() && gp < 0.2)) {
      continue;
    }
    ++checked;
    const double closed = laplacian_closed_form(s, z);
    CHECK(laplacian_identity_residual(s, z, 1e-3) < 1e-3 * std::max(1.0, closed));
  }
  CHECK(checked == 50);
}

TEST_CASE("density is numerically subharmonic") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const Surface s = minsurf::testing::random_surface(rng, 5);
    const Complex z = minsurf::testing::random_point(rng, 0.9);
    if (std::abs(s.hprime()(z)) < 0.05) {
      continue;
    }
    CHECK(fd_laplacian(density_field(s), z, 1e-3) >= -1e-6);
  }
}

TEST_CASE("affine data has vanishing Riesz measure") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Surface s = Surface::from_pq(minsurf::testing::random_series(rng, 0),
                                       minsurf::testing::random_series(rng, 0));
    for (int k = 0; k < 10; ++k) {
      CHECK(std::abs(fd_laplacian(density_field(s), minsurf::testing::random_point(rng, 0.95),
                                  1e-3)) < 1e-8);
    }
  }
}

TEST_CASE("Riesz balance closed forms") {
  // LHS = r^2 and RHS = 4 int_0^r log(r/s) s ds = r^2.
  const RieszReport half = riesz_balance(enneper(), 0.5);
  CHECK(half.circle_mean_minus_center == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(std::abs(half.weighted_mass - 0.25) < 1e-4);
  CHECK(half.residual < 1e-4);
  CHECK(half.n_r == 200);
  CHECK(half.n_theta == 256);

  const RieszReport far = riesz_balance(enneper(), 0.9);
  CHECK(std::abs(far.circle_mean_minus_center - 0.81) < 5e-4);
  CHECK(std::abs(far.weighted_mass - 0.81) < 5e-4);

  const RieszReport flat = riesz_balance(planar(), 0.7, {20, 32, 0.95});
  CHECK(std::abs(flat.circle_mean_minus_center) < 1e-14);
  CHECK(std::abs(flat.weighted_mass) < 1e-8);
  CHECK(flat.excluded_points == 0);
}

TEST_CASE("Riesz balance converges under refinement") {
  const RieszReport coarse = riesz_balance(enneper(), 0.5, {100, 128, 0.95}, 2e-3);
  const RieszReport fine = riesz_balance(enneper(), 0.5, {200, 256, 0.95}, 1e-3);
  CHECK(fine.residual <= 0.5 * coarse.residual);
}

TEST_CASE("Riesz balance excludes stencils near zeros") {
  // g' = z^2 vanishes at the origin; the innermost rings are excluded and refilled.
  const RieszReport rep = riesz_balance(enneper(), 0.3);
  CHECK(rep.excluded_points > 0);
  CHECK(rep.residual < 5e-4);

  // A simple zero of p placed on a midpoint node (ring 66, angle 10 of 200 x 256
  // at r = 0.6): that node is excluded and the balance still holds coarsely.
  const Complex zero = std::polar(66.5 * 0.6 / 200, 10.5 * 2 * 3.141592653589793 / 256);
  const Surface s = Surface::from_pq(PowerSeries{-zero, 1.0}, PowerSeries{0.3});
  const RieszReport z = riesz_balance(s, 0.6);
  CHECK(z.excluded_points > 0);
  CHECK(z.residual < 2e-2 * z.circle_mean_minus_center);
}

TEST_CASE("Riesz balance input errors") {
  CHECK_THROWS_AS(riesz_balance(enneper(), 1.0), InputError);
  CHECK_THROWS_AS(riesz_balance(enneper(), 0.9995), StencilError);
  CHECK_THROWS_AS(riesz_balance(enneper(), 0.5, {0, 10, 0.9}), InputError);
}
