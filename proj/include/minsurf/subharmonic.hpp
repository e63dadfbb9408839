#pragma once

#include "minsurf/boundary.hpp"
#include "minsurf/series.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// u(z) = |h'(z)| + |g'(z)|, which coincides with lambda.
DiskField density_field(const Surface& s);

/// Five-point Laplacian with spacing `step`. Throws StencilError if any stencil
/// point leaves the open unit disk.
double fd_laplacian(const DiskField& f, Complex z, double step);

/// Closed form of Delta(|h'| + |g'|) = |h''|^2/|h'| + |g''|^2/|g'|. A term whose
/// derivative is the zero series contributes 0; otherwise a vanishing h' or g'
/// at z throws SingularPointError.
double laplacian_closed_form(const Surface& s, Complex z);

/// |fd_laplacian(u, z, step) - laplacian_closed_form(s, z)|.
double laplacian_identity_residual(const Surface& s, Complex z, double step = 1e-3);

struct RieszReport {
  double r = 0.0;
  double circle_mean_minus_center = 0.0;  ///< (1/2pi) int u(r e^{it}) dt - u(0)
  double weighted_mass = 0.0;             ///< (1/2pi) int_{|z|<r} log(r/|z|) Delta u dm
  double residual = 0.0;
  int excluded_points = 0;  ///< stencils too close to a zero of h' or g'
  int n_r = 0;
  int n_theta = 0;
  double step = 0.0;
};

/// Riesz representation balance for u = |h'| + |g'| on the disk |z| < r.
///
/// The left side uses the adaptive circle quadrature. The right side is a midpoint
/// rule in (rho, theta) with n_r x n_theta cells over |z| < r (grid.r_max is not
/// used; r is the outer radius), with Delta u from the five-point stencil. Midpoint
/// nodes never touch rho = 0, where the log weight is singular but integrable.
///
/// A node is excluded when the Newton distance |w'|/|w''| to a zero of h' or g'
/// is below twice the stencil step; its cell takes Delta u from the nearest
/// non-excluded ring at the same angle.
RieszReport riesz_balance(const Surface& s, double r, const PolarGrid& grid = {200, 256, 0.95},
                          double step = 1e-3, const QuadratureSpec& quad = {});

}  // namespace minsurf
