#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "minsurf/series.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// Polar mesh resolution: center vertex plus n_r rings of n_theta vertices at
/// radii r_max*i/n_r. Unlike PolarGrid, r_max = 1 is allowed.
struct MeshSpec {
  int n_r = 32;
  int n_theta = 64;
  double r_max = 1.0;

  void validate() const;
  int vertex_count() const noexcept { return 1 + n_r * n_theta; }
  int triangle_count() const noexcept { return n_theta + 2 * n_theta * (n_r - 1); }
};

struct TriangleMesh {
  std::vector<Point3> vertices;
  std::vector<std::array<int, 3>> faces;  ///< 0-based, counterclockwise in the parameter disk
};

/// Vertices ring-major starting at the center; a fan around the center, then two
/// triangles per quad of each ring band.
TriangleMesh polar_mesh(const std::function<Point3(Complex)>& position, const MeshSpec& spec);

/// ASCII OBJ with `v x y z` lines (17 significant digits) and 1-based `f i j k` lines.
void write_obj(const TriangleMesh& mesh, std::ostream& out, const std::string& comment = {});

}  // namespace minsurf
