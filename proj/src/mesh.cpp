#include "minsurf/mesh.hpp"

#include <cstdio>
#include <numbers>

#include "minsurf/errors.hpp"

namespace minsurf {

void MeshSpec::validate() const {
  if (n_r < 2 || n_theta < 3) {
    throw InputError("mesh needs n_r >= 2 and n_theta >= 3");
  }
  if (!(r_max > 0.0 && r_max <= 1.0)) {
    throw InputError("mesh r_max must lie in (0, 1]");
  }
}

TriangleMesh polar_mesh(const std::function<Point3(Complex)>& position, const MeshSpec& spec) {
  spec.validate();
  TriangleMesh mesh;
  mesh.vertices.reserve(spec.vertex_count());
  mesh.faces.reserve(spec.triangle_count());

  mesh.vertices.push_back(position(Complex{}));
  for (int i = 1; i <= spec.n_r; ++i) {
    const double r = spec.r_max * i / spec.n_r;
    for (int j = 0; j < spec.n_theta; ++j) {
      mesh.vertices.push_back(position(std::polar(r, 2.0 * std::numbers::pi * j / spec.n_theta)));
    }
  }

  const auto index = [&](int ring, int j) { return 1 + (ring - 1) * spec.n_theta + j % spec.n_theta; };
  for (int j = 0; j < spec.n_theta; ++j) {
    mesh.faces.push_back({0, index(1, j), index(1, j + 1)});
  }
  for (int i = 1; i < spec.n_r; ++i) {
    for (int j = 0; j < spec.n_theta; ++j) {
      const int a = index(i, j);
      const int b = index(i + 1, j);
      const int c = index(i + 1, j + 1);
      const int d = index(i, j + 1);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  return mesh;
}

void write_obj(const TriangleMesh& mesh, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) {
    out << "# " << comment << '\n';
  }
  char buf[128];
  for (const Point3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.u, v.v, v.t);
    out << buf;
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

}  // namespace minsurf
