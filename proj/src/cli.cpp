#include "minsurf/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minsurf/boundary.hpp"
#include "minsurf/catalog.hpp"
#include "minsurf/equality.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/json_io.hpp"
#include "minsurf/mesh.hpp"
#include "minsurf/mobius.hpp"
#include "minsurf/subharmonic.hpp"

namespace minsurf::cli {

namespace {

constexpr const char* kToolName = "minsurf";
constexpr double kPullbackTol = 1e-12;
constexpr double kLengthInvarianceTol = 1e-7;
constexpr double kMonotoneTol = 1e-10;

double parse_real(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InputError("malformed number '" + token + "' in " + context);
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw InputError("malformed number '" + token + "' in " + context);
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == ',') {
    parts.emplace_back();
  }
  return parts;
}

struct LoadedSurface {
  Surface surface;
  std::string source;
};

LoadedSurface resolve_surface(const std::string& spec) {
  if (const CatalogEntry* entry = find_catalog_entry(spec)) {
    return {entry->surface, "catalog:" + spec};
  }
  if (std::filesystem::is_regular_file(spec)) {
    return {load_surface_file(spec), "file:" + spec};
  }
  throw InputError("unknown surface '" + spec + "' (not a catalog name or readable file)");
}

PolarGrid parse_grid(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 3 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
    throw InputError("grid must be nr,ntheta,rmax with integer counts");
  }
  PolarGrid g{static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]};
  g.validate();
  return g;
}

MeshSpec parse_mesh(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 3 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
    throw InputError("mesh must be nr,ntheta,rmax with integer counts");
  }
  MeshSpec m{static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]};
  m.validate();
  return m;
}

Json envelope(const std::string& command, const LoadedSurface& s, Json parameters) {
  return Json{{"tool", {{"name", kToolName}, {"version", MINSURF_VERSION}}},
              {"command", command},
              {"input",
               {{"surface", surface_to_json(s.surface)},
                {"source", s.source},
                {"parameters", std::move(parameters)}}}};
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw InputError("cannot open output file " + path);
      }
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(std::ostream& out, const std::string& path, const Json& j) {
  Output o(out, path);
  o.stream() << j.dump(2) << '\n';
}

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Options {
  std::string surface;
  std::string out;
  std::string z = "0,0";
  double r = 1.0;
  std::string radii = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string grid = "200,256,0.99";
  std::string riesz_grid = "200,256";
  bool certify_equality = false;
  double eq_tol = 1e-6;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_panels = 1 << 16;
  std::string a;
  bool verify = false;
  double step = 1e-3;
  double riesz_tol = 5e-4;
  std::string mesh;
  std::string mobius;
};

QuadratureSpec quad_from(const Options& o) {
  QuadratureSpec q;
  q.rel_tol = o.rel_tol;
  q.abs_tol = o.abs_tol;
  q.max_panels = o.max_panels;
  q.validate();
  return q;
}

int cmd_catalog(std::ostream& out) {
  Json list = Json::array();
  for (const CatalogEntry& e : catalog()) {
    list.push_back({{"name", e.name},
                    {"description", e.description},
                    {"surface", surface_to_json(e.surface)},
                    {"closed_forms", e.closed_forms}});
  }
  out << Json{{"tool", {{"name", kToolName}, {"version", MINSURF_VERSION}}}, {"catalog", list}}.dump(2)
      << '\n';
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const Complex z = parse_complex(o.z);
  const Tangents tg = s.surface.tangents(z);
  Json j = envelope("eval", s, {{"z", complex_to_json(z)}});
  j["result"] = {{"position", s.surface.position(z)},
                 {"lambda", s.surface.conformal_density(z)},
                 {"F_x", tg.fx},
                 {"F_y", tg.fy}};
  emit(out, o.out, j);
  return kOk;
}

int cmd_length(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const QuadratureSpec quad = quad_from(o);
  const double length = circle_length(s.surface, o.r, quad);
  Json j = envelope("length", s, {{"r", o.r}, {"quadrature", quad}});
  j["result"] = {{"length", length}, {"mean_ratio", length / (2.0 * std::numbers::pi * o.r)}};
  emit(out, o.out, j);
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const std::vector<double> radii = parse_list(o.radii);
  const auto profile = mean_ratio_profile(s.surface, radii, quad_from(o));
  Output dest(out, o.out);
  dest.stream() << "r,mean_ratio\n";
  for (const ProfilePoint& pt : profile) {
    dest.stream() << format17(pt.r) << ',' << format17(pt.mean_ratio) << '\n';
  }
  const bool monotone = profile_max_decrease(profile) <= kMonotoneTol;
  const bool above_center =
      profile.empty() || profile.front().mean_ratio >= s.surface.conformal_density(0.0) - kMonotoneTol;
  return monotone && above_center ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const PolarGrid grid = parse_grid(o.grid);
  const QuadratureSpec quad = quad_from(o);
  Json j = envelope("verify", s,
                    {{"grid", grid},
                     {"quadrature", quad},
                     {"eq_tol", o.eq_tol},
                     {"certify_equality", o.certify_equality}});
  bool ok = true;
  if (o.certify_equality) {
    EqualityOptions opts;
    opts.eq_tol = o.eq_tol;
    const EqualityVerdict v = equality_certificate(s.surface, grid, quad, opts);
    j["schwarz"] = v.schwarz;
    j["equality"] = v;
    ok = v.schwarz.holds && (v.kind == EqualityKind::strict || v.mean_value_equality.value_or(false));
  } else {
    const SchwarzReport rep = schwarz_report(s.surface, grid, quad, o.eq_tol);
    j["schwarz"] = rep;
    ok = rep.holds;
  }
  j["passed"] = ok;
  emit(out, o.out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_mobius(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const Complex a = parse_complex(o.a);
  const DiskMobius m(a);
  const DerivedSurface h = precompose(s.surface, m);
  const QuadratureSpec quad = quad_from(o);

  const double lambda_a = s.surface.conformal_density(a);
  const double residual = pullback_identity_residual(s.surface, a);
  Json result{{"lambda_H_at_0", h.conformal_density(0.0)},
              {"lambda_F_at_a_scaled", lambda_a * (1.0 - std::norm(a))},
              {"pullback_residual", residual}};
  bool ok = true;
  if (o.verify) {
    const double l_base = circle_length(s.surface, 1.0, quad);
    const double l_derived = circle_length(h, 1.0, quad);
    const PolarGrid grid = parse_grid(o.grid);
    const SchwarzReport rf = schwarz_report(s.surface, grid, quad);
    const SchwarzReport rh = schwarz_report(h, grid, quad);
    const bool pullback_ok = residual < kPullbackTol * std::max(1.0, lambda_a);
    const bool length_ok = std::abs(l_derived - l_base) < kLengthInvarianceTol;
    result["l1_base"] = l_base;
    result["l1_derived"] = l_derived;
    result["length_gap"] = std::abs(l_derived - l_base);
    result["R_base"] = rf.R;
    result["R_derived"] = rh.R;
    result["checks"] = {{"pullback", pullback_ok}, {"length_invariance", length_ok}};
    ok = pullback_ok && length_ok;
  }
  Json j = envelope("mobius", s, {{"a", complex_to_json(a)}, {"verify", o.verify}, {"quadrature", quad}});
  j["result"] = result;
  j["passed"] = ok;
  emit(out, o.out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_riesz(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const std::vector<double> g = parse_list(o.riesz_grid);
  if (g.size() != 2 || g[0] != std::floor(g[0]) || g[1] != std::floor(g[1])) {
    throw InputError("riesz grid must be nr,ntheta with integer counts");
  }
  const PolarGrid grid{static_cast<int>(g[0]), static_cast<int>(g[1]), 0.95};
  const QuadratureSpec quad = quad_from(o);
  const RieszReport rep = riesz_balance(s.surface, o.r, grid, o.step, quad);
  const bool ok = rep.residual <= o.riesz_tol;
  Json j = envelope("riesz", s,
                    {{"r", o.r}, {"step", o.step}, {"tolerance", o.riesz_tol}, {"quadrature", quad}});
  j["riesz"] = rep;
  j["passed"] = ok;
  emit(out, o.out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const LoadedSurface s = resolve_surface(o.surface);
  const MeshSpec spec = parse_mesh(o.mesh);
  Surface target = s.surface;
  std::string comment = std::string(kToolName) + " " + MINSURF_VERSION + " surface=" + s.source +
                        " mesh=" + o.mesh;
  if (!o.mobius.empty()) {
    target = reexpand(precompose(s.surface, DiskMobius(parse_complex(o.mobius))));
    comment += " mobius=" + o.mobius;
  }
  const TriangleMesh mesh =
      polar_mesh([&](Complex z) { return target.position(z); }, spec);
  {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      throw InputError("cannot open output file " + o.out);
    }
    write_obj(mesh, file, comment);
    if (!file) {
      throw InputError("failed writing " + o.out);
    }
  }
  Json j = envelope("export", s, {{"mesh", o.mesh}, {"out", o.out}, {"mobius", o.mobius}});
  j["result"] = {{"vertices", mesh.vertices.size()}, {"triangles", mesh.faces.size()}};
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::vector<std::string> parts = split_commas(text);
  if (parts.size() != 2) {
    throw InputError("complex literal must be re,im: '" + text + "'");
  }
  return {parse_real(parts[0], "complex literal"), parse_real(parts[1], "complex literal")};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split_commas(text)) {
    out.push_back(parse_real(part, "list '" + text + "'"));
  }
  if (out.empty()) {
    throw InputError("empty list");
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weierstrass-Enneper minimal surfaces and the sharp Schwarz bound", kToolName};
  app.require_subcommand(1);
  Options o;

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in surfaces");

  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", o.surface, "Catalog name or surface JSON file")->required();
  };
  auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance");
    cmd->add_option("--max-panels", o.max_panels, "Quadrature panel budget");
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate F, lambda and tangents at a point");
  add_surface(eval_cmd);
  eval_cmd->add_option("--z", o.z, "Point re,im")->required();
  eval_cmd->add_option("--out", o.out, "Output file");

  auto* length_cmd = app.add_subcommand("length", "Length of the image of |z| = r");
  add_surface(length_cmd);
  add_tolerance(length_cmd);
  length_cmd->add_option("--r", o.r, "Radius in (0, 1]");
  length_cmd->add_option("--out", o.out, "Output file");

  auto* profile_cmd = app.add_subcommand("profile", "CSV of circle means of lambda");
  add_surface(profile_cmd);
  add_tolerance(profile_cmd);
  profile_cmd->add_option("--radii", o.radii, "Increasing radii r1,r2,...");
  profile_cmd->add_option("--out", o.out, "Output CSV file");

  auto* verify_cmd = app.add_subcommand("verify", "Certify |F_x| <= R/(1-|z|^2)");
  add_surface(verify_cmd);
  add_tolerance(verify_cmd);
  verify_cmd->add_option("--grid", o.grid, "Polar grid nr,ntheta,rmax");
  verify_cmd->add_flag("--certify-equality", o.certify_equality, "Also classify the equality case");
  verify_cmd->add_option("--eq-tol", o.eq_tol, "Relative tolerance for declaring equality");
  verify_cmd->add_option("--out", o.out, "Output JSON file");

  auto* mobius_cmd = app.add_subcommand("mobius", "Precompose with (z+a)/(1+conj(a)z)");
  add_surface(mobius_cmd);
  add_tolerance(mobius_cmd);
  mobius_cmd->add_option("--a", o.a, "Mobius parameter re,im with |a| < 1")->required();
  mobius_cmd->add_flag("--verify", o.verify, "Check pullback identity and length invariance");
  mobius_cmd->add_option("--grid", o.grid, "Polar grid for the Schwarz comparison");
  mobius_cmd->add_option("--out", o.out, "Output JSON file");

  auto* riesz_cmd = app.add_subcommand("riesz", "Riesz representation balance of |h'|+|g'|");
  add_surface(riesz_cmd);
  add_tolerance(riesz_cmd);
  riesz_cmd->add_option("--r", o.r, "Radius in (0, 1)")->required();
  riesz_cmd->add_option("--step", o.step, "Finite-difference step");
  riesz_cmd->add_option("--grid", o.riesz_grid, "Midpoint grid nr,ntheta");
  riesz_cmd->add_option("--tol", o.riesz_tol, "Residual tolerance");
  riesz_cmd->add_option("--out", o.out, "Output JSON file");

  auto* export_cmd = app.add_subcommand("export", "Write a triangulated OBJ mesh");
  add_surface(export_cmd);
  export_cmd->add_option("--mesh", o.mesh, "Mesh nr,ntheta,rmax")->required();
  export_cmd->add_option("--out", o.out, "OBJ path")->required();
  export_cmd->add_option("--mobius", o.mobius, "Export F o m for parameter re,im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(out);
    if (*eval_cmd) return cmd_eval(o, out);
    if (*length_cmd) return cmd_length(o, out);
    if (*profile_cmd) return cmd_profile(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*mobius_cmd) return cmd_mobius(o, out);
    if (*riesz_cmd) return cmd_riesz(o, out);
    if (*export_cmd) return cmd_export(o, out);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << " (last estimates " << format17(e.previous_estimate()) << ", "
        << format17(e.last_estimate()) << ")\n";
    return kQuadratureFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SingularPointError& e) {
    err << "error: singular point: " << e.what() << '\n';
    return kInputError;
  } catch (const StencilError& e) {
    err << "error: stencil: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{kToolName};
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace minsurf::cli
