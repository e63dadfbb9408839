#include "minsurf/json_io.hpp"

#include <fstream>

#include "minsurf/errors.hpp"

namespace minsurf {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("complex value must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json series_to_json(const PowerSeries& s) {
  Json out = Json::array();
  for (const Complex& c : s.coeffs()) {
    out.push_back(complex_to_json(c));
  }
  return out;
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("series must be a non-empty array of [re, im] pairs");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) {
    coeffs.push_back(complex_from_json(c));
  }
  return PowerSeries(std::move(coeffs));
}

Json surface_to_json(const Surface& s) {
  Json out{{"p", series_to_json(s.p())}, {"q", series_to_json(s.q())}};
  if (s.name()) {
    out["name"] = *s.name();
  }
  return out;
}

Surface surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) {
    throw InputError("surface JSON needs \"p\" and \"q\"");
  }
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw InputError("surface \"name\" must be a string");
    }
    name = j["name"].get<std::string>();
  }
  return Surface::from_pq(series_from_json(j["p"]), series_from_json(j["q"]), std::move(name));
}

Surface load_surface_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open surface file " + path.string());
  }
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw InputError("surface file " + path.string() + " is not valid JSON");
  }
  return surface_from_json(j);
}

void to_json(Json& j, const Point3& p) { j = Json::array({p.u, p.v, p.t}); }

void from_json(const Json& j, Point3& p) { p = {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

void to_json(Json& j, const PolarGrid& g) {
  j = Json{{"n_r", g.n_r}, {"n_theta", g.n_theta}, {"r_max", g.r_max}};
}

void from_json(const Json& j, PolarGrid& g) {
  g.n_r = j.at("n_r").get<int>();
  g.n_theta = j.at("n_theta").get<int>();
  g.r_max = j.at("r_max").get<double>();
}

void to_json(Json& j, const QuadratureSpec& q) {
  j = Json{{"rel_tol", q.rel_tol},
           {"abs_tol", q.abs_tol},
           {"max_panels", q.max_panels},
           {"nodes_per_panel", q.nodes_per_panel}};
}

void from_json(const Json& j, QuadratureSpec& q) {
  q.rel_tol = j.at("rel_tol").get<double>();
  q.abs_tol = j.at("abs_tol").get<double>();
  q.max_panels = j.at("max_panels").get<int>();
  q.nodes_per_panel = j.at("nodes_per_panel").get<int>();
}

void to_json(Json& j, const IsothermalReport& r) {
  j = Json{{"max_norm_gap", r.max_norm_gap},
           {"max_dot", r.max_dot},
           {"max_lambda_gap", r.max_lambda_gap}};
}

void to_json(Json& j, const SchwarzReport& r) {
  j = Json{{"R", r.R},
           {"boundary_length", r.boundary_length},
           {"sup_value", r.sup_value},
           {"argmax", complex_to_json(r.argmax)},
           {"ratio", r.ratio},
           {"holds", r.holds},
           {"equality_within_tol", r.equality_within_tol},
           {"degenerate", r.degenerate},
           {"grid", r.grid},
           {"quadrature", r.quad},
           {"eq_tol", r.eq_tol}};
}

void from_json(const Json& j, SchwarzReport& r) {
  r.R = j.at("R").get<double>();
  r.boundary_length = j.at("boundary_length").get<double>();
  r.sup_value = j.at("sup_value").get<double>();
  r.argmax = complex_from_json(j.at("argmax"));
  r.ratio = j.at("ratio").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.equality_within_tol = j.at("equality_within_tol").get<bool>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.grid = j.at("grid").get<PolarGrid>();
  r.quad = j.at("quadrature").get<QuadratureSpec>();
  r.eq_tol = j.at("eq_tol").get<double>();
}

void to_json(Json& j, const RieszReport& r) {
  j = Json{{"r", r.r},
           {"circle_mean_minus_center", r.circle_mean_minus_center},
           {"weighted_mass", r.weighted_mass},
           {"residual", r.residual},
           {"excluded_points", r.excluded_points},
           {"n_r", r.n_r},
           {"n_theta", r.n_theta},
           {"step", r.step}};
}

void from_json(const Json& j, RieszReport& r) {
  r.r = j.at("r").get<double>();
  r.circle_mean_minus_center = j.at("circle_mean_minus_center").get<double>();
  r.weighted_mass = j.at("weighted_mass").get<double>();
  r.residual = j.at("residual").get<double>();
  r.excluded_points = j.at("excluded_points").get<int>();
  r.n_r = j.at("n_r").get<int>();
  r.n_theta = j.at("n_theta").get<int>();
  r.step = j.at("step").get<double>();
}

void to_json(Json& j, const EqualityVerdict& v) {
  j = Json{{"kind", v.kind == EqualityKind::equality ? "equality" : "strict"},
           {"witness", v.witness ? complex_to_json(*v.witness) : Json(nullptr)},
           {"margin", v.margin},
           {"affine_detected", v.affine_detected},
           {"image", v.affine_detected ? "affine/planar-disk" : "non-affine"},
           {"density_deviation", v.density_deviation},
           {"constant_coefficients", v.constant_coefficients},
           {"mean_value_equality",
            v.mean_value_equality ? Json(*v.mean_value_equality) : Json(nullptr)},
           {"mean_value_gap", v.mean_value_gap},
           {"schwarz", v.schwarz},
           {"options",
            {{"eq_tol", v.options.eq_tol},
             {"affine_tol", v.options.affine_tol},
             {"equa_tol", v.options.equa_tol}}}};
}

void from_json(const Json& j, EqualityVerdict& v) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "equality" && kind != "strict") {
    throw InputError("unknown equality verdict kind " + kind);
  }
  v.kind = kind == "equality" ? EqualityKind::equality : EqualityKind::strict;
  v.witness.reset();
  if (!j.at("witness").is_null()) {
    v.witness = complex_from_json(j.at("witness"));
  }
  v.margin = j.at("margin").get<double>();
  v.affine_detected = j.at("affine_detected").get<bool>();
  v.density_deviation = j.at("density_deviation").get<double>();
  v.constant_coefficients = j.at("constant_coefficients").get<bool>();
  v.mean_value_equality.reset();
  if (!j.at("mean_value_equality").is_null()) {
    v.mean_value_equality = j.at("mean_value_equality").get<bool>();
  }
  v.mean_value_gap = j.at("mean_value_gap").get<double>();
  v.schwarz = j.at("schwarz").get<SchwarzReport>();
  const Json& o = j.at("options");
  v.options = {o.at("eq_tol").get<double>(), o.at("affine_tol").get<double>(),
               o.at("equa_tol").get<double>()};
}

}  // namespace minsurf
