#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "minsurf/cli.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/json_io.hpp"

using namespace minsurf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("literal parsing") {
  CHECK(cli::parse_complex("0.3,-0.4") == Complex{0.3, -0.4});
  CHECK_THROWS_AS(cli::parse_complex("0.3"), InputError);
  CHECK_THROWS_AS(cli::parse_complex("0.3,x"), InputError);
  CHECK_THROWS_AS(cli::parse_complex("1,2,3"), InputError);
  CHECK_THROWS_AS(cli::parse_complex("1,"), InputError);
  CHECK(cli::parse_list("0.1,0.5,1") == std::vector<double>{0.1, 0.5, 1.0});
  CHECK_THROWS_AS(cli::parse_list("0.1,,0.5"), InputError);
  CHECK_THROWS_AS(cli::parse_list("nan"), InputError);
}

TEST_CASE("catalog") {
  const Result r = run_cli({"catalog"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["catalog"].size() == 4);
  CHECK(j["catalog"][0]["name"] == "enneper");
  CHECK(j["catalog"][3]["surface"]["p"] == Json::parse("[[1.0,0.0],[0.3,0.0]]"));
}

TEST_CASE("eval") {
  const Result r = run_cli({"eval", "--surface", "planar", "--z", "0.3,0.4"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["position"][0].get<double>() == doctest::Approx(0.3));
  CHECK(j["result"]["position"][1].get<double>() == doctest::Approx(0.4));
  CHECK(j["result"]["position"][2].get<double>() == 0.0);
  CHECK(j["result"]["lambda"].get<double>() == 1.0);
  CHECK(j["tool"]["version"] == MINSURF_VERSION);
  CHECK(j["input"]["source"] == "catalog:planar");

  CHECK(run_cli({"eval", "--surface", "planar", "--z", "0.9,0.9"}).code == 2);
  CHECK(run_cli({"eval", "--surface", "planar", "--z=-0.5,0.2"}).code == 0);
}

TEST_CASE("length and profile") {
  const Result len = run_cli({"length", "--surface", "enneper", "--r", "0.5"});
  REQUIRE(len.code == 0);
  CHECK(Json::parse(len.out)["result"]["length"].get<double>() ==
        doctest::Approx(1.25 * 3.141592653589793).epsilon(1e-12));

  const Result prof = run_cli({"profile", "--surface", "enneper", "--radii", "0.25,0.5,0.75"});
  REQUIRE(prof.code == 0);
  CHECK(prof.out.rfind("r,mean_ratio\n0.25,1.0625", 0) == 0);
  CHECK(std::count(prof.out.begin(), prof.out.end(), '\n') == 4);

  CHECK(run_cli({"profile", "--surface", "enneper", "--radii", "0.5,0.25"}).code == 2);
}

TEST_CASE("verify") {
  const Result r = run_cli({"verify", "--surface", "enneper"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::abs(j["schwarz"]["R"].get<double>() - 2.0) < 1e-9);
  CHECK(j["schwarz"]["holds"] == true);
  CHECK(j["input"]["parameters"]["grid"]["n_r"] == 200);

  const Result eq = run_cli({"verify", "--surface", "affine-tilt", "--grid", "20,32,0.9",
                             "--certify-equality"});
  REQUIRE(eq.code == 0);
  const Json ej = Json::parse(eq.out);
  CHECK(ej["equality"]["kind"] == "equality");
  CHECK(ej["equality"]["affine_detected"] == true);

  for (const char* name : {"planar", "poly-demo"}) {
    CHECK(run_cli({"verify", "--surface", name, "--grid", "50,64,0.99", "--certify-equality"}).code == 0);
  }
  CHECK(run_cli({"verify", "--surface", "enneper", "--grid", "20,32,1.0"}).code == 2);
  CHECK(run_cli({"verify", "--surface", "enneper", "--grid", "20.5,32,0.9"}).code == 2);
}

TEST_CASE("verify from a surface file, written to --out") {
  const auto in = temp_path("minsurf_cli_surface.json");
  const auto out = temp_path("minsurf_cli_report.json");
  {
    std::ofstream f(in);
    f << R"({"p": [[1, 0], [0, 0.2]], "q": [[0.1, 0], [0.3, 0]], "name": "custom"})";
  }
  const Result r = run_cli({"verify", "--surface", in.string(), "--grid", "20,32,0.95", "--out",
                            out.string()});
  CHECK(r.code == 0);
  const Json j = Json::parse(read_file(out));
  CHECK(j["input"]["surface"]["name"] == "custom");
  CHECK(j["schwarz"]["holds"] == true);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("mobius") {
  const Result r = run_cli({"mobius", "--surface", "enneper", "--a", "0.5,0", "--verify", "--grid",
                            "20,32,0.95"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["lambda_H_at_0"].get<double>() == doctest::Approx(0.9375));
  CHECK(j["result"]["checks"]["pullback"] == true);
  CHECK(j["result"]["checks"]["length_invariance"] == true);
  CHECK(run_cli({"mobius", "--surface", "enneper", "--a", "1,0"}).code == 2);
}

TEST_CASE("riesz") {
  const Result r = run_cli({"riesz", "--surface", "enneper", "--r", "0.5"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["riesz"]["weighted_mass"].get<double>() == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(j["riesz"].contains("excluded_points"));
  CHECK(run_cli({"riesz", "--surface", "enneper", "--r", "0.9995"}).code == 2);
}

TEST_CASE("export mesh combinatorics and determinism") {
  const auto a = temp_path("minsurf_cli_a.obj");
  const auto b = temp_path("minsurf_cli_b.obj");
  REQUIRE(run_cli({"export", "--surface", "enneper", "--mesh", "2,3,1.0", "--out", a.string()}).code == 0);
  const std::string text = read_file(a);
  std::istringstream lines(text);
  std::string line;
  int vertices = 0;
  int faces = 0;
  while (std::getline(lines, line)) {
    vertices += line.rfind("v ", 0) == 0;
    faces += line.rfind("f ", 0) == 0;
  }
  CHECK(vertices == 7);
  CHECK(faces == 9);
  CHECK(text.find("f 1 2 3\n") != std::string::npos);

  REQUIRE(run_cli({"export", "--surface", "enneper", "--mesh", "2,3,1.0", "--out", b.string()}).code == 0);
  CHECK(read_file(b) == text);

  REQUIRE(run_cli({"export", "--surface", "planar", "--mesh", "3,8,0.9", "--out", b.string(),
                   "--mobius", "0.3,0.1"})
              .code == 0);
  CHECK(read_file(b).find("mobius=0.3,0.1") != std::string::npos);

  CHECK(run_cli({"export", "--surface", "enneper", "--mesh", "1,3,1.0", "--out", a.string()}).code == 2);
  CHECK(run_cli({"export", "--surface", "enneper", "--mesh", "2,3,1.0", "--out",
                 "/nonexistent-dir/x.obj"})
            .code == 2);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("input errors") {
  const Result unknown = run_cli({"verify", "--surface", "nosuch"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown surface") != std::string::npos);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"eval", "--surface", "planar"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("quadrature failure exits 3") {
  const Result r = run_cli({"length", "--surface", "poly-demo", "--max-panels", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("last estimates") != std::string::npos);
}
