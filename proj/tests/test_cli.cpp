#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gil/json_io.hpp"

using namespace gil;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return GIL_CLI_PATH; }

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "gil-cli-tests";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("json round trips for bodies, measures, queries") {
  const Polytope f = make_frustum();
  const Polytope f2 = body_from_json(body_to_json(f));
  CHECK(f2.num_vertices() == f.num_vertices());
  CHECK(f2.num_facets() == f.num_facets());

  const SphericalMeasure caps =
      SphericalMeasure::cap_lebesgue({Cap(e3(), 0.1), Cap(UnitVec(0, 0, -1), 0.1)}, 2.0);
  const SphericalMeasure caps2 = measure_from_json(measure_to_json(caps));
  CHECK(caps2.kind() == SphericalMeasure::Kind::CapLebesgue);
  CHECK(caps2.caps().size() == 2);
  CHECK(caps2.density() == 2.0);

  QuerySet q = QuerySet::cap(Cap(e3(), 0.3));
  q.points.push_back(e1());
  const QuerySet q2 = query_from_json(query_to_json(q));
  CHECK(q2.caps.size() == 1);
  CHECK(q2.points.size() == 1);

  CHECK_THROWS_AS(measure_from_json(Json{{"kind", "nope"}}), InputError);
  CHECK_THROWS_AS(body_from_json(Json{{"foo", 1}}), InputError);
}

TEST_CASE("report json carries the schema fields") {
  CheckReport r;
  r.check = "ae-equality";
  r.pass = false;
  r.add_witness("cell-3", {{"s", 0.25}, {"m", 0.5}});
  r.add_margin("max_s", 0.25);
  const Json j = report_to_json(r);
  CHECK(j["check"] == "ae-equality");
  CHECK(j["verdict"] == "fail");
  CHECK(j["witnesses"][0]["set"] == "cell-3");
  CHECK(j["witnesses"][0]["values"]["s"] == 0.25);
  CHECK(j["margins"]["max_s"] == 0.25);

  CheckReport bad;
  bad.check = "x";
  bad.pass = false;
  CHECK_THROWS_AS(bad.finalize(), Error);
}

TEST_CASE("cli generates canonical bodies deterministically") {
  const fs::path dir = work_dir();
  const fs::path a = dir / "cube-a.json";
  const fs::path b = dir / "cube-b.json";
  REQUIRE(run_cli("generate --kind cube --out " + a.string()) == 0);
  REQUIRE(run_cli("generate --kind cube --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  const Polytope cube = body_from_json(load_json(a.string()));
  CHECK(cube.num_vertices() == 8);

  const fs::path r1 = dir / "rand-1.json";
  const fs::path r2 = dir / "rand-2.json";
  REQUIRE(run_cli("generate --kind random --points 30 --seed 1 --out " + r1.string()) == 0);
  REQUIRE(run_cli("generate --kind random --points 30 --seed 1 --out " + r2.string()) == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(run_cli("generate --kind nonsense --out " + (dir / "x.json").string()) == 2);
}

TEST_CASE("cli polar round trip") {
  const fs::path dir = work_dir();
  const fs::path cube = dir / "cube.json";
  const fs::path dual = dir / "dual.json";
  const fs::path dual2 = dir / "dual2.json";
  REQUIRE(run_cli("generate --kind cube --out " + cube.string()) == 0);
  REQUIRE(run_cli("polar --k " + cube.string() + " --out " + dual.string()) == 0);
  const Polytope cross = body_from_json(load_json(dual.string()));
  CHECK(cross.num_vertices() == 6);
  REQUIRE(run_cli("polar --k " + dual.string() + " --out " + dual2.string()) == 0);
  const Polytope back = body_from_json(load_json(dual2.string()));
  CHECK(back.num_vertices() == 8);
  const Polytope original_cube = body_from_json(load_json(cube.string()));
  for (const auto& v : back.vertices()) {
    double best = 1e300;
    for (const auto& w : original_cube.vertices()) best = std::min(best, distance(v, w));
    CHECK(best < 1e-7);
  }

  // Rational mode reproduces the input exactly.
  const fs::path rdual = dir / "rdual.json";
  const fs::path rback = dir / "rback.json";
  REQUIRE(run_cli("polar --mode rational --k " + cube.string() + " --out " + rdual.string()) == 0);
  REQUIRE(run_cli("polar --mode rational --k " + rdual.string() + " --out " + rback.string()) ==
          0);
  const RationalPolytope exact_back = rational_body_from_json(load_json(rback.string()));
  const RationalPolytope original = rational_body_from_json(load_json(cube.string()));
  CHECK(same_vertex_set(exact_back, original));
}

TEST_CASE("cli uniqueness check exit codes and determinism") {
  const fs::path dir = work_dir();
  const fs::path cube = dir / "u-cube.json";
  const fs::path cube2 = dir / "u-cube2.json";
  const fs::path cross = dir / "u-cross.json";
  const fs::path uniform = dir / "u-uniform.json";
  REQUIRE(run_cli("generate --kind cube --out " + cube.string()) == 0);
  REQUIRE(run_cli("generate --kind cube --scale 2 --out " + cube2.string()) == 0);
  REQUIRE(run_cli("generate --kind cross --out " + cross.string()) == 0);
  write_json(uniform.string(), measure_to_json(SphericalMeasure::uniform()));

  const fs::path rep1 = dir / "rep1.json";
  const fs::path rep2 = dir / "rep2.json";
  const std::string base = "uniqueness-check --k " + cube.string() + " --l " + cube2.string() +
                           " --lambda " + uniform.string() +
                           " --family-diameter 0.7 --seed 7 --out ";
  CHECK(run_cli(base + rep1.string()) == 0);
  CHECK(run_cli(base + rep2.string()) == 0);
  CHECK(slurp(rep1) == slurp(rep2));
  const Json rep = load_json(rep1.string());
  CHECK(rep["verdict"] == "pass");
  CHECK(rep["config"]["seed"] == 7);

  const fs::path repf = dir / "rep-fail.json";
  CHECK(run_cli("uniqueness-check --k " + cube.string() + " --l " + cross.string() +
                " --lambda " + uniform.string() + " --family-diameter 0.7 --seed 7 --out " +
                repf.string()) == 1);
  CHECK(load_json(repf.string())["verdict"] == "fail");

  // Malformed input.
  const fs::path broken = dir / "broken.json";
  std::ofstream(broken) << "{ not json";
  CHECK(run_cli("polar --k " + broken.string()) == 2);
  CHECK(run_cli("polar --k " + (dir / "missing.json").string()) == 2);
}

TEST_CASE("cli lipschitz scan writes csv") {
  const fs::path dir = work_dir();
  const fs::path cube = dir / "l-cube.json";
  const fs::path cross2 = dir / "l-cross2.json";
  const fs::path omega = dir / "l-omega.json";
  REQUIRE(run_cli("generate --kind cube --out " + cube.string()) == 0);
  REQUIRE(run_cli("generate --kind cross --scale 2 --out " + cross2.string()) == 0);
  {
    const double c = 0.8;
    QuerySet q;
    q.polygons.emplace_back(std::vector<UnitVec>{UnitVec(c, c, 1), UnitVec(-c, c, 1),
                                                 UnitVec(-c, -c, 1), UnitVec(c, -c, 1)});
    write_json(omega.string(), query_to_json(q));
  }
  const fs::path rep = dir / "l-rep.json";
  const fs::path csv = dir / "l-rows.csv";
  CHECK(run_cli("lipschitz-scan --k " + cube.string() + " --l " + cross2.string() + " --omega " +
                omega.string() + " --t-count 24 --resolution 2e-3 --out " + rep.string() +
                " --csv " + csv.string()) == 0);
  const std::string rows = slurp(csv);
  CHECK(rows.rfind("t,d_hausdorff,ratio,bound\n", 0) == 0);
  int lines = 0;
  for (char ch : rows)
    if (ch == '\n') ++lines;
  CHECK(lines == 24);  // header + 23 steps
  CHECK(load_json(rep.string())["verdict"] == "pass");
}
