// gil: command-line front end for the convex-body Gauss image toolkit.
// Loads bodies/measures/queries from JSON, runs the named check, writes a
// report (and optional CSV). Identical config and inputs produce
// byte-identical outputs; every numeric knob is echoed into the report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gil/gauss_image.hpp"
#include "gil/json_io.hpp"
#include "gil/measure.hpp"
#include "gil/rational.hpp"
#include "gil/uniqueness.hpp"
#include "gil/variation.hpp"

namespace {

using gil::Json;

struct Options {
  std::string k_path, l_path, lambda_path, omega_path, out_path, csv_path;
  std::string kind, mode = "float";
  std::uint64_t seed = 1;
  double resolution = 1e-3;
  double family_diameter = 0.5;
  double t = 0.5;
  double scale = 1.0;
  double eps = 1e-3;
  int t_count = 200;
  int samples = 500;
  int points = 30;
  bool reverse = false;
};

Json config_json(const Options& o, const std::string& command) {
  Json c;
  c["command"] = command;
  if (!o.k_path.empty()) c["k"] = o.k_path;
  if (!o.l_path.empty()) c["l"] = o.l_path;
  if (!o.lambda_path.empty()) c["lambda"] = o.lambda_path;
  if (!o.omega_path.empty()) c["omega"] = o.omega_path;
  c["seed"] = o.seed;
  c["resolution"] = o.resolution;
  c["family_diameter"] = o.family_diameter;
  c["t_count"] = o.t_count;
  c["samples"] = o.samples;
  c["mode"] = o.mode;
  return c;
}

void emit(const Options& o, Json j) {
  if (o.out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    gil::write_json(o.out_path, j);
  }
}

void write_csv(const std::string& path, const gil::LipschitzScan& scan) {
  std::ofstream out(path);
  if (!out) throw gil::InputError("cannot write " + path);
  out << "t,d_hausdorff,ratio,bound\n";
  char line[256];
  for (const auto& r : scan.rows) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", r.t, r.d_hausdorff, r.ratio,
                  r.bound);
    out << line;
  }
}

gil::Polytope load_body(const std::string& path) { return gil::body_from_json(gil::load_json(path)); }

gil::SphericalPolygon single_polygon(const gil::QuerySet& q) {
  if (q.polygons.size() != 1 || !q.points.empty() || !q.arcs.empty() || !q.caps.empty())
    throw gil::InputError("expected a query set holding exactly one polygon");
  return q.polygons[0];
}

int run(const Options& o, const std::string& command) {
  using namespace gil;

  if (command == "generate") {
    Json j;
    if (o.kind == "cube") {
      j = body_to_json(make_cube(o.scale));
    } else if (o.kind == "cross") {
      j = body_to_json(make_cross_polytope(o.scale));
    } else if (o.kind == "frustum") {
      j = body_to_json(make_frustum());
    } else if (o.kind == "random") {
      j = body_to_json(random_polytope(o.seed, o.points));
    } else {
      throw InputError("generate: unknown kind \"" + o.kind + "\"");
    }
    emit(o, std::move(j));
    return 0;
  }

  if (command == "polar") {
    if (o.mode == "rational") {
      const RationalPolytope K = rational_body_from_json(load_json(o.k_path));
      emit(o, rational_body_to_json(rational_polar(K)));
    } else {
      emit(o, body_to_json(polar(load_body(o.k_path))));
    }
    return 0;
  }

  if (command == "gauss-image") {
    const Polytope K = load_body(o.k_path);
    const QuerySet w = query_from_json(load_json(o.omega_path));
    const SphericalRegion r = o.reverse ? reverse_gauss_image(K, w) : gauss_image(K, w);
    Json j = region_to_json(r);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return 0;
  }

  if (command == "measure") {
    const Polytope K = load_body(o.k_path);
    const SphericalMeasure lambda = measure_from_json(load_json(o.lambda_path));
    const QuerySet w = query_from_json(load_json(o.omega_path));
    Json j;
    j["check"] = "gauss-image-measure";
    j["verdict"] = "pass";
    j["witnesses"] = Json::array();
    Json margins;
    margins["mass"] = gauss_image_measure(lambda, K, w);
    j["margins"] = std::move(margins);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return 0;
  }

  if (command == "harmonic") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    Json j = body_to_json(harmonic_mean(K, L, o.t));
    emit(o, std::move(j));
    return 0;
  }

  if (command == "lipschitz-scan") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    const QuerySet w = query_from_json(load_json(o.omega_path));
    const LipschitzScan scan = lipschitz_scan(K, L, w, o.t_count, o.resolution);
    if (!o.csv_path.empty()) write_csv(o.csv_path, scan);
    Json j;
    j["check"] = "variation-lipschitz";
    j["verdict"] = scan.pass ? "pass" : "fail";
    Json ws = Json::array();
    if (!scan.pass) {
      Json wj;
      wj["set"] = "max-ratio-step";
      Json values;
      values["ratio"] = scan.max_ratio;
      values["bound"] = scan.bound;
      wj["values"] = std::move(values);
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    Json margins;
    margins["bound"] = scan.bound;
    margins["max_ratio"] = scan.max_ratio;
    margins["slack"] = scan.slack;
    j["margins"] = std::move(margins);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return scan.pass ? 0 : 1;
  }

  if (command == "sweep-check") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    const SphericalPolygon gamma = single_polygon(query_from_json(load_json(o.omega_path)));
    const CheckReport r =
        sweep_inclusion_check(K, L, gamma, o.t_count, o.samples, o.resolution, o.seed);
    Json j = report_to_json(r);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return r.pass ? 0 : 1;
  }

  if (command == "uniqueness-check") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    const SphericalMeasure lambda = measure_from_json(load_json(o.lambda_path));
    std::vector<UnitVec> avoid = avoidance_directions(K);
    for (const auto& d : avoidance_directions(L)) avoid.push_back(d);
    const TestFamily family = grid_partition(o.family_diameter, o.seed, {lambda}, avoid);
    const CheckReport r = ae_equal_check(K, L, lambda, family);
    Json j = report_to_json(r);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return r.pass ? 0 : 1;
  }

  if (command == "dilation-check") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    const SphericalMeasure lambda = measure_from_json(load_json(o.lambda_path));
    std::vector<UnitVec> avoid = avoidance_directions(K);
    for (const auto& d : avoidance_directions(L)) avoid.push_back(d);
    const TestFamily family = grid_partition(o.family_diameter, o.seed, {lambda}, avoid);
    const CheckReport ae = ae_equal_check(K, L, lambda, family);
    const CheckReport r =
        dilation_component_check(K, L, support_components(lambda), o.samples, o.seed, ae);
    Json j = report_to_json(r);
    j["prerequisite"] = report_to_json(ae);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return r.pass ? 0 : 1;
  }

  if (command == "ratio-partition") {
    const Polytope K = load_body(o.k_path);
    const Polytope L = load_body(o.l_path);
    const TestFamily family = grid_partition(o.family_diameter, o.seed, {}, {});
    const RatioPartition parts = ratio_partition(K, L, family, 4);
    Json j;
    j["check"] = "ratio-partition";
    j["verdict"] = "pass";
    j["witnesses"] = Json::array();
    Json margins;
    margins["k_larger"] = parts.k_larger;
    margins["l_larger"] = parts.l_larger;
    margins["equal"] = parts.equal;
    margins["mixed"] = parts.mixed;
    j["margins"] = std::move(margins);
    Json labels = Json::array();
    for (const auto& l : parts.labels) {
      switch (l) {
        case RadialLabel::KLarger: labels.push_back("k_larger"); break;
        case RadialLabel::LLarger: labels.push_back("l_larger"); break;
        case RadialLabel::Equal: labels.push_back("equal"); break;
        case RadialLabel::Mixed: labels.push_back("mixed"); break;
      }
    }
    j["labels"] = std::move(labels);
    j["config"] = config_json(o, command);
    emit(o, std::move(j));
    return 0;
  }

  throw InputError("unknown command \"" + command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex-body Gauss image verification toolkit"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--k", o.k_path, "body K (JSON)");
    cmd->add_option("--l", o.l_path, "body L (JSON)");
    cmd->add_option("--lambda", o.lambda_path, "spherical measure (JSON)");
    cmd->add_option("--omega", o.omega_path, "query set (JSON)");
    cmd->add_option("--seed", o.seed, "root seed");
    cmd->add_option("--resolution", o.resolution, "sampling resolution (radians)");
    cmd->add_option("--family-diameter", o.family_diameter, "test family cell diameter bound");
    cmd->add_option("--t-count", o.t_count, "number of t grid points");
    cmd->add_option("--samples", o.samples, "sample count");
    cmd->add_option("--mode", o.mode, "arithmetic mode: float|rational");
    cmd->add_option("--out", o.out_path, "output report path (stdout when absent)");
    cmd->add_option("--csv", o.csv_path, "CSV output path (scan rows)");
    cmd->add_option("--t", o.t, "interpolation parameter");
    cmd->add_option("--eps", o.eps, "tolerance for increment checks");
  };

  CLI::App* generate = app.add_subcommand("generate", "emit a canonical or random body");
  generate->add_option("--kind", o.kind, "cube|cross|frustum|random")->required();
  generate->add_option("--scale", o.scale, "half-side / vertex scale");
  generate->add_option("--points", o.points, "random body: sample count");
  add_common(generate);

  for (const char* name : {"polar", "gauss-image", "measure", "harmonic", "lipschitz-scan",
                           "sweep-check", "uniqueness-check", "dilation-check",
                           "ratio-partition"}) {
    CLI::App* cmd = app.add_subcommand(name, name);
    add_common(cmd);
    if (std::string(name) == "gauss-image")
      cmd->add_flag("--reverse", o.reverse, "compute the reverse image");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(o, command);
  } catch (const gil::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gil::PartitionFailureError& e) {
    std::cerr << "partition failure: " << e.what() << "\n";
    return 2;
  } catch (const gil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
