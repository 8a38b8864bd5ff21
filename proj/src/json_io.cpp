#include "gil/json_io.hpp"

#include <cmath>
#include <fstream>

namespace gil {

namespace {

Json vec_to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

// Every double is a dyadic rational; the conversion is exact.
Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite coordinate");
  Rational r(x);
  return r;
}

Rational rational_coord_from_json(const Json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  return rational_from_double(j.get<double>());
}

}  // namespace

Json body_to_json(const Polytope& K) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : K.vertices()) verts.push_back(vec_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

Polytope body_from_json(const Json& j) {
  if (!j.contains("vertices")) throw InputError("body: missing \"vertices\"");
  std::vector<Vec3> pts;
  for (const auto& v : j["vertices"]) pts.push_back(vec_from_json(v));
  return make_polytope(pts);
}

Json rational_body_to_json(const RationalPolytope& K) {
  Json j;
  Json verts = Json::array();
  Json rats = Json::array();
  for (const auto& v : K.vertices()) {
    verts.push_back(vec_to_json(to_double(v)));
    rats.push_back(Json::array({rational_to_string(v.x), rational_to_string(v.y),
                                rational_to_string(v.z)}));
  }
  j["vertices"] = std::move(verts);
  j["vertices_rational"] = std::move(rats);
  return j;
}

RationalPolytope rational_body_from_json(const Json& j) {
  std::vector<RVec3> pts;
  if (j.contains("vertices_rational")) {
    for (const auto& v : j["vertices_rational"]) {
      if (!v.is_array() || v.size() != 3) throw InputError("body: bad rational vertex");
      pts.push_back({rational_coord_from_json(v[0]), rational_coord_from_json(v[1]),
                     rational_coord_from_json(v[2])});
    }
  } else if (j.contains("vertices")) {
    for (const auto& v : j["vertices"]) {
      if (!v.is_array() || v.size() != 3) throw InputError("body: bad vertex");
      pts.push_back({rational_coord_from_json(v[0]), rational_coord_from_json(v[1]),
                     rational_coord_from_json(v[2])});
    }
  } else {
    throw InputError("body: missing \"vertices\"");
  }
  return make_rational_polytope(pts);
}

Json measure_to_json(const SphericalMeasure& m) {
  Json j;
  switch (m.kind()) {
    case SphericalMeasure::Kind::Atoms: {
      j["kind"] = "atoms";
      Json atoms = Json::array();
      for (const auto& [dir, w] : m.atom_list()) {
        Json a;
        a["dir"] = vec_to_json(dir.vec());
        a["w"] = w;
        atoms.push_back(std::move(a));
      }
      j["atoms"] = std::move(atoms);
      break;
    }
    case SphericalMeasure::Kind::Uniform:
      j["kind"] = "uniform";
      break;
    case SphericalMeasure::Kind::CapLebesgue: {
      j["kind"] = "cap_lebesgue";
      Json caps = Json::array();
      for (const auto& c : m.caps()) {
        Json cj;
        cj["center"] = vec_to_json(c.center.vec());
        cj["radius"] = c.radius;
        caps.push_back(std::move(cj));
      }
      j["caps"] = std::move(caps);
      j["density"] = m.density();
      break;
    }
  }
  return j;
}

SphericalMeasure measure_from_json(const Json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "atoms") {
    std::vector<std::pair<UnitVec, double>> atoms;
    for (const auto& a : j.at("atoms"))
      atoms.emplace_back(UnitVec(vec_from_json(a.at("dir"))), a.at("w").get<double>());
    return SphericalMeasure::atoms(std::move(atoms));
  }
  if (kind == "uniform") return SphericalMeasure::uniform();
  if (kind == "cap_lebesgue") {
    std::vector<Cap> caps;
    for (const auto& c : j.at("caps"))
      caps.emplace_back(UnitVec(vec_from_json(c.at("center"))), c.at("radius").get<double>());
    return SphericalMeasure::cap_lebesgue(std::move(caps), j.value("density", 1.0));
  }
  throw InputError("measure: unknown kind \"" + kind + "\"");
}

Json query_to_json(const QuerySet& q) {
  Json j;
  if (q.whole_sphere) {
    j["whole_sphere"] = true;
    return j;
  }
  if (!q.points.empty()) {
    Json arr = Json::array();
    for (const auto& p : q.points) arr.push_back(vec_to_json(p.vec()));
    j["points"] = std::move(arr);
  }
  if (!q.arcs.empty()) {
    Json arr = Json::array();
    for (const auto& a : q.arcs)
      arr.push_back(Json::array({vec_to_json(a.a().vec()), vec_to_json(a.b().vec())}));
    j["arcs"] = std::move(arr);
  }
  if (!q.polygons.empty()) {
    Json arr = Json::array();
    for (const auto& p : q.polygons) {
      Json ring = Json::array();
      for (const auto& v : p.vertices()) ring.push_back(vec_to_json(v.vec()));
      arr.push_back(std::move(ring));
    }
    j["polygons"] = std::move(arr);
  }
  if (!q.caps.empty()) {
    Json arr = Json::array();
    for (const auto& c : q.caps) {
      Json cj;
      cj["center"] = vec_to_json(c.center.vec());
      cj["radius"] = c.radius;
      arr.push_back(std::move(cj));
    }
    j["caps"] = std::move(arr);
  }
  return j;
}

QuerySet query_from_json(const Json& j) {
  QuerySet q;
  if (j.value("whole_sphere", false)) {
    q.whole_sphere = true;
    return q;
  }
  if (j.contains("points"))
    for (const auto& p : j["points"]) q.points.emplace_back(vec_from_json(p));
  if (j.contains("arcs"))
    for (const auto& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2) throw InputError("query: bad arc");
      q.arcs.emplace_back(UnitVec(vec_from_json(a[0])), UnitVec(vec_from_json(a[1])));
    }
  if (j.contains("polygons"))
    for (const auto& p : j["polygons"]) {
      std::vector<UnitVec> ring;
      for (const auto& v : p) ring.emplace_back(vec_from_json(v));
      q.polygons.emplace_back(std::move(ring));
    }
  if (j.contains("caps"))
    for (const auto& c : j["caps"])
      q.caps.emplace_back(UnitVec(vec_from_json(c.at("center"))), c.at("radius").get<double>());
  if (q.points.empty() && q.arcs.empty() && q.polygons.empty() && q.caps.empty())
    throw InputError("query: empty query set");
  return q;
}

Json region_to_json(const SphericalRegion& r) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(vec_to_json(p.vec()));
  j["points"] = std::move(pts);
  Json arcs = Json::array();
  for (const auto& a : r.arcs)
    arcs.push_back(Json::array({vec_to_json(a.a().vec()), vec_to_json(a.b().vec())}));
  j["arcs"] = std::move(arcs);
  Json polys = Json::array();
  for (const auto& p : r.polygons) {
    Json ring = Json::array();
    for (const auto& v : p.vertices()) ring.push_back(vec_to_json(v.vec()));
    polys.push_back(std::move(ring));
  }
  j["polygons"] = std::move(polys);
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["verdict"] = r.pass ? "pass" : "fail";
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["set"] = w.set_id;
    Json values;
    for (const auto& [k, v] : w.values) values[k] = v;
    wj["values"] = std::move(values);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  Json margins;
  for (const auto& [k, v] : r.margins) margins[k] = v;
  j["margins"] = std::move(margins);
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace gil
