#pragma once

#include <string>

#include <json.hpp>

#include "gil/measure.hpp"
#include "gil/rational.hpp"
#include "gil/report.hpp"

namespace gil {

// Ordered JSON keeps key insertion order, so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// Body format: {"vertices": [[x,y,z], ...]}; hull and incidence derive on
// load. Rational bodies additionally carry "vertices_rational" with exact
// "p/q" strings.
Json body_to_json(const Polytope& K);
Polytope body_from_json(const Json& j);
Json rational_body_to_json(const RationalPolytope& K);
RationalPolytope rational_body_from_json(const Json& j);

// Measure format:
//   {"kind":"atoms","atoms":[{"dir":[x,y,z],"w":w},...]}
// | {"kind":"uniform"}
// | {"kind":"cap_lebesgue","caps":[{"center":[x,y,z],"radius":r},...],"density":d}
Json measure_to_json(const SphericalMeasure& m);
SphericalMeasure measure_from_json(const Json& j);

// Query format: {"points":[...], "arcs":[[[..],[..]],...], "polygons":[[..],...],
// "caps":[{"center":[..],"radius":r},...], "whole_sphere":bool}; all keys optional.
Json query_to_json(const QuerySet& q);
QuerySet query_from_json(const Json& j);

// Regions serialize as stratum lists.
Json region_to_json(const SphericalRegion& r);

Json report_to_json(const CheckReport& r);

Json load_json(const std::string& path);
void write_json(const std::string& path, const Json& j);

}  // namespace gil
