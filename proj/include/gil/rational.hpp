#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gil/polytope.hpp"

namespace gil {

using Rational = boost::multiprecision::cpp_rational;

struct RVec3 {
  Rational x, y, z;
};

inline RVec3 operator+(const RVec3& a, const RVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline RVec3 operator-(const RVec3& a, const RVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline RVec3 operator/(const RVec3& a, const Rational& s) { return {a.x / s, a.y / s, a.z / s}; }
inline Rational rdot(const RVec3& a, const RVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline RVec3 rcross(const RVec3& a, const RVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool requal(const RVec3& a, const RVec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
inline Vec3 to_double(const RVec3& v) {
  return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.z)};
}

struct RationalFacet {
  RVec3 normal;     // unnormalized outer normal
  Rational offset;  // plane x.normal = offset, offset > 0
  std::vector<int> ring;
};

// Exact-arithmetic polytope kernel. Predicates are exact; normals stay
// unnormalized rationals and are normalized only when exported to the
// floating kernel.
class RationalPolytope {
 public:
  RationalPolytope(std::vector<RVec3> vertices, std::vector<RationalFacet> facets)
      : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  const std::vector<RVec3>& vertices() const { return vertices_; }
  const std::vector<RationalFacet>& facets() const { return facets_; }

 private:
  std::vector<RVec3> vertices_;
  std::vector<RationalFacet> facets_;
};

RationalPolytope make_rational_polytope(const std::vector<RVec3>& points);

// Exact polar: facets (n, h) become vertices n/h, vertices become facet
// planes; built as a fresh exact hull of the dual vertex set.
RationalPolytope rational_polar(const RationalPolytope& K);

// Exact equality of vertex sets (order-insensitive).
bool same_vertex_set(const RationalPolytope& a, const RationalPolytope& b);

Rational rational_support(const RationalPolytope& K, const RVec3& x);

// Floating-kernel view of the same body.
Polytope to_polytope(const RationalPolytope& K);

// Exact rational from a decimal string ("-1.25", "3", "7/2").
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// Random points on an ellipsoid shell snapped to dyadic rationals
// (denominator 2^20), re-centered so the origin is interior.
std::vector<RVec3> random_rational_points(std::uint64_t seed, int num_points);

}  // namespace gil
