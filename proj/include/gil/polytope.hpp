#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gil/sphere.hpp"

namespace gil {

struct Facet {
  Vec3 normal;          // unit outer normal
  double offset = 0.0;  // facet plane x.normal = offset; offset > 0 (origin interior)
  std::vector<int> ring;  // CCW vertex indices seen from outside
};

struct Edge {
  int v0 = 0, v1 = 0;  // endpoint vertex indices
  int f0 = 0, f1 = 0;  // the two adjacent facets
};

// Radial projections of the faces and their normal cones on S^2, built once
// per body and immutable afterwards.
struct FaceComplex {
  std::vector<SphericalPolygon> facet_proj;   // per facet
  std::vector<GeodesicArc> edge_proj;         // per edge
  std::vector<GeodesicArc> edge_normal_arc;   // per edge: arc between the adjacent facet normals
  std::vector<UnitVec> vertex_dir;            // per vertex
  std::vector<SphericalPolygon> vertex_cone;  // per vertex: normal cone polygon
};

struct RadiiPair {
  double inradius = 0.0;      // largest origin-centered ball inside
  double circumradius = 0.0;  // smallest origin-centered ball containing
};

// Convex polytope with the origin strictly interior. Validated on
// construction; immutable afterwards (copies share the payload).
class Polytope {
 public:
  const std::vector<Vec3>& vertices() const { return data_->vertices; }
  const std::vector<Facet>& facets() const { return data_->facets; }
  const std::vector<Edge>& edges() const { return data_->edges; }
  // Facets incident to each vertex, in rotation order around the vertex.
  const std::vector<std::vector<int>>& vertex_facets() const { return data_->vertex_facets; }
  const FaceComplex& complex() const { return data_->complex; }

  int num_vertices() const { return static_cast<int>(data_->vertices.size()); }
  int num_facets() const { return static_cast<int>(data_->facets.size()); }

  struct Data {
    std::vector<Vec3> vertices;
    std::vector<Facet> facets;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> vertex_facets;
    FaceComplex complex;
    RadiiPair radii;
  };
  explicit Polytope(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

 private:
  std::shared_ptr<const Data> data_;
};

// Convex hull of the points; merges coplanar facets, derives incidence and
// the face complex, validates the origin-interior invariants.
Polytope make_polytope(const std::vector<Vec3>& points);

// max{x.y : y in K}; positively homogeneous of degree 1.
double support(const Polytope& K, const Vec3& x);

// max{a : a u in K} = min over facets with u.n > 0 of offset/(u.n).
double radial(const Polytope& K, const UnitVec& u);

// Polar body: vertices become facet planes x.v = 1, facets (n, h) become
// vertices n/h. Built as a fresh hull of the dual vertex set.
Polytope polar(const Polytope& K);

RadiiPair radii(const Polytope& K);

enum class FaceKind { Vertex, Edge, Facet };

struct SupportSet {
  FaceKind kind = FaceKind::Vertex;
  std::vector<int> vertex_indices;  // vertices of F(K, v)
  std::vector<Vec3> points;
};

// F(K, v) = H_K(v) intersect K: facet, edge or vertex depending on v.
SupportSet facet_region(const Polytope& K, const UnitVec& v);

// Minkowski combination (1-t)A + tB; support function is the blend of the
// two support functions. t = 0 and t = 1 return the inputs unchanged.
Polytope convex_combination(const Polytope& A, const Polytope& B, double t);

// Dilation about the origin. Preserves the combinatorial structure and the
// spherical face complex verbatim (directions are scale-invariant).
Polytope scale(const Polytope& K, double c);

Polytope make_cube(double half_side = 1.0);
Polytope make_cross_polytope(double c = 1.0);
// conv{(+-1,+-1,1), (+-2,+-2,-2)}.
Polytope make_frustum();
// Ball-like polytope: subdivided icosahedron projected to the unit sphere.
Polytope make_ball_approximation(int subdivisions);
// Hull of m points on a seeded random ellipsoid shell, re-centered so the
// origin is comfortably interior; resamples on degenerate draws.
Polytope random_polytope(std::uint64_t seed, int num_points);

}  // namespace gil
