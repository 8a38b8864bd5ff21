#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gil/geo.hpp"
#include "gil/rng.hpp"

namespace gil {

// Arc distance arccos(u.v) in [0, pi].
double arc_distance(const UnitVec& u, const UnitVec& v);

// Radial projection of the chordal interpolation (1-t)u + tv. Parametrizes
// the minor arc; throws AntipodalInputError when the chord passes too close
// to the origin (|.| < 1e-9).
UnitVec geodesic_mean(const UnitVec& u, const UnitVec& v, double t);

// Minor great-circle segment between two non-antipodal endpoints.
class GeodesicArc {
 public:
  GeodesicArc(const UnitVec& a, const UnitVec& b);

  const UnitVec& a() const { return a_; }
  const UnitVec& b() const { return b_; }
  // Unit normal of the supporting great circle (a x b direction).
  const Vec3& pole() const { return pole_; }
  double length() const { return length_; }
  // Point at fraction s in [0,1] along the arc.
  UnitVec point_at(double s) const;

 private:
  UnitVec a_, b_;
  Vec3 pole_;
  double length_ = 0.0;
};

// Convex spherical polygon: CCW vertex ring (seen from outside the sphere),
// contained in an open hemisphere, equal to the intersection of its edge
// half-spaces {v : v.edge_pole(i) >= 0}. The constructor validates convexity
// and the hemisphere condition and reverses a CW input ring.
class SphericalPolygon {
 public:
  explicit SphericalPolygon(std::vector<UnitVec> ring);
  // witness: a direction with strictly positive dot against every vertex
  // (used verbatim when valid). Builders that know one, e.g. the facet
  // normal for a radial facet projection, should pass it: wide polygons can
  // defeat the heuristic witness search.
  SphericalPolygon(std::vector<UnitVec> ring, const UnitVec& witness);

  int size() const { return static_cast<int>(ring_.size()); }
  const std::vector<UnitVec>& vertices() const { return ring_; }
  const UnitVec& vertex(int i) const { return ring_[i]; }
  // Inward-positive unit normal of edge i (from vertex i to vertex i+1).
  const Vec3& edge_pole(int i) const { return poles_[i]; }
  // A point with strictly positive dot against every vertex.
  const UnitVec& inner_point() const { return inner_; }

  bool contains(const Vec3& u, double tol = kGeomEps) const;
  // Geodesic distance to the polygon (0 inside).
  double distance_to(const Vec3& u) const;
  // Max pairwise vertex distance (equals the diameter for convex polygons).
  double diameter() const;

 private:
  std::vector<UnitVec> ring_;
  std::vector<Vec3> poles_;
  UnitVec inner_;
};

// Girard angle-excess area: sum of interior angles minus (k-2)pi.
double polygon_area(const SphericalPolygon& p);

// Open cap {v : center.v > cos(radius)}, radius in (0, pi).
struct Cap {
  UnitVec center;
  double radius = 0.0;

  Cap(const UnitVec& c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !(r < kPi)) throw InputError("Cap: radius must lie in (0, pi)");
  }
  bool contains(const Vec3& u, double tol = kGeomEps) const {
    return dot(center.vec(), u) >= std::cos(radius) - tol;
  }
};

// Stratified closed subset of S^2. Only the polygon stratum carries area;
// polygons of one region are expected to have pairwise disjoint interiors
// (gauss images and stratum intersections produce exactly that), except
// where a function documents otherwise.
struct SphericalRegion {
  std::vector<UnitVec> points;
  std::vector<GeodesicArc> arcs;
  std::vector<SphericalPolygon> polygons;

  bool empty() const { return points.empty() && arcs.empty() && polygons.empty(); }
  void append(const SphericalRegion& other);
};

// Removes duplicate points/arcs/polygons (within tol); keeps first copies.
SphericalRegion deduplicated(const SphericalRegion& r, double tol = kGeomEps);

bool point_on_arc(const Vec3& u, const GeodesicArc& arc, double tol = kGeomEps);
double distance_point_arc(const Vec3& u, const GeodesicArc& arc);
bool arcs_intersect(const GeodesicArc& p, const GeodesicArc& q, double tol = kGeomEps);
bool arc_intersects_polygon(const GeodesicArc& arc, const SphericalPolygon& poly,
                            double tol = kGeomEps);
bool polygons_intersect(const SphericalPolygon& p, const SphericalPolygon& q,
                        double tol = kGeomEps);
bool cap_intersects_arc(const Cap& c, const GeodesicArc& arc, double tol = kGeomEps);
bool cap_intersects_polygon(const Cap& c, const SphericalPolygon& poly, double tol = kGeomEps);

bool region_contains(const SphericalRegion& r, const Vec3& u, double tol = kGeomEps);
double distance_to_region(const Vec3& u, const SphericalRegion& r);

// Query subset of S^2 for gauss-image style operations: a finite union of
// points, arcs, convex polygons and caps, or the whole sphere.
struct QuerySet {
  std::vector<UnitVec> points;
  std::vector<GeodesicArc> arcs;
  std::vector<SphericalPolygon> polygons;
  std::vector<Cap> caps;
  bool whole_sphere = false;

  static QuerySet point(const UnitVec& u);
  static QuerySet arc(const GeodesicArc& a);
  static QuerySet polygon(const SphericalPolygon& p);
  static QuerySet polygon_list(std::vector<SphericalPolygon> ps);
  static QuerySet cap(const Cap& c);
  static QuerySet all();
  // The edge arcs of a polygon (its topological boundary).
  static QuerySet boundary_of(const SphericalPolygon& p);

  // Closed-set semantics throughout: boundaries included, caps closed.
  bool contains(const Vec3& u, double tol = kGeomEps) const;
  bool meets_arc(const GeodesicArc& a, double tol = kGeomEps) const;
  bool meets_polygon(const SphericalPolygon& p, double tol = kGeomEps) const;
};

// Polar set {v : u.v <= 0 for all generators u}, as a stratified region.
// Wide results (hemispheres, lunes) are split into valid convex polygons.
SphericalRegion polar_set(std::span<const UnitVec> generators);
SphericalRegion polar_set(const SphericalPolygon& p);

// --- Area engine -----------------------------------------------------------

// Half-space constraint {v in S^2 : v.normal >= offset} with |normal| = 1 and
// offset in (-1, 1). offset = 0 encodes a hemisphere bounded by a great
// circle, offset = cos(r) the cap of angular radius r.
struct HalfSpace {
  Vec3 normal;
  double offset = 0.0;
};

// Area of the intersection of half-space constraints, via Gauss-Bonnet over
// the assembled boundary (geodesic and small-circle pieces). Exact up to
// floating error for connected intersections; all constraints with
// offset >= 0 (geodesically convex pieces) guarantee connectedness.
double intersection_area(std::vector<HalfSpace> constraints);

// Clips a vertex ring against {v : v.pole >= 0}; closed semantics.
std::vector<UnitVec> clip_ring(const std::vector<UnitVec>& ring, const Vec3& pole,
                               double tol = kGeomEps);

// Girard area of a raw convex ring without full validation (clip residue).
double ring_area(const std::vector<UnitVec>& ring);

// Area of p intersect q (0 when disjoint or lower-dimensional).
double polygon_overlap_area(const SphericalPolygon& p, const SphericalPolygon& q);

// Area of ring intersected with the union of the caps (inclusion-exclusion
// over cap subsets). Caps must have radius < pi/2.
double ring_caps_area(const std::vector<UnitVec>& ring, std::span<const Cap> caps);

// --- Region-level operations ------------------------------------------------

// Stratified intersection of two regions (pairwise stratum intersections,
// classified back into points/arcs/polygons).
SphericalRegion intersect_regions(const SphericalRegion& a, const SphericalRegion& b,
                                  double tol = kGeomEps);

// sup_{x in from} d(x, to), within additive error <= res (branch-and-bound
// refinement over the strata of `from`). Throws EmptyRegionError.
double directed_hausdorff(const SphericalRegion& from, const SphericalRegion& to, double res);

// max of the two directed distances; additive error <= res.
double hausdorff_distance(const SphericalRegion& a, const SphericalRegion& b, double res);

// Stratum-by-stratum equality within tol (points/arcs/polygons matched as
// sets; polygon rings matched up to rotation).
bool regions_equal(const SphericalRegion& a, const SphericalRegion& b, double tol = kGeomEps);

// True when every stratum of `inner` appears among the strata of `outer`.
bool region_strata_subset(const SphericalRegion& inner, const SphericalRegion& outer,
                          double tol = kGeomEps);

// Spherical convex hull of directions contained in an open hemisphere,
// via gnomonic projection. Returns a region (point / arc / polygon depending
// on the affine dimension of the input).
SphericalRegion spherical_convex_hull(std::span<const UnitVec> dirs);

// Uniform sample in a convex polygon (rejection from its bounding cap).
UnitVec sample_polygon(const SphericalPolygon& p, RngStream& rng);

// Area-weighted uniform sample over the polygon stratum of a region.
// Returns nullopt when the region has no polygon stratum.
std::optional<UnitVec> sample_region_area(const SphericalRegion& r, RngStream& rng);

}  // namespace gil
