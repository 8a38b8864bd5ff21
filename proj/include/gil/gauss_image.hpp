#pragma once

#include <vector>

#include "gil/polytope.hpp"
#include "gil/report.hpp"

namespace gil {

// Multivalued radial Gauss image of a query set: the union of normal cones
// over all boundary points radially hit by the query. For a polytope the
// result is stratified exactly as facet-normal points, edge-normal arcs and
// vertex normal-cone polygons. Closed-set semantics throughout.
SphericalRegion gauss_image(const Polytope& K, const QuerySet& w);

// Reverse map: directions of boundary points supported by some normal in the
// query. Computed directly from the body's own face complex; agrees with
// gauss_image(polar(K), w).
SphericalRegion reverse_gauss_image(const Polytope& K, const QuerySet& w);

// Normal cone at a boundary point: facet normal, edge arc or vertex cone.
// Throws NotOnBoundaryError when x is farther than kGeomEps from the
// boundary (relative to the body scale).
SphericalRegion normal_cone(const Polytope& K, const Vec3& x);

// Samples the topological boundary of gauss_image(K, w) and measures how far
// the samples stray from gauss_image(K, boundary of w). The containment
// holds for every convex body; the report carries the worst violation.
CheckReport boundary_inclusion_check(const Polytope& K, const SphericalPolygon& w, int samples);

// d_H(image of the delta-cap around u, image of u) for each delta, at
// sampling resolution res. Values must shrink to 0 with delta.
std::vector<std::pair<double, double>> continuity_probe(const Polytope& K, const UnitVec& u,
                                                        const std::vector<double>& deltas,
                                                        double res);

}  // namespace gil
