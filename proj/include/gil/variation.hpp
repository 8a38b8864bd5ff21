#pragma once

#include <cstdint>
#include <vector>

#include "gil/gauss_image.hpp"
#include "gil/polytope.hpp"
#include "gil/report.hpp"

namespace gil {

// Harmonic mean ((1-t)K* + tL*)*: the dual-linear interpolation path.
Polytope harmonic_mean(const Polytope& K, const Polytope& L, double t);

// Cached bodies along a uniform t-grid (endpoints included).
struct HarmonicPath {
  std::vector<double> t_grid;
  std::vector<Polytope> bodies;
};
HarmonicPath make_harmonic_path(const Polytope& K, const Polytope& L, int t_count);

// gauss_image of the harmonic mean at parameter t; reproduces the endpoint
// images exactly at t = 0 and t = 1.
SphericalRegion variation_image(const Polytope& K, const Polytope& L, double t,
                                const QuerySet& w);

// Lipschitz constant (2/sin alpha) * max(|u1|/|u2|, |u2|/|u1|) for the
// projected chord g(t) = P((1-t)u1 + tu2), valid whenever both normalized
// inputs fit in a common cap of radius pi/2 - alpha. Throws
// HemisphereViolationError when they do not.
double geodesic_lipschitz_bound(const Vec3& u1, const Vec3& u2, double alpha);

struct GeodesicLipschitzCheck {
  double bound = 0.0;
  double max_ratio = 0.0;
  bool pass = false;
};
// Evaluates g on a t-grid and compares consecutive step ratios to the bound.
GeodesicLipschitzCheck geodesic_lipschitz_check(const Vec3& u1, const Vec3& u2, double alpha,
                                                int grid_points);

// 2 max(R_K/r_K, R_L/r_L) max(R_K/r_L, R_L/r_K): the Hausdorff-Lipschitz
// constant of the harmonic-mean variation of the image regions.
double variation_lipschitz_bound(const Polytope& K, const Polytope& L);

struct LipschitzScanRow {
  double t = 0.0;           // left endpoint of the step
  double d_hausdorff = 0.0; // d_H between consecutive images
  double ratio = 0.0;       // d_hausdorff / step
  double bound = 0.0;
};
struct LipschitzScan {
  std::vector<LipschitzScanRow> rows;
  double bound = 0.0;
  double max_ratio = 0.0;
  double slack = 0.0;  // sampling allowance res/step added to the bound
  bool pass = false;
};
// Images of w along the harmonic path; consecutive Hausdorff distances at
// resolution res; passes iff every ratio stays within bound + res/step.
LipschitzScan lipschitz_scan(const Polytope& K, const Polytope& L, const QuerySet& w,
                             int t_count, double res);

// Samples the symmetric difference of the endpoint images of gamma (minus
// the boundary images) and verifies each sample is swept by some
// intermediate image of gamma's boundary. Pass threshold:
// bound/t_count + res.
CheckReport sweep_inclusion_check(const Polytope& K, const Polytope& L,
                                  const SphericalPolygon& gamma, int t_count, int samples,
                                  double res, std::uint64_t seed);

// Geodesic joins of stratum pairs (spherical hulls); polygons of the result
// may overlap, so it is meant for distance checks, not measures.
SphericalRegion geodesic_join(const SphericalRegion& a, const SphericalRegion& b);

// Union-over-t comparison for a point query u: the union of intermediate
// images along the path against the geodesic join of the endpoint images,
// compared in Hausdorff distance with budget res + bound * step.
CheckReport variation_union_check(const Polytope& K, const Polytope& L, const UnitVec& u,
                                  int t_count, double res);

}  // namespace gil
