#pragma once

#include <cstdint>
#include <vector>

#include "gil/gauss_image.hpp"
#include "gil/polytope.hpp"

namespace gil {

// Spherical measure: finitely many atoms, the uniform Lebesgue measure
// (total mass 4pi), or constant-density Lebesgue restricted to a union of
// caps (overlap counted once). All instances are countably additive.
class SphericalMeasure {
 public:
  enum class Kind { Atoms, Uniform, CapLebesgue };

  static SphericalMeasure atoms(std::vector<std::pair<UnitVec, double>> atoms);
  static SphericalMeasure uniform();
  // Caps must have radius < pi/2 (the area evaluator works on geodesically
  // convex pieces); density >= 0.
  static SphericalMeasure cap_lebesgue(std::vector<Cap> caps, double density);

  Kind kind() const { return kind_; }
  const std::vector<std::pair<UnitVec, double>>& atom_list() const { return atoms_; }
  const std::vector<Cap>& caps() const { return caps_; }
  double density() const { return density_; }
  double total_mass() const;

 private:
  SphericalMeasure() = default;
  Kind kind_ = Kind::Uniform;
  std::vector<std::pair<UnitVec, double>> atoms_;
  std::vector<Cap> caps_;
  double density_ = 1.0;
};

// Mass of a stratified region. Atoms use closed membership in any stratum;
// Lebesgue kinds integrate over the polygon stratum only (points and arcs
// are null). Polygons of the region must have pairwise disjoint interiors.
double region_measure(const SphericalMeasure& m, const SphericalRegion& r);

// Pullback evaluation: measure of gauss_image(K, w).
double gauss_image_measure(const SphericalMeasure& m, const Polytope& K, const QuerySet& w);

// Mass of the symmetric difference A triangle B.
double symdiff_distance(const SphericalMeasure& m, const SphericalRegion& a,
                        const SphericalRegion& b);

// Finite family of convex cells tiling the sphere, every diameter below the
// bound, built from a seeded rotation that keeps the supplied atoms and
// avoid-directions clear of all cell boundaries.
struct TestFamily {
  std::vector<SphericalPolygon> cells;
  double max_diameter = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> neighbors;  // edge-sharing cells
  std::vector<UnitVec> kept_clear;          // directions verified off the boundaries

  QuerySet cell_query(int i) const { return QuerySet::polygon(cells[i]); }
};

// Longitude-latitude style tiling by geodesic quads (triangles at the
// poles), refined until every diameter is below max_diameter, then rotated
// by seeded attempts until no atom of any measure and no avoid direction
// lies on a cell boundary. Throws PartitionFailureError after 100 attempts.
TestFamily grid_partition(double max_diameter, std::uint64_t seed,
                          const std::vector<SphericalMeasure>& respect,
                          const std::vector<UnitVec>& avoid_dirs = {});

// Facet normals and vertex directions of a body, for grid_partition's
// avoid list.
std::vector<UnitVec> avoidance_directions(const Polytope& K);

}  // namespace gil
