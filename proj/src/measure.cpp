#include "gil/measure.hpp"

#include <algorithm>
#include <cmath>

#include "gil/rng.hpp"

namespace gil {

SphericalMeasure SphericalMeasure::atoms(std::vector<std::pair<UnitVec, double>> atoms) {
  SphericalMeasure m;
  m.kind_ = Kind::Atoms;
  for (const auto& [dir, w] : atoms) {
    if (!(w > 0.0)) throw InputError("SphericalMeasure: atom weights must be positive");
    for (const auto& [other, w2] : m.atoms_) {
      (void)w2;
      if (arc_distance(dir, other) <= kGeomEps)
        throw InputError("SphericalMeasure: atom directions must be distinct");
    }
    m.atoms_.emplace_back(dir, w);
  }
  return m;
}

SphericalMeasure SphericalMeasure::uniform() {
  SphericalMeasure m;
  m.kind_ = Kind::Uniform;
  return m;
}

SphericalMeasure SphericalMeasure::cap_lebesgue(std::vector<Cap> caps, double density) {
  if (caps.empty()) throw InputError("SphericalMeasure: cap list must be nonempty");
  if (!(density >= 0.0)) throw InputError("SphericalMeasure: density must be nonnegative");
  for (const auto& c : caps)
    if (c.radius >= kPi / 2)
      throw InputError("SphericalMeasure: cap radius must be below pi/2");
  SphericalMeasure m;
  m.kind_ = Kind::CapLebesgue;
  m.caps_ = std::move(caps);
  m.density_ = density;
  return m;
}

double SphericalMeasure::total_mass() const {
  switch (kind_) {
    case Kind::Atoms: {
      double s = 0.0;
      for (const auto& [d, w] : atoms_) {
        (void)d;
        s += w;
      }
      return s;
    }
    case Kind::Uniform:
      return 4.0 * kPi;
    case Kind::CapLebesgue: {
      // Mass of the cap union, overlap counted once (inclusion-exclusion).
      double s = 0.0;
      const int n = static_cast<int>(caps_.size());
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<HalfSpace> cs;
        int bits = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1u) {
            cs.push_back({caps_[i].center.vec(), std::cos(caps_[i].radius)});
            ++bits;
          }
        const double a = intersection_area(std::move(cs));
        s += (bits % 2 == 1) ? a : -a;
      }
      return density_ * s;
    }
  }
  return 0.0;
}

double region_measure(const SphericalMeasure& m, const SphericalRegion& r) {
  switch (m.kind()) {
    case SphericalMeasure::Kind::Atoms: {
      double s = 0.0;
      for (const auto& [dir, w] : m.atom_list())
        if (region_contains(r, dir.vec())) s += w;
      return s;
    }
    case SphericalMeasure::Kind::Uniform: {
      double s = 0.0;
      for (const auto& p : r.polygons) s += polygon_area(p);
      return s;
    }
    case SphericalMeasure::Kind::CapLebesgue: {
      double s = 0.0;
      for (const auto& p : r.polygons) s += ring_caps_area(p.vertices(), m.caps());
      return m.density() * s;
    }
  }
  return 0.0;
}

double gauss_image_measure(const SphericalMeasure& m, const Polytope& K, const QuerySet& w) {
  return region_measure(m, gauss_image(K, w));
}

namespace {

double lebesgue_overlap(const SphericalMeasure& m, const SphericalPolygon& a,
                        const SphericalPolygon& b) {
  std::vector<UnitVec> ring = a.vertices();
  for (int i = 0; i < b.size() && !ring.empty(); ++i) ring = clip_ring(ring, b.edge_pole(i));
  if (ring.size() < 3) return 0.0;
  if (m.kind() == SphericalMeasure::Kind::Uniform) return ring_area(ring);
  return m.density() * ring_caps_area(ring, m.caps());
}

double lebesgue_mass(const SphericalMeasure& m, const SphericalPolygon& p) {
  if (m.kind() == SphericalMeasure::Kind::Uniform) return polygon_area(p);
  return m.density() * ring_caps_area(p.vertices(), m.caps());
}

}  // namespace

double symdiff_distance(const SphericalMeasure& m, const SphericalRegion& a,
                        const SphericalRegion& b) {
  if (m.kind() == SphericalMeasure::Kind::Atoms) {
    double s = 0.0;
    for (const auto& [dir, w] : m.atom_list()) {
      const bool ina = region_contains(a, dir.vec());
      const bool inb = region_contains(b, dir.vec());
      if (ina != inb) s += w;
    }
    return s;
  }
  // Lebesgue kinds: area(A) + area(B) - 2 area(A and B) over the polygon
  // strata (interior-disjoint within each region).
  double sum = 0.0;
  for (const auto& p : a.polygons) sum += lebesgue_mass(m, p);
  for (const auto& p : b.polygons) sum += lebesgue_mass(m, p);
  double overlap = 0.0;
  for (const auto& p : a.polygons)
    for (const auto& q : b.polygons) overlap += lebesgue_overlap(m, p, q);
  const double s = sum - 2.0 * overlap;
  return s < 0.0 ? 0.0 : s;
}

namespace {

// Geodesic tiling with shared vertices: triangles around each pole, quads in
// the bands between consecutive latitude rings.
std::vector<std::vector<Vec3>> base_tiling(int n_lat, int n_lon) {
  std::vector<std::vector<Vec3>> cells;
  auto at = [&](int i, int j) {
    const double theta = kPi * i / n_lat;
    const double phi = 2.0 * kPi * (j % n_lon) / n_lon;  // shared vertices bitwise identical
    return Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                std::cos(theta)};
  };
  const Vec3 north{0, 0, 1}, south{0, 0, -1};
  for (int j = 0; j < n_lon; ++j)
    cells.push_back({north, at(1, j), at(1, j + 1)});
  for (int i = 1; i + 1 < n_lat; ++i)
    for (int j = 0; j < n_lon; ++j)
      cells.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
  for (int j = 0; j < n_lon; ++j)
    cells.push_back({south, at(n_lat - 1, j + 1), at(n_lat - 1, j)});
  return cells;
}

double cell_diameter(const std::vector<Vec3>& cell) {
  double d = 0.0;
  for (std::size_t i = 0; i < cell.size(); ++i)
    for (std::size_t j = i + 1; j < cell.size(); ++j)
      d = std::max(d, std::acos(clamp_unit(dot(cell[i], cell[j]))));
  return d;
}

}  // namespace

std::vector<UnitVec> avoidance_directions(const Polytope& K) {
  std::vector<UnitVec> out;
  for (const auto& f : K.facets()) out.emplace_back(f.normal);
  for (const auto& d : K.complex().vertex_dir) out.push_back(d);
  return out;
}

TestFamily grid_partition(double max_diameter, std::uint64_t seed,
                          const std::vector<SphericalMeasure>& respect,
                          const std::vector<UnitVec>& avoid_dirs) {
  if (!(max_diameter > 0.0) || !(max_diameter < kPi / 2))
    throw InputError("grid_partition: max_diameter must lie in (0, pi/2)");

  // Refine the base tiling until every diameter clears the bound.
  int n_lat = std::max(3, static_cast<int>(std::ceil(kPi / max_diameter)) + 1);
  std::vector<std::vector<Vec3>> cells;
  for (;; ++n_lat) {
    const int n_lon = 2 * n_lat;
    cells = base_tiling(n_lat, n_lon);
    double worst = 0.0;
    for (const auto& c : cells) worst = std::max(worst, cell_diameter(c));
    if (worst < max_diameter) break;
    if (n_lat > 4096) throw PartitionFailureError("grid_partition: refinement runaway");
  }

  std::vector<UnitVec> clear_list = avoid_dirs;
  for (const auto& m : respect)
    for (const auto& [dir, w] : m.atom_list()) {
      (void)w;
      clear_list.push_back(dir);
    }

  const double margin = 1e-6;
  for (int attempt = 0; attempt < 100; ++attempt) {
    RngStream rng(seed, "grid-partition-rotation", static_cast<std::uint64_t>(attempt));
    const Mat3 rot = rng.rotation();
    std::vector<SphericalPolygon> polys;
    polys.reserve(cells.size());
    bool valid = true;
    for (const auto& c : cells) {
      std::vector<UnitVec> ring;
      ring.reserve(c.size());
      for (const auto& v : c) ring.emplace_back(rot.apply(v));
      try {
        polys.emplace_back(std::move(ring));
      } catch (const Error&) {
        valid = false;
        break;
      }
    }
    if (!valid) continue;

    // Boundaries must stay clear of atoms and avoid-directions.
    for (const auto& dir : clear_list) {
      for (const auto& p : polys) {
        const int k = p.size();
        for (int i = 0; i < k && valid; ++i) {
          GeodesicArc edge(p.vertex(i), p.vertex((i + 1) % k));
          valid = distance_point_arc(dir.vec(), edge) > margin;
        }
        if (!valid) break;
      }
      if (!valid) break;
    }
    if (!valid) continue;

    TestFamily family;
    family.cells = std::move(polys);
    family.max_diameter = max_diameter;
    family.seed = seed;
    family.kept_clear = clear_list;

    // Edge-sharing neighbors via quantized shared vertex pairs.
    const int n = static_cast<int>(family.cells.size());
    family.neighbors.resize(n);
    auto share_edge = [&](const SphericalPolygon& a, const SphericalPolygon& b) {
      int shared = 0;
      for (const auto& va : a.vertices())
        for (const auto& vb : b.vertices())
          if (distance(va.vec(), vb.vec()) < 1e-12) {
            ++shared;
            break;
          }
      return shared >= 2;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (share_edge(family.cells[i], family.cells[j])) {
          family.neighbors[i].push_back(j);
          family.neighbors[j].push_back(i);
        }
    return family;
  }
  throw PartitionFailureError("grid_partition: no admissible rotation in 100 attempts");
}

}  // namespace gil
