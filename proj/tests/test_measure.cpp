#include <doctest.h>

#include <cmath>

#include "gil/measure.hpp"
#include "gil/rng.hpp"

using namespace gil;

namespace {

SphericalRegion octant_region() {
  SphericalRegion r;
  r.polygons.push_back(SphericalPolygon({e1(), e2(), e3()}));
  return r;
}

QuerySet square_query(std::uint64_t seed) {
  RngStream rng(seed, "measure-square");
  const UnitVec c(rng.sphere());
  Vec3 t1, t2;
  tangent_frame(c.vec(), t1, t2);
  const double s = rng.uniform(0.08, 0.45);
  std::vector<UnitVec> ring;
  for (int k = 0; k < 4; ++k) {
    const double a = kPi / 4 + k * kPi / 2;
    ring.emplace_back(c.vec() + (t1 * std::cos(a) + t2 * std::sin(a)) * s);
  }
  QuerySet q;
  q.polygons.emplace_back(std::move(ring));
  return q;
}

}  // namespace

TEST_CASE("region measure basics") {
  const SphericalMeasure uni = SphericalMeasure::uniform();
  CHECK(region_measure(uni, SphericalRegion{}) == 0.0);
  CHECK(region_measure(uni, octant_region()) == doctest::Approx(kPi / 2).epsilon(1e-12));

  const SphericalRegion whole = gauss_image(make_cube(), QuerySet::all());
  CHECK(region_measure(uni, whole) == doctest::Approx(4.0 * kPi).epsilon(1e-9));

  const SphericalMeasure atoms =
      SphericalMeasure::atoms({{e3(), 1.0}, {UnitVec(0, 0, -1), 1.0}});
  CHECK(region_measure(atoms, octant_region()) == 1.0);
  CHECK(region_measure(atoms, SphericalRegion{}) == 0.0);

  const SphericalMeasure caps = SphericalMeasure::cap_lebesgue({Cap(e3(), 0.3)}, 2.0);
  CHECK(region_measure(caps, octant_region()) ==
        doctest::Approx(2.0 * kPi / 2 * (1.0 - std::cos(0.3))).epsilon(1e-12));
}

TEST_CASE("measure construction validates") {
  CHECK_THROWS_AS(SphericalMeasure::atoms({{e3(), 0.0}}), InputError);
  CHECK_THROWS_AS(SphericalMeasure::atoms({{e3(), 1.0}, {e3(), 2.0}}), InputError);
  CHECK_THROWS_AS(SphericalMeasure::cap_lebesgue({Cap(e3(), 2.0)}, 1.0), InputError);
  CHECK_THROWS_AS(SphericalMeasure::cap_lebesgue({}, 1.0), InputError);
}

TEST_CASE("gauss image measure on the cube") {
  const Polytope c = make_cube();
  const SphericalMeasure uni = SphericalMeasure::uniform();
  CHECK(gauss_image_measure(uni, c, QuerySet::point(UnitVec(1, 1, 1))) ==
        doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(gauss_image_measure(uni, c, QuerySet::all()) == doctest::Approx(4.0 * kPi).epsilon(1e-9));

  std::vector<std::pair<UnitVec, double>> six;
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {-1, 1}) {
      Vec3 v{0, 0, 0};
      (axis == 0 ? v.x : axis == 1 ? v.y : v.z) = sign;
      six.emplace_back(UnitVec(v), 1.0);
    }
  const SphericalMeasure atoms = SphericalMeasure::atoms(six);
  CHECK(gauss_image_measure(atoms, c, QuerySet::cap(Cap(e3(), kPi / 8))) == 1.0);
}

TEST_CASE("symmetric difference distance") {
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const SphericalRegion a = octant_region();
  CHECK(symdiff_distance(uni, a, a) == doctest::Approx(0.0));

  SphericalRegion b;
  b.polygons.push_back(SphericalPolygon({UnitVec(-1, 0, 0), e3(), e2()}));
  CHECK(symdiff_distance(uni, a, b) == doctest::Approx(kPi).epsilon(1e-9));

  const SphericalMeasure atom = SphericalMeasure::atoms({{e3(), 1.0}});
  SphericalRegion pa, pb;
  pa.points.push_back(e3());
  pb.points.push_back(UnitVec(1, 1, 1));
  CHECK(symdiff_distance(atom, pa, pb) == 1.0);
}

TEST_CASE("grid partition tiles the sphere") {
  const SphericalMeasure atoms =
      SphericalMeasure::atoms({{e3(), 1.0}, {UnitVec(0, 0, -1), 1.0}});
  const TestFamily family = grid_partition(0.5, 7, {atoms});
  double area = 0.0;
  double max_diam = 0.0;
  for (const auto& cell : family.cells) {
    area += polygon_area(cell);
    max_diam = std::max(max_diam, cell.diameter());
  }
  CHECK(area == doctest::Approx(4.0 * kPi).epsilon(1e-6));
  CHECK(max_diam < 0.5);

  // Atoms stay clear of every cell boundary.
  for (const auto& [dir, w] : atoms.atom_list()) {
    (void)w;
    for (const auto& cell : family.cells) {
      const int k = cell.size();
      for (int i = 0; i < k; ++i) {
        GeodesicArc edge(cell.vertex(i), cell.vertex((i + 1) % k));
        CHECK(distance_point_arc(dir.vec(), edge) > kGeomEps);
      }
    }
  }

  // Neighbor lists are symmetric and nonempty.
  for (std::size_t i = 0; i < family.cells.size(); ++i) {
    CHECK(!family.neighbors[i].empty());
    for (int j : family.neighbors[i]) {
      const auto& back = family.neighbors[j];
      CHECK(std::find(back.begin(), back.end(), static_cast<int>(i)) != back.end());
    }
  }

  CHECK_THROWS_AS(grid_partition(2.0, 7, {}), InputError);
}

TEST_CASE("submeasure axioms on gauss-image regions") {
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const SphericalMeasure atoms = SphericalMeasure::atoms(
      {{e3(), 0.5}, {UnitVec(0, 0, -1), 1.5}, {UnitVec(1, 1, 0), 2.0}});
  const SphericalMeasure caps = SphericalMeasure::cap_lebesgue(
      {Cap(e3(), 0.4), Cap(UnitVec(1, 0, 1), 0.5)}, 1.25);

  for (int trial = 0; trial < 60; ++trial) {
    const Polytope K = random_polytope(8000 + trial, 12 + (trial % 12));
    const QuerySet w1 = square_query(8100 + trial);
    const QuerySet w2 = square_query(8200 + trial);
    QuerySet both;
    both.polygons = w1.polygons;
    both.polygons.insert(both.polygons.end(), w2.polygons.begin(), w2.polygons.end());

    for (const SphericalMeasure* m : {&uni, &atoms, &caps}) {
      const double m1 = gauss_image_measure(*m, K, w1);
      const double m2 = gauss_image_measure(*m, K, w2);
      const double mu = gauss_image_measure(*m, K, both);
      CHECK(mu >= m1 - 1e-9);             // monotone
      CHECK(mu >= m2 - 1e-9);
      CHECK(mu <= m1 + m2 + 1e-9);        // finitely subadditive
    }
  }
}

TEST_CASE("uniform measure agrees with seeded Monte Carlo") {
  const Polytope K = random_polytope(9100, 20);
  const QuerySet w = square_query(9101);
  const SphericalRegion image = gauss_image(K, w);
  const double area = region_measure(SphericalMeasure::uniform(), image);

  RngStream rng(9102, "measure-mc");
  const int n = 200000;
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (region_contains(image, rng.sphere(), 0.0)) ++hits;
  const double p = static_cast<double>(hits) / n;
  const double sigma = 4.0 * kPi * std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(area - 4.0 * kPi * p) <= 4.0 * sigma);
}

TEST_CASE("cap measure total mass counts overlap once") {
  const SphericalMeasure caps = SphericalMeasure::cap_lebesgue(
      {Cap(e3(), 0.4), Cap(UnitVec(0.2, 0, 1), 0.4)}, 1.0);
  const double total = caps.total_mass();
  RngStream rng(12, "cap-total-mc");
  const int n = 300000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const Vec3 v = rng.sphere();
    if (caps.caps()[0].contains(v, 0.0) || caps.caps()[1].contains(v, 0.0)) ++hits;
  }
  const double p = static_cast<double>(hits) / n;
  const double sigma = 4.0 * kPi * std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(total - 4.0 * kPi * p) <= 4.0 * sigma);
}
