#include <doctest.h>

#include <cmath>

#include "gil/rng.hpp"
#include "gil/variation.hpp"

using namespace gil;

namespace {

double vertex_set_distance(const Polytope& A, const Polytope& B) {
  auto one_sided = [](const Polytope& P, const Polytope& Q) {
    double worst = 0.0;
    for (const auto& v : P.vertices()) {
      double best = 1e300;
      for (const auto& w : Q.vertices()) best = std::min(best, distance(v, w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(A, B), one_sided(B, A));
}

SphericalPolygon square_around_e3(double scale) {
  const double c = scale;
  return SphericalPolygon(
      {UnitVec(c, c, 1), UnitVec(-c, c, 1), UnitVec(-c, -c, 1), UnitVec(c, -c, 1)});
}

}  // namespace

TEST_CASE("harmonic mean endpoints and dilates") {
  const Polytope c = make_cube();
  for (double t : {0.0, 0.25, 0.5, 1.0})
    CHECK(vertex_set_distance(harmonic_mean(c, c, t), c) < 1e-9);
  // ((1/2)C* + (1/6)C*)* = (3/2)C
  CHECK(vertex_set_distance(harmonic_mean(c, scale(c, 3.0), 0.5), scale(c, 1.5)) < 1e-9);
}

TEST_CASE("harmonic mean dual support blends the dual supports") {
  const Polytope c = make_cube();
  const Polytope x = make_cross_polytope();
  const Polytope h = harmonic_mean(c, x, 0.5);
  const Polytope hd = polar(h);
  const Polytope cd = polar(c);
  const Polytope xd = polar(x);
  RngStream rng(400, "harmonic-dual");
  for (int i = 0; i < 1000; ++i) {
    const Vec3 u = rng.sphere();
    CHECK(support(hd, u) ==
          doctest::Approx(0.5 * support(cd, u) + 0.5 * support(xd, u)).epsilon(1e-9));
  }
}

TEST_CASE("harmonic path caches endpoint bodies") {
  const Polytope c = make_cube();
  const Polytope x = scale(make_cross_polytope(), 2.0);
  const HarmonicPath path = make_harmonic_path(c, x, 5);
  REQUIRE(path.bodies.size() == 5);
  CHECK(vertex_set_distance(path.bodies.front(), c) < 1e-9);
  CHECK(vertex_set_distance(path.bodies.back(), x) < 1e-9);
  const RadiiPair mid = radii(path.bodies[2]);
  CHECK(mid.inradius > 0.0);
}

TEST_CASE("variation image endpoints equal the plain images") {
  const Polytope c = make_cube();
  const Polytope x = scale(make_cross_polytope(), 2.0);
  const QuerySet corner = QuerySet::point(UnitVec(1, 1, 1));
  CHECK(regions_equal(variation_image(c, x, 0.0, corner), gauss_image(c, corner), 1e-9));
  CHECK(regions_equal(variation_image(c, x, 1.0, corner), gauss_image(x, corner), 1e-9));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Polytope A = random_polytope(9800 + seed, 12);
    const Polytope B = random_polytope(9900 + seed, 15);
    RngStream rng(9700 + seed, "variation-endpoint");
    const QuerySet w = QuerySet::point(UnitVec(rng.sphere()));
    CHECK(regions_equal(variation_image(A, B, 0.0, w), gauss_image(A, w), 1e-7));
    CHECK(regions_equal(variation_image(A, B, 1.0, w), gauss_image(B, w), 1e-7));
  }
}

TEST_CASE("geodesic lipschitz bound values") {
  // Constant path.
  const GeodesicLipschitzCheck trivial =
      geodesic_lipschitz_check(e3().vec(), e3().vec(), 0.3, 1000);
  CHECK(trivial.pass);
  CHECK(trivial.max_ratio == doctest::Approx(0.0));

  // Quarter arc with alpha = pi/4: bound 2 sqrt(2). The endpoint pair gives
  // ratio pi/2; the chordal parametrization peaks at speed 2 near t = 1/2,
  // still below the bound.
  const double alpha = kPi / 4;
  CHECK(geodesic_lipschitz_bound(e1().vec(), e2().vec(), alpha) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(arc_distance(e1(), e2()) / 1.0 == doctest::Approx(kPi / 2));
  const GeodesicLipschitzCheck quarter =
      geodesic_lipschitz_check(e1().vec(), e2().vec(), alpha, 1000);
  CHECK(quarter.pass);
  CHECK(quarter.max_ratio == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(quarter.max_ratio < quarter.bound);

  // Unequal norms scale the constant.
  CHECK(geodesic_lipschitz_bound(e1().vec(), 3.0 * e2().vec(), alpha) ==
        doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(geodesic_lipschitz_check(e1().vec(), 3.0 * e2().vec(), alpha, 1000).pass);

  CHECK_THROWS_AS(geodesic_lipschitz_bound(e1().vec(), Vec3{-1, 0.01, 0}, kPi / 4),
                  HemisphereViolationError);
}

TEST_CASE("geodesic lipschitz bound on seeded triples") {
  RngStream rng(2024, "lipschitz-triples");
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = rng.uniform(0.2, 4.0) * rng.sphere();
    Vec3 b = rng.uniform(0.2, 4.0) * rng.sphere();
    const double sep = std::acos(clamp_unit(dot(a, b) / (norm(a) * norm(b))));
    const double amax = (kPi - sep) / 2.0;
    if (amax < 0.05) continue;
    const double alpha = amax * rng.uniform(0.3, 0.95);
    CHECK(geodesic_lipschitz_check(a, b, alpha, 1000).pass);
  }
}

TEST_CASE("variation lipschitz constant from radii") {
  const Polytope c = make_cube();
  const Polytope x2 = scale(make_cross_polytope(), 2.0);
  CHECK(variation_lipschitz_bound(c, x2) == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("lipschitz scan on identical and dilated bodies") {
  const Polytope c = make_cube();
  const QuerySet w = QuerySet::polygon(square_around_e3(0.8));
  const LipschitzScan same = lipschitz_scan(c, c, w, 12, 1e-3);
  CHECK(same.pass);
  CHECK(same.max_ratio == doctest::Approx(0.0));
  const LipschitzScan dil = lipschitz_scan(c, scale(c, 3.0), w, 12, 1e-3);
  CHECK(dil.pass);
  CHECK(dil.max_ratio == doctest::Approx(0.0));
}

TEST_CASE("lipschitz scan on cube against double cross-polytope") {
  const Polytope c = make_cube();
  const Polytope x2 = scale(make_cross_polytope(), 2.0);
  const QuerySet w = QuerySet::polygon(square_around_e3(0.8));
  const LipschitzScan scan = lipschitz_scan(c, x2, w, 40, 2e-3);
  CHECK(scan.pass);
  CHECK(scan.bound == doctest::Approx(4.0 * std::sqrt(3.0)));
  CHECK(scan.max_ratio > 0.0);
  CHECK(scan.max_ratio <= scan.bound + scan.slack);
  REQUIRE(scan.rows.size() == 39);
}

TEST_CASE("sweep inclusion check") {
  const Polytope c = make_cube();
  const SphericalPolygon gamma = square_around_e3(0.8);

  const CheckReport same = sweep_inclusion_check(c, c, gamma, 50, 50, 1e-3, 3);
  CHECK(same.pass);

  const CheckReport dil = sweep_inclusion_check(c, scale(c, 2.0), gamma, 50, 50, 1e-3, 3);
  CHECK(dil.pass);

  const Polytope x2 = scale(make_cross_polytope(), 2.0);
  const CheckReport rep = sweep_inclusion_check(c, x2, gamma, 400, 120, 2e-3, 3);
  CHECK(rep.pass);
  double samples = 0.0, worst = 1.0;
  for (const auto& [k, v] : rep.margins) {
    if (k == "samples") samples = v;
    if (k == "worst_miss") worst = v;
  }
  CHECK(samples >= 100.0);
  CHECK(worst < variation_lipschitz_bound(c, x2) / 400 + 2e-3);
}

TEST_CASE("union of intermediate images matches the geodesic join") {
  const Polytope c = make_cube();
  const Polytope x2 = scale(make_cross_polytope(), 2.0);
  const CheckReport rep = variation_union_check(c, x2, UnitVec(1, 1, 1), 60, 3e-3);
  CHECK(rep.pass);
}
