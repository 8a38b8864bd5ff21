#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gil/polytope.hpp"
#include "gil/rational.hpp"
#include "gil/rng.hpp"

using namespace gil;

namespace {

// Symmetric max-min distance between vertex sets.
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

}  // namespace

TEST_CASE("cube structure") {
  const Polytope c = make_cube();
  CHECK(c.num_vertices() == 8);
  CHECK(c.num_facets() == 6);
  CHECK(c.edges().size() == 12);
  for (const auto& f : c.facets()) CHECK(f.ring.size() == 4);
  for (const auto& vf : c.vertex_facets()) CHECK(vf.size() == 3);
}

TEST_CASE("frustum structure") {
  const Polytope f = make_frustum();
  CHECK(f.num_vertices() == 8);
  CHECK(f.num_facets() == 6);
  CHECK(f.edges().size() == 12);
}

TEST_CASE("support function") {
  const Polytope c = make_cube();
  CHECK(support(c, {1, 2, 3}) == doctest::Approx(6.0));
  CHECK(support(c, e3().vec()) == doctest::Approx(1.0));
  const Polytope f = make_frustum();
  CHECK(support(f, {0, 0, -1}) == doctest::Approx(2.0));
}

TEST_CASE("radial function") {
  const Polytope c = make_cube();
  CHECK(radial(c, e3()) == doctest::Approx(1.0));
  CHECK(radial(c, UnitVec(1, 1, 1)) == doctest::Approx(std::sqrt(3.0)));
  CHECK(radial(c, UnitVec(1, 1, 0)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("polar duality of cube and cross-polytope") {
  const Polytope cube = make_cube();
  const Polytope cross = make_cross_polytope();
  CHECK(vertex_set_distance(polar(cube), cross) < 1e-12);
  CHECK(vertex_set_distance(polar(cross), cube) < 1e-12);
  // (cK)* = K*/c
  CHECK(vertex_set_distance(polar(scale(cube, 2.0)), scale(cross, 0.5)) < 1e-12);
}

TEST_CASE("radii") {
  const RadiiPair rc = radii(make_cube());
  CHECK(rc.inradius == doctest::Approx(1.0));
  CHECK(rc.circumradius == doctest::Approx(std::sqrt(3.0)));
  const RadiiPair rx = radii(make_cross_polytope(2.0));
  CHECK(rx.inradius == doctest::Approx(2.0 / std::sqrt(3.0)));
  CHECK(rx.circumradius == doctest::Approx(2.0));
  const RadiiPair rb = radii(make_ball_approximation(3));
  CHECK(rb.inradius > 0.97);
  CHECK(rb.circumradius <= 1.0 + 1e-12);
}

TEST_CASE("facet region classification") {
  const Polytope c = make_cube();
  const SupportSet top = facet_region(c, e3());
  CHECK(top.kind == FaceKind::Facet);
  CHECK(top.points.size() == 4);
  const SupportSet corner = facet_region(c, UnitVec(1, 1, 1));
  CHECK(corner.kind == FaceKind::Vertex);
  REQUIRE(corner.points.size() == 1);
  CHECK(distance(corner.points[0], {1, 1, 1}) < 1e-12);
  const SupportSet edge = facet_region(c, UnitVec(1, 1, 0));
  CHECK(edge.kind == FaceKind::Edge);
  CHECK(edge.points.size() == 2);
}

TEST_CASE("convex combination blends supports") {
  const Polytope c = make_cube();
  CHECK(vertex_set_distance(convex_combination(c, c, 0.3), c) < 1e-9);
  CHECK(vertex_set_distance(convex_combination(c, scale(c, 3.0), 0.5), scale(c, 2.0)) < 1e-9);

  const Polytope cross = make_cross_polytope();
  const Polytope mix = convex_combination(c, cross, 0.5);
  CHECK(support(mix, e1().vec()) == doctest::Approx(1.0).epsilon(1e-12));
  const Vec3 diag = UnitVec(1, 1, 1).vec();
  CHECK(support(mix, diag) ==
        doctest::Approx(0.5 * (std::sqrt(3.0) + 1.0 / std::sqrt(3.0))).epsilon(1e-12));

  RngStream rng(100, "combo-support");
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope A = random_polytope(200 + trial, 18);
    const Polytope B = random_polytope(300 + trial, 14);
    const double t = rng.uniform();
    const Polytope M = convex_combination(A, B, t);
    for (int i = 0; i < 50; ++i) {
      const Vec3 x = rng.sphere();
      CHECK(support(M, x) ==
            doctest::Approx((1.0 - t) * support(A, x) + t * support(B, x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("radial scales with dilation") {
  const Polytope c = make_cube();
  RngStream rng(17, "radial-dilation");
  for (double factor : {0.5, 2.0, 10.0}) {
    const Polytope s = scale(c, factor);
    for (int i = 0; i < 200; ++i) {
      const UnitVec u(rng.sphere());
      CHECK(radial(s, u) == doctest::Approx(factor * radial(c, u)).epsilon(1e-12));
    }
  }
}

TEST_CASE("polar involution and support-radial identity on random bodies") {
  RngStream rng(1234, "polar-involution-dirs");
  for (int i = 0; i < 30; ++i) {
    const Polytope K = random_polytope(1000 + i, 8 + (i % 33));
    const Polytope KK = polar(polar(K));
    CHECK(vertex_set_distance(K, KK) < 1e-7);
    const Polytope Kd = polar(K);
    for (int j = 0; j < 100; ++j) {
      const UnitVec u(rng.sphere());
      CHECK(support(Kd, u.vec()) * radial(K, u) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("origin must be interior") {
  CHECK_THROWS_AS(make_polytope({{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {2, 1, 1}}),
                  InputError);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(make_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), InputError);
  CHECK_THROWS_AS(make_polytope({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}), InputError);
}

TEST_CASE("rational polar involution is exact") {
  std::vector<RVec3> cube_pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) cube_pts.push_back({Rational(sx), Rational(sy), Rational(sz)});
  const RationalPolytope cube = make_rational_polytope(cube_pts);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.facets().size() == 6);
  const RationalPolytope cross = rational_polar(cube);
  CHECK(cross.vertices().size() == 6);
  CHECK(cross.facets().size() == 8);
  CHECK(same_vertex_set(rational_polar(cross), cube));

  for (int i = 0; i < 10; ++i) {
    const auto pts = random_rational_points(5000 + i, 10 + 3 * i);
    const RationalPolytope K = make_rational_polytope(pts);
    CHECK(same_vertex_set(rational_polar(rational_polar(K)), K));
  }
}

TEST_CASE("rational and float kernels agree") {
  const auto pts = random_rational_points(777, 20);
  const RationalPolytope K = make_rational_polytope(pts);
  const Polytope Kf = to_polytope(K);
  CHECK(static_cast<int>(K.vertices().size()) == Kf.num_vertices());
  CHECK(static_cast<int>(K.facets().size()) == Kf.num_facets());
}
