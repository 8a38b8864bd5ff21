#include <doctest.h>

#include <cmath>

#include "gil/rng.hpp"
#include "gil/uniqueness.hpp"

using namespace gil;

namespace {

UnitVec minus_e3() { return UnitVec(0, 0, -1); }

SphericalMeasure pole_atoms() {
  return SphericalMeasure::atoms({{e3(), 1.0}, {minus_e3(), 1.0}});
}

SphericalMeasure pole_caps() {
  return SphericalMeasure::cap_lebesgue({Cap(e3(), 0.1), Cap(minus_e3(), 0.1)}, 1.0);
}

TestFamily family_for(const Polytope& K, const Polytope& L, const SphericalMeasure& lambda,
                      double diameter, std::uint64_t seed) {
  std::vector<UnitVec> avoid = avoidance_directions(K);
  for (const auto& d : avoidance_directions(L)) avoid.push_back(d);
  return grid_partition(diameter, seed, {lambda}, avoid);
}

}  // namespace

TEST_CASE("support components from the generating description") {
  const SupportComponents atoms = support_components(pole_atoms());
  REQUIRE(atoms.components.size() == 2);
  CHECK(atoms.components[0].kind == SupportComponent::Kind::Atom);

  const SupportComponents uni = support_components(SphericalMeasure::uniform());
  REQUIRE(uni.components.size() == 1);
  CHECK(uni.components[0].kind == SupportComponent::Kind::Sphere);

  // Two overlapping caps merge; the far one stays separate.
  const SphericalMeasure caps = SphericalMeasure::cap_lebesgue(
      {Cap(e3(), 0.3), Cap(UnitVec(0.2, 0, 1), 0.3), Cap(minus_e3(), 0.2)}, 1.0);
  const SupportComponents merged = support_components(caps);
  REQUIRE(merged.components.size() == 2);
  int sizes[2] = {static_cast<int>(merged.components[0].caps.size()),
                  static_cast<int>(merged.components[1].caps.size())};
  CHECK(sizes[0] + sizes[1] == 3);
  CHECK(std::max(sizes[0], sizes[1]) == 2);
}

TEST_CASE("ae equality passes on dilates") {
  const Polytope c = make_cube();
  const Polytope c2 = scale(c, 2.0);
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const TestFamily family = family_for(c, c2, uni, 0.7, 11);
  const CheckReport r = ae_equal_check(c, c2, uni, family);
  CHECK(r.pass);
  for (const auto& [k, v] : r.margins)
    if (k == "max_s" || k == "max_m") CHECK(v == 0.0);
}

TEST_CASE("ae equality fails on cube against cross-polytope") {
  const Polytope c = make_cube();
  const Polytope x = make_cross_polytope();
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const TestFamily family = family_for(c, x, uni, 0.7, 12);
  const CheckReport r = ae_equal_check(c, x, uni, family);
  CHECK(!r.pass);
  REQUIRE(!r.witnesses.empty());
  double max_s = 0.0, max_m = 0.0;
  for (const auto& [k, v] : r.margins) {
    if (k == "max_s") max_s = v;
    if (k == "max_m") max_m = v;
  }
  CHECK(max_s >= 0.1);
  CHECK(max_m >= 0.1);
  // The mass-gap witness accompanies the strong symmetric-difference one.
  bool saw_gap = false;
  for (const auto& w : r.witnesses) saw_gap = saw_gap || w.set_id.rfind("mass-gap:", 0) == 0;
  CHECK(saw_gap);
}

TEST_CASE("ae equality on the cube/frustum pair with pole atoms is exact") {
  const Polytope c = make_cube();
  const Polytope f = make_frustum();
  const SphericalMeasure atoms = pole_atoms();
  const TestFamily family = family_for(c, f, atoms, 0.6, 13);
  const CheckReport r = ae_equal_check(c, f, atoms, family);
  CHECK(r.pass);
  for (const auto& [k, v] : r.margins)
    if (k == "max_s" || k == "max_m") CHECK(v == 0.0);
}

TEST_CASE("ae equality on the cube/frustum pair with pole caps") {
  const Polytope c = make_cube();
  const Polytope f = make_frustum();
  const SphericalMeasure caps = pole_caps();
  const TestFamily family = family_for(c, f, caps, 0.6, 14);
  const CheckReport r = ae_equal_check(c, f, caps, family);
  CHECK(r.pass);
  for (const auto& [k, v] : r.margins)
    if (k == "max_s" || k == "max_m") CHECK(v <= 1e-9);
}

TEST_CASE("simultaneous map basics") {
  const Polytope c = make_cube();
  // Against itself: the full reverse image.
  const SphericalRegion self = simultaneous_map(c, c, e3());
  REQUIRE(self.polygons.size() == 1);
  CHECK(polygon_area(self.polygons[0]) == doctest::Approx(2.0 * kPi / 3).epsilon(1e-9));

  // Dilates share the map.
  CHECK(regions_equal(simultaneous_map(c, scale(c, 2.0), e3()), self, 1e-9));

  // Cube against frustum at the shared top square.
  const Polytope f = make_frustum();
  const SphericalRegion shared = simultaneous_map(c, f, e3());
  CHECK(!shared.empty());
  CHECK(region_contains(shared, UnitVec(1, 1, 1).vec(), 1e-9));
}

TEST_CASE("simultaneous check on the frustum instance") {
  const Polytope c = make_cube();
  const Polytope f = make_frustum();
  const SphericalMeasure atoms = pole_atoms();
  const TestFamily family = family_for(c, f, atoms, 0.6, 15);
  const CheckReport ae = ae_equal_check(c, f, atoms, family);
  REQUIRE(ae.pass);
  const CheckReport r = simultaneous_check(c, f, support_components(atoms), 100,
                                           {0.3, 0.1, 0.03}, 1e-3, 16, ae);
  CHECK(r.pass);

  CheckReport bad;
  bad.check = "ae-equality";
  bad.pass = false;
  bad.add_witness("cell-0", {{"s", 1.0}});
  CHECK_THROWS_AS(simultaneous_check(c, f, support_components(atoms), 10, {0.1}, 1e-3, 16, bad),
                  HypothesisNotEstablishedError);
}

TEST_CASE("ratio partition labels") {
  const Polytope c = make_cube();
  const TestFamily family = grid_partition(0.6, 21, {}, {});

  const RatioPartition same = ratio_partition(c, c, family, 4);
  CHECK(same.equal == static_cast<int>(family.cells.size()));

  const RatioPartition dil = ratio_partition(c, scale(c, 2.0), family, 4);
  CHECK(dil.l_larger == static_cast<int>(family.cells.size()));

  const Polytope f = make_frustum();
  const RatioPartition mix = ratio_partition(c, f, family, 4);
  CHECK(mix.equal > 0);     // cells inside the shared top-square projection
  CHECK(mix.l_larger > 0);  // cells around the lower half
  CHECK(mix.k_larger == 0);
  // Labels are invariant under a common dilation.
  const RatioPartition mix2 =
      ratio_partition(scale(c, 2.0), scale(f, 2.0), family, 4);
  for (std::size_t i = 0; i < mix.labels.size(); ++i) CHECK(mix.labels[i] == mix2.labels[i]);
}

TEST_CASE("dilation component check") {
  const Polytope c = make_cube();
  const Polytope c2 = scale(c, 2.0);
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const TestFamily family = family_for(c, c2, uni, 0.7, 31);
  const CheckReport ae = ae_equal_check(c, c2, uni, family);
  REQUIRE(ae.pass);
  const CheckReport r =
      dilation_component_check(c, c2, support_components(uni), 1000, 32, ae);
  CHECK(r.pass);
  for (const auto& [k, v] : r.margins) {
    if (k.rfind("ratio:", 0) == 0) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
    if (k.rfind("spread:", 0) == 0) CHECK(v == 0.0);
  }
}

TEST_CASE("dilation components on the frustum instance") {
  const Polytope c = make_cube();
  const Polytope f = make_frustum();
  for (const SphericalMeasure& lambda : {pole_atoms(), pole_caps()}) {
    const TestFamily family = family_for(c, f, lambda, 0.6, 33);
    const CheckReport ae = ae_equal_check(c, f, lambda, family);
    REQUIRE(ae.pass);
    const CheckReport r =
        dilation_component_check(c, f, support_components(lambda), 1000, 34, ae);
    CHECK(r.pass);
    int seen = 0;
    for (const auto& [k, v] : r.margins) {
      if (k.rfind("ratio:", 0) != 0) continue;
      ++seen;
      CHECK((v == doctest::Approx(1.0).epsilon(1e-9) ||
             v == doctest::Approx(0.5).epsilon(1e-9)));
    }
    CHECK(seen == 2);
  }
}

TEST_CASE("hypothesis guard on the dilation check") {
  const Polytope c = make_cube();
  const Polytope x = make_cross_polytope();
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const TestFamily family = family_for(c, x, uni, 0.7, 41);
  const CheckReport ae = ae_equal_check(c, x, uni, family);
  REQUIRE(!ae.pass);
  CHECK_THROWS_AS(dilation_component_check(c, x, support_components(uni), 100, 42, ae),
                  HypothesisNotEstablishedError);
  CHECK_THROWS_AS(ratio_increment_check(c, x, support_components(uni), 1e-3, 50, 43, ae),
                  HypothesisNotEstablishedError);
}

TEST_CASE("ratio increments vanish on passing instances") {
  const Polytope c = make_cube();
  const Polytope c2 = scale(c, 2.0);
  const SphericalMeasure uni = SphericalMeasure::uniform();
  const TestFamily family = family_for(c, c2, uni, 0.7, 51);
  const CheckReport ae = ae_equal_check(c, c2, uni, family);
  const CheckReport r =
      ratio_increment_check(c, c2, support_components(uni), 1e-9, 60, 52, ae);
  CHECK(r.pass);

  const Polytope f = make_frustum();
  const SphericalMeasure caps = pole_caps();
  const TestFamily fam2 = family_for(c, f, caps, 0.6, 53);
  const CheckReport ae2 = ae_equal_check(c, f, caps, fam2);
  REQUIRE(ae2.pass);
  const CheckReport r2 =
      ratio_increment_check(c, f, support_components(caps), 1e-9, 60, 54, ae2);
  CHECK(r2.pass);
}
