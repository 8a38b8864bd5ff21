#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gil/measure.hpp"
#include "gil/report.hpp"

namespace gil {

// Support of a measure, split into rectifiable path connected components as
// read off the measure's generating description: single atoms, and unions of
// overlapping caps merged through the overlap graph.
struct SupportComponent {
  enum class Kind { Atom, Caps, Sphere };
  std::string id;
  Kind kind = Kind::Sphere;
  std::vector<UnitVec> atoms;
  std::vector<Cap> caps;
};

struct SupportComponents {
  std::vector<SupportComponent> components;
};

SupportComponents support_components(const SphericalMeasure& m);

// Sample directions inside one component (an atom component yields its atom).
std::vector<UnitVec> sample_component(const SupportComponent& c, int n, RngStream& rng);

// Almost-everywhere equality checker over a finite test family: for every
// cell (and every union of up to 3 adjacent cells) computes
//   s = lambda(image_K triangle image_L)   and   m = |lambda(K,.) - lambda(L,.)|
// and passes iff every s stays below kMeasEps. The report carries both
// columns' extremes, every failing set, and, when a strong witness exists,
// the set with the largest mass gap.
CheckReport ae_equal_check(const Polytope& K, const Polytope& L, const SphericalMeasure& lambda,
                           const TestFamily& family);

// Intersection of the reverse images of u under K and L (the simultaneous
// map of the dual bodies).
SphericalRegion simultaneous_map(const Polytope& K, const Polytope& L, const UnitVec& u);
SphericalRegion simultaneous_map_set(const Polytope& K, const Polytope& L, const QuerySet& w);

// Nonemptiness of the simultaneous map over sampled support directions, plus
// a shrinking-cap continuity probe. Requires a passing ae_equal_check.
CheckReport simultaneous_check(const Polytope& K, const Polytope& L,
                               const SupportComponents& comps, int samples_per_component,
                               const std::vector<double>& deltas, double res, std::uint64_t seed,
                               const CheckReport& ae);

enum class RadialLabel { KLarger, LLarger, Equal, Mixed };

struct RatioPartition {
  std::vector<RadialLabel> labels;  // per family cell
  int k_larger = 0, l_larger = 0, equal = 0, mixed = 0;
};

// Classifies every family cell by comparing the radial functions at the
// vertices and an interior grid (side s); pure labels need every sample to
// agree with margin kGeomEps.
RatioPartition ratio_partition(const Polytope& K, const Polytope& L, const TestFamily& family,
                               int interior_side);

// Per-component dilation: the support ratio h_K/h_L sampled over each
// component must be constant (relative spread <= 1e-9). Requires a passing
// ae_equal_check (HypothesisNotEstablishedError otherwise).
CheckReport dilation_component_check(const Polytope& K, const Polytope& L,
                                     const SupportComponents& comps, int samples,
                                     std::uint64_t seed, const CheckReport& ae);

// Increment decay of the dual radial ratio within components: at shrinking
// separations the per-pair increments |Q(u') - Q(u)|/|u' - u| must fall to
// eps, with Q = rho_{K*}/rho_{L*}. Requires a passing ae_equal_check.
CheckReport ratio_increment_check(const Polytope& K, const Polytope& L,
                                  const SupportComponents& comps, double eps, int pair_samples,
                                  std::uint64_t seed, const CheckReport& ae);

}  // namespace gil
