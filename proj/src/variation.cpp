#include "gil/variation.hpp"

#include <algorithm>
#include <cmath>

#include "gil/parallel.hpp"
#include "gil/rng.hpp"

namespace gil {

Polytope harmonic_mean(const Polytope& K, const Polytope& L, double t) {
  return polar(convex_combination(polar(K), polar(L), t));
}

HarmonicPath make_harmonic_path(const Polytope& K, const Polytope& L, int t_count) {
  if (t_count < 2) throw InputError("make_harmonic_path: need at least 2 grid points");
  HarmonicPath path;
  path.t_grid.resize(t_count);
  path.bodies.resize(t_count, K);
  const Polytope Kd = polar(K);
  const Polytope Ld = polar(L);
  for (int i = 0; i < t_count; ++i)
    path.t_grid[i] = static_cast<double>(i) / (t_count - 1);
  parallel_for(t_count, [&](std::size_t i) {
    path.bodies[i] = polar(convex_combination(Kd, Ld, path.t_grid[i]));
  });
  return path;
}

SphericalRegion variation_image(const Polytope& K, const Polytope& L, double t,
                                const QuerySet& w) {
  return gauss_image(harmonic_mean(K, L, t), w);
}

double geodesic_lipschitz_bound(const Vec3& u1, const Vec3& u2, double alpha) {
  const double n1 = norm(u1), n2 = norm(u2);
  if (n1 < 1e-14 || n2 < 1e-14) throw InputError("geodesic_lipschitz_bound: zero input");
  if (!(alpha > 0.0) || !(alpha < kPi / 2))
    throw InputError("geodesic_lipschitz_bound: alpha must lie in (0, pi/2)");
  // Both normalized inputs fit in some cap of radius pi/2 - alpha iff their
  // separation is at most pi - 2 alpha.
  const double sep = std::acos(clamp_unit(dot(u1, u2) / (n1 * n2)));
  if (sep > kPi - 2.0 * alpha + 1e-12)
    throw HemisphereViolationError("geodesic_lipschitz_bound: inputs exceed the cap");
  return 2.0 / std::sin(alpha) * std::max(n1 / n2, n2 / n1);
}

GeodesicLipschitzCheck geodesic_lipschitz_check(const Vec3& u1, const Vec3& u2, double alpha,
                                                int grid_points) {
  GeodesicLipschitzCheck out;
  out.bound = geodesic_lipschitz_bound(u1, u2, alpha);
  const int n = std::max(2, grid_points);
  UnitVec prev(u1);
  double max_ratio = 0.0;
  const double step = 1.0 / (n - 1);
  for (int i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    const UnitVec cur((1.0 - t) * u1 + t * u2);
    max_ratio = std::max(max_ratio, arc_distance(prev, cur) / step);
    prev = cur;
  }
  out.max_ratio = max_ratio;
  out.pass = max_ratio <= out.bound + 1e-9;
  return out;
}

double variation_lipschitz_bound(const Polytope& K, const Polytope& L) {
  const RadiiPair rk = radii(K), rl = radii(L);
  return 2.0 * std::max(rk.circumradius / rk.inradius, rl.circumradius / rl.inradius) *
         std::max(rk.circumradius / rl.inradius, rl.circumradius / rk.inradius);
}

LipschitzScan lipschitz_scan(const Polytope& K, const Polytope& L, const QuerySet& w,
                             int t_count, double res) {
  if (t_count < 2) throw InputError("lipschitz_scan: t_count >= 2 required");
  LipschitzScan scan;
  scan.bound = variation_lipschitz_bound(K, L);
  const double step = 1.0 / (t_count - 1);
  scan.slack = res / step;

  const HarmonicPath path = make_harmonic_path(K, L, t_count);
  std::vector<SphericalRegion> images(t_count);
  parallel_for(t_count, [&](std::size_t i) { images[i] = gauss_image(path.bodies[i], w); });

  scan.rows.resize(t_count - 1);
  parallel_for(t_count - 1, [&](std::size_t i) {
    const double dh = hausdorff_distance(images[i], images[i + 1], res);
    scan.rows[i] = {path.t_grid[i], dh, dh / step, scan.bound};
  });
  for (const auto& row : scan.rows) scan.max_ratio = std::max(scan.max_ratio, row.ratio);
  scan.pass = scan.max_ratio <= scan.bound + scan.slack;
  return scan;
}

CheckReport sweep_inclusion_check(const Polytope& K, const Polytope& L,
                                  const SphericalPolygon& gamma, int t_count, int samples,
                                  double res, std::uint64_t seed) {
  if (t_count < 2) throw InputError("sweep_inclusion_check: t_count >= 2 required");
  CheckReport report;
  report.check = "sweep-inclusion";

  const QuerySet q_gamma = QuerySet::polygon(gamma);
  const QuerySet q_boundary = QuerySet::boundary_of(gamma);
  const SphericalRegion image_k = gauss_image(K, q_gamma);
  const SphericalRegion image_l = gauss_image(L, q_gamma);
  const SphericalRegion edge_k = gauss_image(K, q_boundary);
  const SphericalRegion edge_l = gauss_image(L, q_boundary);

  // Sample the symmetric difference (2-dimensional part), rejecting points
  // on or near the boundary images.
  const double reject_margin = 1e-6;
  std::vector<UnitVec> pts;
  RngStream rng(seed, "sweep-samples");
  const SphericalRegion* pools[2] = {&image_k, &image_l};
  const bool has_area = !image_k.polygons.empty() || !image_l.polygons.empty();
  int attempts = 0;
  const int max_attempts = samples * 400;
  while (has_area && static_cast<int>(pts.size()) < samples && attempts++ < max_attempts) {
    int side = rng.uniform() < 0.5 ? 0 : 1;
    if (pools[side]->polygons.empty()) side = 1 - side;
    auto cand = sample_region_area(*pools[side], rng);
    if (!cand) continue;
    const bool in_k = region_contains(image_k, cand->vec());
    const bool in_l = region_contains(image_l, cand->vec());
    if (in_k == in_l) continue;
    if (distance_to_region(cand->vec(), edge_k) <= reject_margin) continue;
    if (distance_to_region(cand->vec(), edge_l) <= reject_margin) continue;
    pts.push_back(*cand);
  }

  const double bound = variation_lipschitz_bound(K, L);
  const double threshold = bound / t_count + res;
  report.add_margin("bound", bound);
  report.add_margin("threshold", threshold);
  report.add_margin("samples", static_cast<double>(pts.size()));

  if (pts.empty()) {
    // Identical (or dilated) endpoint images: nothing to sweep.
    report.pass = true;
    report.add_margin("worst_miss", 0.0);
    return report.finalize();
  }

  // Interior t-grid and the swept boundary images.
  const double step = 1.0 / (t_count + 1);
  const Polytope Kd = polar(K);
  const Polytope Ld = polar(L);
  std::vector<SphericalRegion> swept(t_count);
  parallel_for(t_count, [&](std::size_t i) {
    const double t = (static_cast<double>(i) + 1.0) * step;
    swept[i] = gauss_image(polar(convex_combination(Kd, Ld, t)), q_boundary);
  });

  // min over the grid of d(x, swept_t), skipping grid points that the
  // variation Lipschitz bound proves cannot beat the running minimum.
  std::vector<double> misses(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t pi) {
    const Vec3 x = pts[pi].vec();
    double m = kPi;
    int i = 0;
    while (i < t_count) {
      const double d = distance_to_region(x, swept[i]);
      m = std::min(m, d);
      const int skip = std::max(1, static_cast<int>((d - m) / (bound * step)));
      i += skip;
    }
    misses[pi] = m;
  });

  double worst = 0.0;
  std::size_t worst_idx = 0;
  for (std::size_t i = 0; i < misses.size(); ++i)
    if (misses[i] > worst) {
      worst = misses[i];
      worst_idx = i;
    }
  report.pass = worst < threshold;
  report.add_margin("worst_miss", worst);
  if (!report.pass)
    report.add_witness("sample", {{"x", pts[worst_idx].x()},
                                  {"y", pts[worst_idx].y()},
                                  {"z", pts[worst_idx].z()},
                                  {"miss", worst}});
  return report.finalize();
}

SphericalRegion geodesic_join(const SphericalRegion& a, const SphericalRegion& b) {
  auto stratum_dirs = [](const SphericalRegion& r) {
    std::vector<std::vector<UnitVec>> out;
    for (const auto& p : r.points) out.push_back({p});
    for (const auto& arc : r.arcs) out.push_back({arc.a(), arc.b()});
    for (const auto& poly : r.polygons) out.push_back(poly.vertices());
    return out;
  };
  SphericalRegion out;
  for (const auto& sa : stratum_dirs(a))
    for (const auto& sb : stratum_dirs(b)) {
      std::vector<UnitVec> dirs = sa;
      dirs.insert(dirs.end(), sb.begin(), sb.end());
      out.append(spherical_convex_hull(dirs));
    }
  return deduplicated(out);
}

CheckReport variation_union_check(const Polytope& K, const Polytope& L, const UnitVec& u,
                                  int t_count, double res) {
  if (t_count < 2) throw InputError("variation_union_check: t_count >= 2 required");
  CheckReport report;
  report.check = "variation-union";

  const QuerySet q = QuerySet::point(u);
  const Polytope Kd = polar(K);
  const Polytope Ld = polar(L);
  const double step = 1.0 / (t_count + 1);
  std::vector<SphericalRegion> images(t_count);
  parallel_for(t_count, [&](std::size_t i) {
    const double t = (static_cast<double>(i) + 1.0) * step;
    images[i] = gauss_image(polar(convex_combination(Kd, Ld, t)), q);
  });
  SphericalRegion lhs;
  for (const auto& r : images) lhs.append(r);
  lhs = deduplicated(lhs);

  const SphericalRegion rhs = geodesic_join(gauss_image(K, q), gauss_image(L, q));

  const double bound = variation_lipschitz_bound(K, L);
  const double budget = res + bound * step;
  const double dh = hausdorff_distance(lhs, rhs, res);
  report.pass = dh <= budget;
  report.add_margin("hausdorff", dh);
  report.add_margin("budget", budget);
  if (!report.pass) report.add_witness("union", {{"hausdorff", dh}, {"budget", budget}});
  return report.finalize();
}

}  // namespace gil
