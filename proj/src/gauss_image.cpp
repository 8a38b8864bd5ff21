#include "gil/gauss_image.hpp"

#include <algorithm>
#include <cmath>

#include "gil/rng.hpp"

namespace gil {

SphericalRegion gauss_image(const Polytope& K, const QuerySet& w) {
  const FaceComplex& cx = K.complex();
  SphericalRegion out;
  for (std::size_t f = 0; f < cx.facet_proj.size(); ++f)
    if (w.meets_polygon(cx.facet_proj[f]))
      out.points.emplace_back(K.facets()[f].normal);
  for (std::size_t e = 0; e < cx.edge_proj.size(); ++e)
    if (w.meets_arc(cx.edge_proj[e])) out.arcs.push_back(cx.edge_normal_arc[e]);
  for (std::size_t v = 0; v < cx.vertex_dir.size(); ++v)
    if (w.contains(cx.vertex_dir[v].vec())) out.polygons.push_back(cx.vertex_cone[v]);
  return out;
}

SphericalRegion reverse_gauss_image(const Polytope& K, const QuerySet& w) {
  const FaceComplex& cx = K.complex();
  SphericalRegion out;
  for (std::size_t f = 0; f < cx.facet_proj.size(); ++f)
    if (w.contains(K.facets()[f].normal)) out.polygons.push_back(cx.facet_proj[f]);
  for (std::size_t e = 0; e < cx.edge_normal_arc.size(); ++e)
    if (w.meets_arc(cx.edge_normal_arc[e])) out.arcs.push_back(cx.edge_proj[e]);
  for (std::size_t v = 0; v < cx.vertex_cone.size(); ++v)
    if (w.meets_polygon(cx.vertex_cone[v])) out.points.push_back(cx.vertex_dir[v]);
  return out;
}

SphericalRegion normal_cone(const Polytope& K, const Vec3& x) {
  const double scale = std::max(1.0, radii(K).circumradius);
  double worst = -1e300;
  for (const auto& f : K.facets()) worst = std::max(worst, dot(x, f.normal) - f.offset);
  if (std::abs(worst) > kGeomEps * scale)
    throw NotOnBoundaryError("normal_cone: point is not on the boundary");

  std::vector<int> active;
  for (std::size_t f = 0; f < K.facets().size(); ++f)
    if (std::abs(dot(x, K.facets()[f].normal) - K.facets()[f].offset) <= kGeomEps * scale)
      active.push_back(static_cast<int>(f));

  SphericalRegion out;
  if (active.size() == 1) {
    out.points.emplace_back(K.facets()[active[0]].normal);
    return out;
  }
  if (active.size() == 2) {
    for (std::size_t e = 0; e < K.edges().size(); ++e) {
      const Edge& ed = K.edges()[e];
      if ((ed.f0 == active[0] && ed.f1 == active[1]) || (ed.f0 == active[1] && ed.f1 == active[0])) {
        out.arcs.push_back(K.complex().edge_normal_arc[e]);
        return out;
      }
    }
    throw Error("normal_cone: active facet pair without a shared edge");
  }
  // Vertex: match the nearest one.
  int best = -1;
  double bd = 1e300;
  for (std::size_t v = 0; v < K.vertices().size(); ++v) {
    const double d = distance(K.vertices()[v], x);
    if (d < bd) {
      bd = d;
      best = static_cast<int>(v);
    }
  }
  if (best < 0 || bd > 1e-6 * scale) throw NotOnBoundaryError("normal_cone: no vertex at point");
  out.polygons.push_back(K.complex().vertex_cone[best]);
  return out;
}

CheckReport boundary_inclusion_check(const Polytope& K, const SphericalPolygon& w, int samples) {
  if (samples < 1) throw InputError("boundary_inclusion_check: samples >= 1 required");
  const SphericalRegion image = gauss_image(K, QuerySet::polygon(w));
  const SphericalRegion boundary_image = gauss_image(K, QuerySet::boundary_of(w));

  // Candidate boundary points of the image: stratum points, arc samples and
  // polygon edge samples; a candidate is on the topological boundary when a
  // short probe step in some direction leaves the image.
  std::vector<UnitVec> candidates;
  for (const auto& p : image.points) candidates.push_back(p);
  const int per_stratum = std::max(
      4, samples / std::max<int>(1, static_cast<int>(image.arcs.size() + image.polygons.size())));
  for (const auto& a : image.arcs)
    for (int i = 0; i <= per_stratum; ++i)
      candidates.push_back(a.point_at(static_cast<double>(i) / per_stratum));
  for (const auto& p : image.polygons) {
    const int k = p.size();
    for (int e = 0; e < k; ++e) {
      GeodesicArc edge(p.vertex(e), p.vertex((e + 1) % k));
      for (int i = 0; i <= per_stratum; ++i)
        candidates.push_back(edge.point_at(static_cast<double>(i) / per_stratum));
    }
  }

  const double probe = 1e-6;
  double worst = 0.0;
  UnitVec worst_at = candidates.empty() ? UnitVec() : candidates[0];
  int boundary_count = 0;
  for (const auto& c : candidates) {
    Vec3 t1, t2;
    tangent_frame(c.vec(), t1, t2);
    bool on_boundary = false;
    for (int k = 0; k < 8 && !on_boundary; ++k) {
      const double phi = 2.0 * kPi * k / 8;
      const Vec3 q = c.vec() + t1 * (probe * std::cos(phi)) + t2 * (probe * std::sin(phi));
      on_boundary = !region_contains(image, UnitVec(q).vec(), 1e-9);
    }
    if (!on_boundary) continue;
    ++boundary_count;
    const double d = distance_to_region(c.vec(), boundary_image);
    if (d > worst) {
      worst = d;
      worst_at = c;
    }
  }

  CheckReport report;
  report.check = "boundary-inclusion";
  report.pass = worst <= kGeomEps + 2.0 * probe;
  report.add_margin("max_violation", worst);
  report.add_margin("boundary_samples", static_cast<double>(boundary_count));
  if (!report.pass)
    report.add_witness("boundary-point",
                       {{"x", worst_at.x()}, {"y", worst_at.y()}, {"z", worst_at.z()},
                        {"distance", worst}});
  return report.finalize();
}

std::vector<std::pair<double, double>> continuity_probe(const Polytope& K, const UnitVec& u,
                                                        const std::vector<double>& deltas,
                                                        double res) {
  const SphericalRegion at_u = gauss_image(K, QuerySet::point(u));
  std::vector<std::pair<double, double>> rows;
  for (double d : deltas) {
    if (!(d > 0.0)) throw InputError("continuity_probe: deltas must be positive");
    const SphericalRegion at_cap = gauss_image(K, QuerySet::cap(Cap(u, d)));
    rows.emplace_back(d, hausdorff_distance(at_cap, at_u, res));
  }
  return rows;
}

}  // namespace gil
