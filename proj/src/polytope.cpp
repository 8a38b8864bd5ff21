#include "gil/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gil/hull.hpp"
#include "gil/rng.hpp"

namespace gil {

namespace {

// Double kernel: orientation sign with a relative tolerance band, so the
// predicate outcome is invariant under dilation of the input.
struct DoubleKernel {
  using Point = Vec3;

  static double det(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return dot(cross(b - a, c - a), d - a);
  }
  static int orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    const double v = det(a, b, c, d);
    const double scale = norm(b - a) * norm(c - a) * norm(d - a);
    if (std::abs(v) <= kGeomEps * scale) return 0;
    return v > 0 ? 1 : -1;
  }
  static bool equal(const Vec3& a, const Vec3& b) {
    return distance(a, b) <= kGeomEps * (1.0 + std::max(norm(a), norm(b)));
  }
  static bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) {
    return norm(cross(b - a, c - a)) <= kGeomEps * norm(b - a) * norm(c - a);
  }
  static Vec3 centroid(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return (a + b + c + d) / 4.0;
  }
};

std::shared_ptr<const Polytope::Data> build_data(const std::vector<Vec3>& input_points,
                                                 hull::HullFacets&& hf) {
  auto data = std::make_shared<Polytope::Data>();

  // Reindex the vertices actually used by facet rings.
  std::map<int, int> remap;
  for (const auto& ring : hf.rings)
    for (int v : ring)
      if (!remap.count(v)) {
        remap[v] = static_cast<int>(data->vertices.size());
        data->vertices.push_back(input_points[v]);
      }

  double scale = 0.0;
  for (const auto& v : data->vertices) scale = std::max(scale, norm(v));

  data->facets.resize(hf.rings.size());
  for (std::size_t f = 0; f < hf.rings.size(); ++f) {
    Facet& facet = data->facets[f];
    facet.ring.reserve(hf.rings[f].size());
    for (int v : hf.rings[f]) facet.ring.push_back(remap[v]);
    // Newell normal over the ring (robust for near-planar rings).
    Vec3 n{0, 0, 0};
    const int k = static_cast<int>(facet.ring.size());
    for (int i = 0; i < k; ++i)
      n += cross(data->vertices[facet.ring[i]], data->vertices[facet.ring[(i + 1) % k]]);
    const double nn = norm(n);
    if (nn < 1e-12) throw Error("polytope: degenerate facet normal");
    facet.normal = n / nn;
    double h = 0.0;
    for (int v : facet.ring) h += dot(data->vertices[v], facet.normal);
    facet.offset = h / k;
    if (facet.offset <= kGeomEps)
      throw InputError("polytope: origin is not strictly interior");
  }

  // Vertex-plane consistency.
  const double band = 1e-7 * std::max(1.0, scale);
  for (std::size_t f = 0; f < data->facets.size(); ++f) {
    const Facet& facet = data->facets[f];
    for (int v : facet.ring)
      if (std::abs(dot(data->vertices[v], facet.normal) - facet.offset) > band)
        throw Error("polytope: ring vertex off its facet plane");
    for (std::size_t i = 0; i < data->vertices.size(); ++i)
      if (dot(data->vertices[i], facet.normal) > facet.offset + band)
        throw Error("polytope: vertex outside a facet half-space");
  }

  // Edges from directed ring edges.
  std::map<std::pair<int, int>, int> facet_of;  // directed edge -> facet
  for (std::size_t f = 0; f < data->facets.size(); ++f) {
    const auto& ring = data->facets[f].ring;
    const int k = static_cast<int>(ring.size());
    for (int i = 0; i < k; ++i) facet_of[{ring[i], ring[(i + 1) % k]}] = static_cast<int>(f);
  }
  std::map<std::pair<int, int>, int> edge_index;
  for (const auto& [de, f] : facet_of) {
    const auto key = std::minmax(de.first, de.second);
    if (edge_index.count({key.first, key.second})) continue;
    auto rit = facet_of.find({de.second, de.first});
    if (rit == facet_of.end()) throw Error("polytope: boundary edge without twin");
    edge_index[{key.first, key.second}] = static_cast<int>(data->edges.size());
    data->edges.push_back({key.first, key.second, f, rit->second});
  }

  // Facets around each vertex, walked edge to edge.
  data->vertex_facets.resize(data->vertices.size());
  for (std::size_t v = 0; v < data->vertices.size(); ++v) {
    int f0 = -1, bstart = -1;
    for (const auto& [de, f] : facet_of)
      if (de.first == static_cast<int>(v)) {
        f0 = f;
        bstart = de.second;
        break;
      }
    if (f0 < 0) throw Error("polytope: isolated vertex");
    std::vector<int> order;
    int f = f0, b = bstart;
    do {
      order.push_back(f);
      auto it = facet_of.find({b, static_cast<int>(v)});
      if (it == facet_of.end()) throw Error("polytope: broken vertex fan");
      f = it->second;
      // outgoing edge of v in facet f
      const auto& ring = data->facets[f].ring;
      const int k = static_cast<int>(ring.size());
      b = -1;
      for (int i = 0; i < k; ++i)
        if (ring[i] == static_cast<int>(v)) b = ring[(i + 1) % k];
      if (b < 0) throw Error("polytope: broken vertex fan");
      if (order.size() > data->facets.size()) throw Error("polytope: vertex fan does not close");
    } while (f != f0);
    if (order.size() < 3) throw Error("polytope: vertex with fewer than 3 facets");
    data->vertex_facets[v] = std::move(order);
  }

  // Spherical face complex. The facet normal witnesses its own projection
  // and each vertex direction witnesses its normal cone (origin interior).
  FaceComplex& cx = data->complex;
  for (const auto& facet : data->facets) {
    std::vector<UnitVec> ring;
    ring.reserve(facet.ring.size());
    for (int v : facet.ring) ring.emplace_back(data->vertices[v]);
    cx.facet_proj.emplace_back(std::move(ring), UnitVec(facet.normal));
  }
  for (const auto& e : data->edges) {
    cx.edge_proj.emplace_back(UnitVec(data->vertices[e.v0]), UnitVec(data->vertices[e.v1]));
    cx.edge_normal_arc.emplace_back(UnitVec(data->facets[e.f0].normal),
                                    UnitVec(data->facets[e.f1].normal));
  }
  for (std::size_t v = 0; v < data->vertices.size(); ++v) {
    cx.vertex_dir.emplace_back(data->vertices[v]);
    std::vector<UnitVec> cone;
    for (int f : data->vertex_facets[v]) cone.emplace_back(data->facets[f].normal);
    cx.vertex_cone.emplace_back(std::move(cone), cx.vertex_dir.back());
  }

  double r = 1e300, R = 0.0;
  for (const auto& f : data->facets) r = std::min(r, f.offset);
  for (const auto& v : data->vertices) R = std::max(R, norm(v));
  data->radii = {r, R};
  return data;
}

}  // namespace

Polytope make_polytope(const std::vector<Vec3>& points) {
  auto hf = hull::compute_hull<DoubleKernel>(points);
  return Polytope(build_data(points, std::move(hf)));
}

double support(const Polytope& K, const Vec3& x) {
  double best = -1e300;
  for (const auto& v : K.vertices()) best = std::max(best, dot(x, v));
  return best;
}

double radial(const Polytope& K, const UnitVec& u) {
  double best = 1e300;
  for (const auto& f : K.facets()) {
    const double d = dot(u.vec(), f.normal);
    if (d > 1e-15) best = std::min(best, f.offset / d);
  }
  return best;
}

Polytope polar(const Polytope& K) {
  std::vector<Vec3> duals;
  duals.reserve(K.facets().size());
  for (const auto& f : K.facets()) duals.push_back(f.normal / f.offset);
  return make_polytope(duals);
}

RadiiPair radii(const Polytope& K) {
  RadiiPair r{1e300, 0.0};
  for (const auto& f : K.facets()) r.inradius = std::min(r.inradius, f.offset);
  for (const auto& v : K.vertices()) r.circumradius = std::max(r.circumradius, norm(v));
  return r;
}

SupportSet facet_region(const Polytope& K, const UnitVec& v) {
  double h = -1e300;
  for (const auto& p : K.vertices()) h = std::max(h, dot(v.vec(), p));
  const double tol = kGeomEps * std::max(1.0, radii(K).circumradius);
  SupportSet out;
  for (std::size_t i = 0; i < K.vertices().size(); ++i) {
    if (dot(v.vec(), K.vertices()[i]) >= h - tol) {
      out.vertex_indices.push_back(static_cast<int>(i));
      out.points.push_back(K.vertices()[i]);
    }
  }
  out.kind = out.vertex_indices.size() == 1   ? FaceKind::Vertex
             : out.vertex_indices.size() == 2 ? FaceKind::Edge
                                              : FaceKind::Facet;
  return out;
}

Polytope convex_combination(const Polytope& A, const Polytope& B, double t) {
  if (t < 0.0 || t > 1.0) throw InputError("convex_combination: t outside [0,1]");
  if (t == 0.0) return A;
  if (t == 1.0) return B;
  // Vertices of (1-t)A + tB arise from vertex pairs whose normal cones
  // intersect; collect those candidates and hull them.
  const auto& ca = A.complex().vertex_cone;
  const auto& cb = B.complex().vertex_cone;
  std::vector<Vec3> candidates;
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (polygons_intersect(ca[i], cb[j]))
        candidates.push_back((1.0 - t) * A.vertices()[i] + t * B.vertices()[j]);
  return make_polytope(candidates);
}

Polytope scale(const Polytope& K, double c) {
  if (!(c > 0.0)) throw InputError("scale: factor must be positive");
  auto data = std::make_shared<Polytope::Data>();
  data->vertices.reserve(K.vertices().size());
  for (const auto& v : K.vertices()) data->vertices.push_back(c * v);
  data->facets = K.facets();
  for (auto& f : data->facets) f.offset *= c;
  data->edges = K.edges();
  data->vertex_facets = K.vertex_facets();
  data->complex = K.complex();
  data->radii = {radii(K).inradius * c, radii(K).circumradius * c};
  return Polytope(std::move(data));
}

Polytope make_cube(double half_side) {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({half_side * sx, half_side * sy, half_side * sz});
  return make_polytope(pts);
}

Polytope make_cross_polytope(double c) {
  return make_polytope({{c, 0, 0}, {-c, 0, 0}, {0, c, 0}, {0, -c, 0}, {0, 0, c}, {0, 0, -c}});
}

Polytope make_frustum() {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      pts.push_back({1.0 * sx, 1.0 * sy, 1.0});
      pts.push_back({2.0 * sx, 2.0 * sy, -2.0});
    }
  return make_polytope(pts);
}

Polytope make_ball_approximation(int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> base = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                            {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                            {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : base) v = v / norm(v);
  const int faces[20][3] = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                            {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                            {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                            {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  std::vector<Vec3> pts;
  const int s = std::max(1, subdivisions);
  for (const auto& f : faces) {
    const Vec3 a = base[f[0]], b = base[f[1]], c = base[f[2]];
    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s - i; ++j) {
        const double u = static_cast<double>(i) / s;
        const double v = static_cast<double>(j) / s;
        const Vec3 p = a * (1.0 - u - v) + b * u + c * v;
        pts.push_back(p / norm(p));
      }
  }
  return make_polytope(pts);
}

Polytope random_polytope(std::uint64_t seed, int num_points) {
  if (num_points < 4) throw InputError("random_polytope: need at least 4 points");
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    RngStream rng(seed, "random-polytope", attempt);
    const Mat3 rot = rng.rotation();
    const double ax = rng.uniform(0.6, 1.8);
    const double ay = rng.uniform(0.6, 1.8);
    const double az = rng.uniform(0.6, 1.8);
    std::vector<Vec3> pts;
    pts.reserve(num_points);
    Vec3 mean{0, 0, 0};
    for (int i = 0; i < num_points; ++i) {
      const Vec3 u = rng.sphere();
      const Vec3 p = rot.apply({ax * u.x, ay * u.y, az * u.z});
      pts.push_back(p);
      mean += p;
    }
    mean = mean / num_points;
    for (auto& p : pts) p = p - mean;
    try {
      Polytope K = make_polytope(pts);
      const RadiiPair r = radii(K);
      if (r.inradius > 0.12 * r.circumradius) return K;
    } catch (const Error&) {
      // resample
    }
  }
  throw Error("random_polytope: could not produce a well-conditioned body");
}

}  // namespace gil
