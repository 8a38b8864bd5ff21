#include "gil/rational.hpp"

#include <algorithm>
#include <cmath>

#include "gil/hull.hpp"
#include "gil/rng.hpp"

namespace gil {

namespace {

struct RationalKernel {
  using Point = RVec3;

  static int orient(const RVec3& a, const RVec3& b, const RVec3& c, const RVec3& d) {
    const Rational v = rdot(rcross(b - a, c - a), d - a);
    if (v == 0) return 0;
    return v > 0 ? 1 : -1;
  }
  static bool equal(const RVec3& a, const RVec3& b) { return requal(a, b); }
  static bool collinear(const RVec3& a, const RVec3& b, const RVec3& c) {
    const RVec3 x = rcross(b - a, c - a);
    return x.x == 0 && x.y == 0 && x.z == 0;
  }
  static RVec3 centroid(const RVec3& a, const RVec3& b, const RVec3& c, const RVec3& d) {
    return (a + b + c + d) / Rational(4);
  }
};

}  // namespace

RationalPolytope make_rational_polytope(const std::vector<RVec3>& points) {
  auto hf = hull::compute_hull<RationalKernel>(points);

  std::vector<RVec3> vertices;
  std::vector<int> remap(points.size(), -1);
  std::vector<RationalFacet> facets;
  for (const auto& ring : hf.rings) {
    RationalFacet f;
    for (int v : ring) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(vertices.size());
        vertices.push_back(points[v]);
      }
      f.ring.push_back(remap[v]);
    }
    // Newell normal: exact and independent of the triangulation.
    RVec3 n{0, 0, 0};
    const int k = static_cast<int>(f.ring.size());
    for (int i = 0; i < k; ++i)
      n = n + rcross(points[ring[i]], points[ring[(i + 1) % k]]);
    f.normal = n;
    f.offset = rdot(points[ring[0]], n);
    if (!(f.offset > 0))
      throw InputError("rational polytope: origin is not strictly interior");
    for (int i = 1; i < k; ++i)
      if (rdot(points[ring[i]], n) != f.offset)
        throw Error("rational polytope: facet ring is not planar");
    facets.push_back(std::move(f));
  }
  // Every vertex inside every facet half-space.
  for (const auto& f : facets)
    for (const auto& v : vertices)
      if (rdot(v, f.normal) > f.offset) throw Error("rational polytope: vertex outside facet");
  return RationalPolytope(std::move(vertices), std::move(facets));
}

RationalPolytope rational_polar(const RationalPolytope& K) {
  std::vector<RVec3> duals;
  duals.reserve(K.facets().size());
  for (const auto& f : K.facets()) duals.push_back(f.normal / f.offset);
  return make_rational_polytope(duals);
}

bool same_vertex_set(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  auto key = [](const RVec3& v) { return std::array<Rational, 3>{v.x, v.y, v.z}; };
  std::vector<std::array<Rational, 3>> ka, kb;
  for (const auto& v : a.vertices()) ka.push_back(key(v));
  for (const auto& v : b.vertices()) kb.push_back(key(v));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

Rational rational_support(const RationalPolytope& K, const RVec3& x) {
  Rational best;
  bool first = true;
  for (const auto& v : K.vertices()) {
    const Rational d = rdot(x, v);
    if (first || d > best) {
      best = d;
      first = false;
    }
  }
  return best;
}

Polytope to_polytope(const RationalPolytope& K) {
  std::vector<Vec3> pts;
  pts.reserve(K.vertices().size());
  for (const auto& v : K.vertices()) pts.push_back(to_double(v));
  return make_polytope(pts);
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    using Int = boost::multiprecision::cpp_int;
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  const auto dotpos = s.find('.');
  if (dotpos == std::string::npos) {
    return Rational(boost::multiprecision::cpp_int(s));
  }
  std::string digits = s.substr(0, dotpos) + s.substr(dotpos + 1);
  const std::size_t frac = s.size() - dotpos - 1;
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = 0; i < frac; ++i) den *= 10;
  return Rational(boost::multiprecision::cpp_int(digits), den);
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

std::vector<RVec3> random_rational_points(std::uint64_t seed, int num_points) {
  const std::int64_t denom = 1 << 20;
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    RngStream rng(seed, "random-rational-points", attempt);
    const Mat3 rot = rng.rotation();
    const double ax = rng.uniform(0.6, 1.8);
    const double ay = rng.uniform(0.6, 1.8);
    const double az = rng.uniform(0.6, 1.8);
    std::vector<Vec3> pts;
    Vec3 mean{0, 0, 0};
    for (int i = 0; i < num_points; ++i) {
      const Vec3 u = rng.sphere();
      const Vec3 p = rot.apply({ax * u.x, ay * u.y, az * u.z});
      pts.push_back(p);
      mean += p;
    }
    mean = mean / num_points;
    std::vector<RVec3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
      const Vec3 q = p - mean;
      auto snap = [&](double c) {
        return Rational(static_cast<std::int64_t>(std::llround(c * denom)), denom);
      };
      out.push_back({snap(q.x), snap(q.y), snap(q.z)});
    }
    // Validate that the snapped cloud still has the origin interior.
    try {
      make_rational_polytope(out);
      return out;
    } catch (const Error&) {
      // resample
    }
  }
  throw Error("random_rational_points: could not produce a valid cloud");
}

}  // namespace gil
