#include "gil/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace gil {

double arc_distance(const UnitVec& u, const UnitVec& v) {
  // atan2 form of arccos(u.v): well conditioned near 0 and pi.
  return std::atan2(norm(cross(u.vec(), v.vec())), dot(u.vec(), v.vec()));
}

namespace {

double point_distance(const Vec3& u, const Vec3& v) {
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

}  // namespace

UnitVec geodesic_mean(const UnitVec& u, const UnitVec& v, double t) {
  const Vec3 w = (1.0 - t) * u.vec() + t * v.vec();
  if (norm(w) < 1e-9) throw AntipodalInputError("geodesic_mean: chord passes through the origin");
  return UnitVec(w);
}

GeodesicArc::GeodesicArc(const UnitVec& a, const UnitVec& b) : a_(a), b_(b) {
  const double c = dot(a.vec(), b.vec());
  if (c <= -1.0 + kNormEps) throw AntipodalInputError("GeodesicArc: endpoints are antipodal");
  if (distance(a.vec(), b.vec()) < kNormEps)
    throw DegeneratePolygonError("GeodesicArc: endpoints coincide");
  pole_ = cross(a.vec(), b.vec());
  pole_ = pole_ / norm(pole_);
  length_ = std::atan2(norm(cross(a.vec(), b.vec())), c);
}

UnitVec GeodesicArc::point_at(double s) const {
  const double L = length_;
  const double sl = std::sin(L);
  if (sl < 1e-15) return a_;
  const double wa = std::sin((1.0 - s) * L) / sl;
  const double wb = std::sin(s * L) / sl;
  return UnitVec(wa * a_.vec() + wb * b_.vec());
}

namespace {

// Signed turning angle at v when traveling prev -> v -> next along geodesics.
// Positive = left turn (convex corner of a CCW ring); pi would be a reversal.
double turning_angle(const Vec3& prev, const Vec3& v, const Vec3& next) {
  Vec3 in = cross(cross(v, prev), v);   // tangent at v pointing toward prev
  Vec3 out = cross(cross(v, next), v);  // tangent at v pointing toward next
  const double ni = norm(in), no = norm(out);
  if (ni < 1e-15 || no < 1e-15) return 0.0;
  in = in / ni;
  out = out / no;
  const Vec3 arrive = -1.0 * in;
  return std::atan2(dot(cross(arrive, out), v), dot(arrive, out));
}

}  // namespace

SphericalPolygon::SphericalPolygon(std::vector<UnitVec> ring)
    : SphericalPolygon(std::move(ring), UnitVec(0, 0, 1)) {}

SphericalPolygon::SphericalPolygon(std::vector<UnitVec> ring, const UnitVec& witness)
    : ring_(std::move(ring)) {
  const int k = static_cast<int>(ring_.size());
  if (k < 3) throw DegeneratePolygonError("SphericalPolygon: fewer than 3 vertices");
  for (int i = 0; i < k; ++i) {
    const Vec3& a = ring_[i].vec();
    const Vec3& b = ring_[(i + 1) % k].vec();
    if (distance(a, b) < kNormEps)
      throw DegeneratePolygonError("SphericalPolygon: repeated consecutive vertices");
    if (dot(a, b) <= -1.0 + kNormEps)
      throw DegeneratePolygonError("SphericalPolygon: antipodal consecutive vertices");
  }

  // Orientation: accumulated turning is +2pi for CCW, -2pi for CW.
  double turn_sum = 0.0;
  double max_abs_turn = 0.0;
  for (int i = 0; i < k; ++i) {
    const double t = turning_angle(ring_[(i + k - 1) % k].vec(), ring_[i].vec(),
                                   ring_[(i + 1) % k].vec());
    turn_sum += t;
    max_abs_turn = std::max(max_abs_turn, std::abs(t));
  }
  if (max_abs_turn > kPi - 1e-9)
    throw DegeneratePolygonError("SphericalPolygon: ring reverses onto itself");
  if (turn_sum < 0.0) std::reverse(ring_.begin(), ring_.end());

  poles_.resize(k);
  for (int i = 0; i < k; ++i) {
    Vec3 p = cross(ring_[i].vec(), ring_[(i + 1) % k].vec());
    poles_[i] = p / norm(p);
  }
  // Convexity: every vertex on the inner side of every edge plane.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (dot(poles_[i], ring_[j].vec()) < -kGeomEps)
        throw DegeneratePolygonError("SphericalPolygon: ring is not convex");

  // Open-hemisphere witness: the supplied hint first, then the vertex mean,
  // the pole mean and individual vertices.
  std::vector<Vec3> candidates = {witness.vec()};
  Vec3 vsum{0, 0, 0}, psum{0, 0, 0};
  for (const auto& v : ring_) vsum += v.vec();
  for (const auto& p : poles_) psum += p;
  if (norm(vsum) > 1e-12) candidates.push_back(vsum / norm(vsum));
  if (norm(psum) > 1e-12) candidates.push_back(psum / norm(psum));
  if (norm(vsum + psum) > 1e-12) candidates.push_back((vsum + psum) / norm(vsum + psum));
  for (const auto& v : ring_) candidates.push_back(v.vec());

  bool found = false;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& v : ring_) ok = ok && dot(c, v.vec()) > 0.0;
    if (ok) {
      inner_ = UnitVec(c);
      found = true;
      break;
    }
  }
  if (!found) throw DegeneratePolygonError("SphericalPolygon: not in an open hemisphere");
}

bool SphericalPolygon::contains(const Vec3& u, double tol) const {
  for (const auto& p : poles_)
    if (dot(p, u) < -tol) return false;
  return true;
}

double SphericalPolygon::distance_to(const Vec3& u) const {
  if (contains(u)) return 0.0;
  double best = kPi;
  const int k = size();
  for (int i = 0; i < k; ++i) {
    GeodesicArc e(ring_[i], ring_[(i + 1) % k]);
    best = std::min(best, distance_point_arc(u, e));
  }
  return best;
}

double SphericalPolygon::diameter() const {
  double d = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) d = std::max(d, arc_distance(ring_[i], ring_[j]));
  return d;
}

double polygon_area(const SphericalPolygon& p) {
  return ring_area(p.vertices());
}

double ring_area(const std::vector<UnitVec>& ring) {
  const int k = static_cast<int>(ring.size());
  if (k < 3) return 0.0;
  // 2pi minus total turning; equals angle excess for convex rings.
  double turn = 0.0;
  for (int i = 0; i < k; ++i)
    turn += turning_angle(ring[(i + k - 1) % k].vec(), ring[i].vec(), ring[(i + 1) % k].vec());
  const double area = 2.0 * kPi - turn;
  return area < 0.0 ? 0.0 : area;
}

void SphericalRegion::append(const SphericalRegion& other) {
  points.insert(points.end(), other.points.begin(), other.points.end());
  arcs.insert(arcs.end(), other.arcs.begin(), other.arcs.end());
  polygons.insert(polygons.end(), other.polygons.begin(), other.polygons.end());
}

namespace {

bool same_arc(const GeodesicArc& p, const GeodesicArc& q, double tol) {
  return (distance(p.a().vec(), q.a().vec()) <= tol && distance(p.b().vec(), q.b().vec()) <= tol) ||
         (distance(p.a().vec(), q.b().vec()) <= tol && distance(p.b().vec(), q.a().vec()) <= tol);
}

bool same_ring(const SphericalPolygon& p, const SphericalPolygon& q, double tol) {
  if (p.size() != q.size()) return false;
  const int k = p.size();
  for (int off = 0; off < k; ++off) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      ok = distance(p.vertex(i).vec(), q.vertex((i + off) % k).vec()) <= tol;
    if (ok) return true;
  }
  return false;
}

}  // namespace

SphericalRegion deduplicated(const SphericalRegion& r, double tol) {
  SphericalRegion out;
  for (const auto& p : r.points) {
    bool dup = false;
    for (const auto& q : out.points) dup = dup || distance(p.vec(), q.vec()) <= tol;
    if (!dup) out.points.push_back(p);
  }
  for (const auto& a : r.arcs) {
    bool dup = false;
    for (const auto& b : out.arcs) dup = dup || same_arc(a, b, tol);
    if (!dup) out.arcs.push_back(a);
  }
  for (const auto& p : r.polygons) {
    bool dup = false;
    for (const auto& q : out.polygons) dup = dup || same_ring(p, q, tol);
    if (!dup) out.polygons.push_back(p);
  }
  return out;
}

double distance_point_arc(const Vec3& u, const GeodesicArc& arc) {
  const Vec3& g = arc.pole();
  const Vec3 w = u - dot(u, g) * g;
  const double wn = norm(w);
  const double da = point_distance(u, arc.a().vec());
  const double db = point_distance(u, arc.b().vec());
  if (wn < 1e-14) return std::min(da, db);  // u at the circle's pole
  const Vec3 p = w / wn;
  // Foot of the perpendicular is within the minor arc iff it lies between
  // the endpoints along the circle.
  const double foot_a = point_distance(p, arc.a().vec());
  const double foot_b = point_distance(p, arc.b().vec());
  if (foot_a + foot_b <= arc.length() + 1e-9) return point_distance(u, p);
  return std::min(da, db);
}

bool point_on_arc(const Vec3& u, const GeodesicArc& arc, double tol) {
  return distance_point_arc(u, arc) <= tol;
}

bool arcs_intersect(const GeodesicArc& p, const GeodesicArc& q, double tol) {
  const Vec3 dir = cross(p.pole(), q.pole());
  const double dn = norm(dir);
  if (dn < 1e-12) {
    // Same (or opposite) great circle: overlap iff an endpoint of one lies
    // on the other.
    return point_on_arc(p.a().vec(), q, tol) || point_on_arc(p.b().vec(), q, tol) ||
           point_on_arc(q.a().vec(), p, tol) || point_on_arc(q.b().vec(), p, tol);
  }
  const Vec3 c = dir / dn;
  for (const Vec3 cand : {c, -1.0 * c}) {
    if (point_on_arc(cand, p, tol) && point_on_arc(cand, q, tol)) return true;
  }
  return false;
}

bool arc_intersects_polygon(const GeodesicArc& arc, const SphericalPolygon& poly, double tol) {
  if (poly.contains(arc.a().vec(), tol) || poly.contains(arc.b().vec(), tol)) return true;
  const int k = poly.size();
  for (int i = 0; i < k; ++i) {
    GeodesicArc e(poly.vertex(i), poly.vertex((i + 1) % k));
    if (arcs_intersect(arc, e, tol)) return true;
  }
  return false;
}

bool polygons_intersect(const SphericalPolygon& p, const SphericalPolygon& q, double tol) {
  for (const auto& v : p.vertices())
    if (q.contains(v.vec(), tol)) return true;
  for (const auto& v : q.vertices())
    if (p.contains(v.vec(), tol)) return true;
  const int kp = p.size(), kq = q.size();
  for (int i = 0; i < kp; ++i) {
    GeodesicArc ep(p.vertex(i), p.vertex((i + 1) % kp));
    for (int j = 0; j < kq; ++j) {
      GeodesicArc eq(q.vertex(j), q.vertex((j + 1) % kq));
      if (arcs_intersect(ep, eq, tol)) return true;
    }
  }
  return false;
}

bool cap_intersects_arc(const Cap& c, const GeodesicArc& arc, double tol) {
  return distance_point_arc(c.center.vec(), arc) <= c.radius + tol;
}

bool cap_intersects_polygon(const Cap& c, const SphericalPolygon& poly, double tol) {
  return poly.distance_to(c.center.vec()) <= c.radius + tol;
}

bool region_contains(const SphericalRegion& r, const Vec3& u, double tol) {
  for (const auto& p : r.polygons)
    if (p.contains(u, tol)) return true;
  for (const auto& a : r.arcs)
    if (point_on_arc(u, a, tol)) return true;
  for (const auto& p : r.points)
    if (distance(p.vec(), u) <= tol) return true;
  return false;
}

double distance_to_region(const Vec3& u, const SphericalRegion& r) {
  double best = kPi;
  for (const auto& p : r.polygons) {
    best = std::min(best, p.distance_to(u));
    if (best == 0.0) return 0.0;
  }
  for (const auto& a : r.arcs) best = std::min(best, distance_point_arc(u, a));
  for (const auto& p : r.points) best = std::min(best, point_distance(p.vec(), u));
  return best;
}

QuerySet QuerySet::point(const UnitVec& u) {
  QuerySet q;
  q.points.push_back(u);
  return q;
}
QuerySet QuerySet::arc(const GeodesicArc& a) {
  QuerySet q;
  q.arcs.push_back(a);
  return q;
}
QuerySet QuerySet::polygon(const SphericalPolygon& p) {
  QuerySet q;
  q.polygons.push_back(p);
  return q;
}
QuerySet QuerySet::polygon_list(std::vector<SphericalPolygon> ps) {
  QuerySet q;
  q.polygons = std::move(ps);
  return q;
}
QuerySet QuerySet::cap(const Cap& c) {
  QuerySet q;
  q.caps.push_back(c);
  return q;
}
QuerySet QuerySet::all() {
  QuerySet q;
  q.whole_sphere = true;
  return q;
}
QuerySet QuerySet::boundary_of(const SphericalPolygon& p) {
  QuerySet q;
  const int k = p.size();
  for (int i = 0; i < k; ++i) q.arcs.emplace_back(p.vertex(i), p.vertex((i + 1) % k));
  return q;
}

bool QuerySet::contains(const Vec3& u, double tol) const {
  if (whole_sphere) return true;
  for (const auto& p : points)
    if (distance(p.vec(), u) <= tol) return true;
  for (const auto& a : arcs)
    if (point_on_arc(u, a, tol)) return true;
  for (const auto& p : polygons)
    if (p.contains(u, tol)) return true;
  for (const auto& c : caps)
    if (c.contains(u, tol)) return true;
  return false;
}

bool QuerySet::meets_arc(const GeodesicArc& a, double tol) const {
  if (whole_sphere) return true;
  for (const auto& p : points)
    if (point_on_arc(p.vec(), a, tol)) return true;
  for (const auto& q : arcs)
    if (arcs_intersect(q, a, tol)) return true;
  for (const auto& p : polygons)
    if (arc_intersects_polygon(a, p, tol)) return true;
  for (const auto& c : caps)
    if (cap_intersects_arc(c, a, tol)) return true;
  return false;
}

bool QuerySet::meets_polygon(const SphericalPolygon& p, double tol) const {
  if (whole_sphere) return true;
  for (const auto& q : points)
    if (p.contains(q.vec(), tol)) return true;
  for (const auto& a : arcs)
    if (arc_intersects_polygon(a, p, tol)) return true;
  for (const auto& q : polygons)
    if (polygons_intersect(q, p, tol)) return true;
  for (const auto& c : caps)
    if (cap_intersects_polygon(c, p, tol)) return true;
  return false;
}

namespace {

// Extreme rays of the cone {x : x.g <= 0 for all generators g}, i.e. the
// polar cone. Returns unit rays; the cone may be full-dimensional (>= 3
// rays), a planar wedge (2), a single ray (1) or just the origin (0).
std::vector<Vec3> polar_cone_rays(std::span<const UnitVec> gen, double tol) {
  std::vector<Vec3> rays;
  auto feasible = [&](const Vec3& v) {
    for (const auto& g : gen)
      if (dot(g.vec(), v) > tol) return false;
    return true;
  };
  const int n = static_cast<int>(gen.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec3 c = cross(gen[i].vec(), gen[j].vec());
      const double cn = norm(c);
      if (cn < 1e-12) continue;
      c = c / cn;
      if (feasible(c)) rays.push_back(c);
      if (feasible(-1.0 * c)) rays.push_back(-1.0 * c);
    }
  }
  // n == 1: a half-space; no extreme rays, handled by the caller.
  // Deduplicate.
  std::vector<Vec3> out;
  for (const auto& r : rays) {
    bool dup = false;
    for (const auto& o : out) dup = dup || distance(r, o) <= 1e-9;
    if (!dup) out.push_back(r);
  }
  return out;
}

// Fan a closed boundary cycle around an interior direction, splitting into
// valid convex polygons. Used for wide polar sets (hemispheres, lunes).
void fan_into(SphericalRegion& region, const Vec3& center, const std::vector<Vec3>& cycle) {
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    const Vec3& a = cycle[i];
    const Vec3& b = cycle[(i + 1) % k];
    if (distance(a, b) < kNormEps) continue;
    region.polygons.push_back(
        SphericalPolygon({UnitVec(center), UnitVec(a), UnitVec(b)}));
  }
}

}  // namespace

SphericalRegion polar_set(std::span<const UnitVec> generators) {
  if (generators.empty()) throw InputError("polar_set: no generators");
  // Reduce to distinct generators.
  std::vector<UnitVec> gen;
  for (const auto& g : generators) {
    bool dup = false;
    for (const auto& h : gen) dup = dup || distance(g.vec(), h.vec()) <= 1e-12;
    if (!dup) gen.push_back(g);
  }

  SphericalRegion out;
  if (gen.size() == 1) {
    // Closed hemisphere opposite the generator: fan of four quarter-disks.
    const Vec3 u = gen[0].vec();
    Vec3 t1, t2;
    tangent_frame(u, t1, t2);
    fan_into(out, -1.0 * u, {t1, t2, -1.0 * t1, -1.0 * t2});
    return out;
  }

  const double tol = kGeomEps;
  std::vector<Vec3> rays = polar_cone_rays(gen, tol);

  if (rays.empty()) {
    // Generators span the sphere widely; polar set is empty or lower
    // dimensional only when generators are degenerate. With the documented
    // precondition (generators in a closed hemisphere) this cannot happen.
    return out;
  }
  if (rays.size() == 1) {
    out.points.emplace_back(rays[0]);
    return out;
  }
  if (rays.size() == 2) {
    const double c = dot(rays[0], rays[1]);
    if (c <= -1.0 + 1e-12) {
      // Antipodal rays: the polar set is either a half great circle (lune of
      // zero width) or a full lune. Detect interior directions.
      Vec3 axis = rays[0];
      Vec3 t1, t2;
      tangent_frame(axis, t1, t2);
      std::vector<Vec3> interior;
      const int probes = 16;
      for (int i = 0; i < probes; ++i) {
        const double phi = 2.0 * kPi * i / probes;
        Vec3 m = t1 * std::cos(phi) + t2 * std::sin(phi);
        bool ok = true;
        for (const auto& g : gen) ok = ok && dot(g.vec(), m) <= tol;
        if (ok) interior.push_back(m);
      }
      if (interior.empty()) {
        // Degenerate: half circle between the two rays through some feasible
        // direction; represent as two quarter arcs via a midpoint probe.
        out.arcs.emplace_back(UnitVec(rays[0]), UnitVec(rays[1]));
        return out;
      }
      // Full lune: fan around the deepest interior direction.
      Vec3 c0{0, 0, 0};
      for (const auto& m : interior) c0 += m;
      if (norm(c0) < 1e-12) c0 = interior[0];
      const Vec3 mid = c0 / norm(c0);
      // Boundary: two half-circles from rays[0] to rays[1]. Their planes are
      // the generator planes active at the lune.
      std::vector<Vec3> bd_mids;
      for (const auto& g : gen) {
        // Midpoint of the boundary arc on plane g: direction orthogonal to
        // axis within the plane g.v = 0, on the feasible side.
        Vec3 m = cross(g.vec(), axis);
        const double mn = norm(m);
        if (mn < 1e-12) continue;
        m = m / mn;
        for (const Vec3 cand : {m, -1.0 * m}) {
          bool ok = true;
          for (const auto& h : gen) ok = ok && dot(h.vec(), cand) <= 1e-7;
          if (ok) {
            bool dup = false;
            for (const auto& x : bd_mids) dup = dup || distance(x, cand) <= 1e-9;
            if (!dup) bd_mids.push_back(cand);
          }
        }
      }
      if (bd_mids.size() >= 2) {
        fan_into(out, mid, {rays[0], bd_mids[0], rays[1], bd_mids[1]});
      } else {
        out.arcs.emplace_back(UnitVec(rays[0]), UnitVec(rays[1]));
      }
      return out;
    }
    out.arcs.emplace_back(UnitVec(rays[0]), UnitVec(rays[1]));
    return out;
  }

  // Full-dimensional polar cone: order rays around the mean direction.
  Vec3 c{0, 0, 0};
  for (const auto& r : rays) c += r;
  if (norm(c) < 1e-9) {
    // Wide region (hemisphere-like). Fall back: fan around any feasible
    // direction.
    c = rays[0];
  }
  const Vec3 center = c / norm(c);
  Vec3 t1, t2;
  tangent_frame(center, t1, t2);
  std::sort(rays.begin(), rays.end(), [&](const Vec3& p, const Vec3& q) {
    return std::atan2(dot(p, t2), dot(p, t1)) < std::atan2(dot(q, t2), dot(q, t1));
  });
  bool narrow = true;
  for (const auto& r : rays) narrow = narrow && dot(center, r) > 1e-7;
  if (narrow) {
    std::vector<UnitVec> ring;
    for (const auto& r : rays) ring.emplace_back(r);
    out.polygons.emplace_back(std::move(ring));
  } else {
    fan_into(out, center, rays);
  }
  return out;
}

SphericalRegion polar_set(const SphericalPolygon& p) {
  return polar_set(std::span<const UnitVec>(p.vertices()));
}

UnitVec sample_polygon(const SphericalPolygon& p, RngStream& rng) {
  const Vec3 c = p.inner_point().vec();
  double r = 0.0;
  for (const auto& v : p.vertices()) r = std::max(r, std::acos(clamp_unit(dot(c, v.vec()))));
  r = std::min(r + 1e-12, kPi - 1e-9);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Vec3 u = rng.cap_point(c, r);
    if (p.contains(u, 0.0)) return UnitVec(u);
  }
  return p.inner_point();
}

std::optional<UnitVec> sample_region_area(const SphericalRegion& r, RngStream& rng) {
  if (r.polygons.empty()) return std::nullopt;
  std::vector<double> acc;
  double total = 0.0;
  for (const auto& p : r.polygons) {
    total += polygon_area(p);
    acc.push_back(total);
  }
  if (total <= 0.0) return std::nullopt;
  const double pick = rng.uniform(0.0, total);
  std::size_t idx = std::lower_bound(acc.begin(), acc.end(), pick) - acc.begin();
  if (idx >= r.polygons.size()) idx = r.polygons.size() - 1;
  return sample_polygon(r.polygons[idx], rng);
}

}  // namespace gil
