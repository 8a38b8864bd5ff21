#include <algorithm>
#include <cmath>

#include "gil/sphere.hpp"

namespace gil {

namespace {

struct BoundaryArc {
  int circle;       // constraint index
  double lo, hi;    // azimuth range (traversal direction, region on the left)
  Vec3 start, end;  // endpoints on the sphere
  bool full;        // entire circle visible
};

struct CircleFrame {
  Vec3 w;         // constraint normal
  double d;       // offset
  double s;       // circle radius sqrt(1-d^2)
  Vec3 e1, e2;    // orthonormal basis of the circle plane
  Vec3 at(double phi) const {
    return w * d + e1 * (s * std::cos(phi)) + e2 * (s * std::sin(phi));
  }
};

double wrap_angle(double a) {
  while (a < 0.0) a += 2.0 * kPi;
  while (a >= 2.0 * kPi) a -= 2.0 * kPi;
  return a;
}

// Subset of the circle as a list of disjoint angular intervals [lo, hi] with
// lo in [0, 2pi) and hi <= lo + 2pi. `full` marks the whole circle.
struct AngleSet {
  bool full = true;
  std::vector<std::pair<double, double>> iv;

  void restrict_to(double lo, double hi) {  // single wrapped interval
    lo = wrap_angle(lo);
    if (hi < lo) hi += 2.0 * kPi;
    if (full) {
      full = false;
      iv = {{lo, hi}};
      return;
    }
    std::vector<std::pair<double, double>> next;
    for (const auto& [a, b] : iv) {
      for (int k = -1; k <= 1; ++k) {
        const double l2 = lo + 2.0 * kPi * k;
        const double h2 = hi + 2.0 * kPi * k;
        const double l = std::max(a, l2);
        const double h = std::min(b, h2);
        if (h - l > 1e-13) next.emplace_back(l, h);
      }
    }
    iv = std::move(next);
  }
  void clear() {
    full = false;
    iv.clear();
  }
  bool empty() const { return !full && iv.empty(); }
};

}  // namespace

// Gauss-Bonnet over the assembled boundary: for a genus-0 region with b
// boundary cycles, area = 2pi(2-b) - sum of (offset * azimuth span) over
// boundary pieces - sum of corner turning angles. A small circle at offset d
// has geodesic curvature d/sqrt(1-d^2) and arc length sqrt(1-d^2) * dphi, so
// its k_g integral is d * dphi; great circles (d = 0) contribute nothing.
double intersection_area(std::vector<HalfSpace> constraints) {
  // Drop duplicates; keep the tightest of near-identical constraints.
  std::vector<HalfSpace> cs;
  for (const auto& c : constraints) {
    bool dup = false;
    for (auto& o : cs) {
      if (distance(c.normal, o.normal) <= 1e-12) {
        o.offset = std::max(o.offset, c.offset);
        dup = true;
        break;
      }
    }
    if (!dup) cs.push_back(c);
  }
  if (cs.empty()) return 4.0 * kPi;

  const int n = static_cast<int>(cs.size());
  std::vector<CircleFrame> frames(n);
  for (int i = 0; i < n; ++i) {
    frames[i].w = cs[i].normal;
    frames[i].d = cs[i].offset;
    frames[i].s = std::sqrt(std::max(0.0, 1.0 - cs[i].offset * cs[i].offset));
    tangent_frame(frames[i].w, frames[i].e1, frames[i].e2);
  }

  std::vector<BoundaryArc> arcs;
  for (int i = 0; i < n; ++i) {
    const CircleFrame& f = frames[i];
    if (f.s < 1e-12) continue;  // degenerate circle (offset at +-1)
    // Visible portion of circle i: the azimuth set satisfying all other
    // constraints. Each constraint cuts the circle in at most one arc; the
    // visible set is the intersection of those arcs and may consist of
    // several pieces (a small circle can cross a thin region repeatedly).
    AngleSet visible;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double A = f.s * dot(f.e1, cs[j].normal);
      const double B = f.s * dot(f.e2, cs[j].normal);
      const double C = cs[j].offset - f.d * dot(f.w, cs[j].normal);
      const double m = std::sqrt(A * A + B * B);
      if (m < std::abs(C) || m < 1e-14) {
        // Circle entirely on one side of constraint j: inside iff C <= 0.
        if (C <= 0.0) continue;
        visible.clear();
        break;
      }
      const double center = std::atan2(B, A);
      const double half = std::acos(clamp_unit(C / m));
      visible.restrict_to(center - half, center + half);
      if (visible.empty()) break;
    }
    if (visible.empty()) continue;
    if (visible.full) {
      BoundaryArc a;
      a.circle = i;
      a.full = true;
      a.lo = 0.0;
      a.hi = 2.0 * kPi;
      arcs.push_back(a);
      continue;
    }
    for (const auto& [lo, hi] : visible.iv) {
      BoundaryArc a;
      a.circle = i;
      a.full = false;
      a.lo = lo;
      a.hi = hi;
      a.start = f.at(lo);
      a.end = f.at(hi);
      arcs.push_back(a);
    }
  }

  if (arcs.empty()) {
    // No boundary: the region is empty, a single point, or (with no effective
    // constraint, handled above) the sphere. Distinguish with a feasibility
    // probe at the deepest pole.
    int deepest = 0;
    for (int i = 1; i < n; ++i)
      if (cs[i].offset > cs[deepest].offset) deepest = i;
    const Vec3 probe = cs[deepest].normal;
    for (const auto& c : cs)
      if (dot(c.normal, probe) < c.offset - 1e-12) return 0.0;
    // Feasible with no boundary cannot cover a proper region; treat as empty.
    return 0.0;
  }

  // Assemble cycles: each partial arc's end connects to exactly one start.
  double kg_sum = 0.0;
  double turn_sum = 0.0;
  int cycles = 0;
  std::vector<bool> used(arcs.size(), false);

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].full) {
      kg_sum += frames[arcs[i].circle].d * 2.0 * kPi;
      ++cycles;
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (used[i]) continue;
    ++cycles;
    std::size_t cur = i;
    while (!used[cur]) {
      used[cur] = true;
      const BoundaryArc& a = arcs[cur];
      kg_sum += frames[a.circle].d * (a.hi - a.lo);
      // Find the successor: the unused (or cycle-start) arc whose start
      // matches this arc's end.
      std::size_t next = arcs.size();
      double best = 1e9;
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        if (arcs[j].full) continue;
        const double d2 = distance(a.end, arcs[j].start);
        if (d2 < best) {
          best = d2;
          next = j;
        }
      }
      if (next == arcs.size() || best > 1e-6) break;  // open chain: tolerance residue
      // Turning angle at the shared corner.
      const Vec3 p = a.end;
      Vec3 t_in = cross(frames[a.circle].w, p);
      Vec3 t_out = cross(frames[arcs[next].circle].w, arcs[next].start);
      const double ni = norm(t_in), no = norm(t_out);
      if (ni > 1e-14 && no > 1e-14) {
        t_in = t_in / ni;
        t_out = t_out / no;
        double turn = std::atan2(dot(cross(t_in, t_out), p), dot(t_in, t_out));
        // Tangency cusps sit at +-pi; for the supported (convex-piece)
        // constraints corners turn left, so resolve the sign upward.
        if (turn < -(kPi - 1e-6)) turn += 2.0 * kPi;
        turn_sum += turn;
      }
      if (used[next]) break;  // closed the cycle
      cur = next;
    }
  }

  double area = 2.0 * kPi * (2.0 - cycles) - kg_sum - turn_sum;
  if (area < 0.0 && area > -1e-9) area = 0.0;
  return area;
}

std::vector<UnitVec> clip_ring(const std::vector<UnitVec>& ring, const Vec3& pole, double tol) {
  std::vector<UnitVec> out;
  const int k = static_cast<int>(ring.size());
  if (k == 0) return out;
  for (int i = 0; i < k; ++i) {
    const Vec3& a = ring[i].vec();
    const Vec3& b = ring[(i + 1) % k].vec();
    const double da = dot(a, pole);
    const double db = dot(b, pole);
    const bool ina = da >= -tol;
    const bool inb = db >= -tol;
    if (ina) out.push_back(ring[i]);
    if (ina != inb && std::abs(da - db) > 1e-15) {
      // Crossing point: the positive combination |db| a + |da| b lies on the
      // edge's great circle and satisfies p.pole = 0 when da, db straddle 0.
      const Vec3 p = a * std::abs(db) + b * std::abs(da);
      const double pn = norm(p);
      if (pn > 1e-14) out.emplace_back(p);
    }
  }
  // Drop near-duplicate consecutive vertices.
  std::vector<UnitVec> cleaned;
  for (const auto& v : out) {
    if (cleaned.empty() || distance(cleaned.back().vec(), v.vec()) > 1e-12) cleaned.push_back(v);
  }
  while (cleaned.size() >= 2 && distance(cleaned.front().vec(), cleaned.back().vec()) <= 1e-12)
    cleaned.pop_back();
  return cleaned;
}

double polygon_overlap_area(const SphericalPolygon& p, const SphericalPolygon& q) {
  std::vector<UnitVec> ring = p.vertices();
  for (int i = 0; i < q.size() && !ring.empty(); ++i) ring = clip_ring(ring, q.edge_pole(i));
  if (ring.size() < 3) return 0.0;
  return ring_area(ring);
}

double ring_caps_area(const std::vector<UnitVec>& ring, std::span<const Cap> caps) {
  if (ring.size() < 3 || caps.empty()) return 0.0;
  if (caps.size() > 16) throw InputError("ring_caps_area: too many caps for inclusion-exclusion");
  for (const auto& c : caps)
    if (c.radius >= kPi / 2)
      throw InputError("ring_caps_area: caps must have radius < pi/2");

  std::vector<HalfSpace> base;
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    Vec3 pole = cross(ring[i].vec(), ring[(i + 1) % k].vec());
    const double pn = norm(pole);
    if (pn < 1e-14) continue;
    base.push_back({pole / pn, 0.0});
  }

  // Inclusion-exclusion over cap subsets; subsets with a pairwise-disjoint
  // pair contribute nothing.
  const int m = static_cast<int>(caps.size());
  std::vector<std::vector<bool>> overlap(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      overlap[i][j] = arc_distance(caps[i].center, caps[j].center) <
                      caps[i].radius + caps[j].radius + 1e-12;

  double total = 0.0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool viable = true;
    for (int i = 0; i < m && viable; ++i)
      for (int j = i + 1; j < m && viable; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u)) viable = overlap[i][j];
    if (!viable) continue;
    std::vector<HalfSpace> cs = base;
    int bits = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) {
        cs.push_back({caps[i].center.vec(), std::cos(caps[i].radius)});
        ++bits;
      }
    }
    const double a = intersection_area(std::move(cs));
    total += (bits % 2 == 1) ? a : -a;
  }
  return std::max(total, 0.0);
}

// --- Stratified region intersection ----------------------------------------

namespace {

// Classify a clipped ring back into a stratum.
void push_ring_stratum(SphericalRegion& out, const std::vector<UnitVec>& ring) {
  if (ring.empty()) return;
  // Collapse near-duplicate vertices.
  std::vector<UnitVec> vs;
  for (const auto& v : ring) {
    bool dup = false;
    for (const auto& w : vs) dup = dup || distance(v.vec(), w.vec()) <= 1e-9;
    if (!dup) vs.push_back(v);
  }
  if (vs.size() == 1) {
    out.points.push_back(vs[0]);
    return;
  }
  if (vs.size() == 2) {
    out.arcs.emplace_back(vs[0], vs[1]);
    return;
  }
  if (ring_area(ring) <= 1e-14) {
    // Flat sliver: keep the two extreme vertices as an arc.
    double best = -1.0;
    std::pair<int, int> ext{0, 1};
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const double d = arc_distance(vs[i], vs[j]);
        if (d > best) {
          best = d;
          ext = {static_cast<int>(i), static_cast<int>(j)};
        }
      }
    out.arcs.emplace_back(vs[ext.first], vs[ext.second]);
    return;
  }
  try {
    out.polygons.emplace_back(ring);
  } catch (const Error&) {
    // Numerically marginal ring: fall back to its hull.
    SphericalRegion h = spherical_convex_hull(std::span<const UnitVec>(ring));
    out.append(h);
  }
}

// Sub-arc of `arc` inside polygon `poly` (parameter interval intersection).
void clip_arc_to_polygon(SphericalRegion& out, const GeodesicArc& arc,
                         const SphericalPolygon& poly) {
  double lo = 0.0, hi = 1.0;
  const double L = arc.length();
  for (int i = 0; i < poly.size() && lo <= hi; ++i) {
    const Vec3& pole = poly.edge_pole(i);
    // g(s) = p(s).pole with p(s) = (sin((1-s)L) a + sin(sL) b)/sin L.
    const double ca = dot(arc.a().vec(), pole);
    const double cb = dot(arc.b().vec(), pole);
    // g(s) ~ ca sin((1-s)L) + cb sin(sL); find the feasible s-interval.
    auto g = [&](double s) { return ca * std::sin((1.0 - s) * L) + cb * std::sin(s * L); };
    const bool in0 = g(lo) >= -1e-12;
    const bool in1 = g(hi) >= -1e-12;
    if (in0 && in1) continue;
    // At most one sign change on the minor arc: bisect for the crossing.
    if (!in0 && !in1) {
      lo = 1.0;
      hi = 0.0;
      break;
    }
    double a = lo, b = hi;
    for (int it = 0; it < 60; ++it) {
      const double m = 0.5 * (a + b);
      if ((g(m) >= 0.0) == in0)
        a = m;
      else
        b = m;
    }
    if (in0)
      hi = 0.5 * (a + b);
    else
      lo = 0.5 * (a + b);
  }
  if (lo > hi) return;
  const UnitVec pa = arc.point_at(lo);
  const UnitVec pb = arc.point_at(hi);
  if (distance(pa.vec(), pb.vec()) <= 1e-9)
    out.points.push_back(pa);
  else
    out.arcs.emplace_back(pa, pb);
}

void intersect_arcs_into(SphericalRegion& out, const GeodesicArc& p, const GeodesicArc& q,
                         double tol) {
  const Vec3 dir = cross(p.pole(), q.pole());
  const double dn = norm(dir);
  if (dn < 1e-12) {
    // Same great circle: overlap is a sub-arc. Collect endpoints lying on
    // both arcs.
    std::vector<UnitVec> pts;
    for (const UnitVec& v : {p.a(), p.b(), q.a(), q.b()})
      if (point_on_arc(v.vec(), p, tol) && point_on_arc(v.vec(), q, tol)) pts.push_back(v);
    std::vector<UnitVec> uniq;
    for (const auto& v : pts) {
      bool dup = false;
      for (const auto& w : uniq) dup = dup || distance(v.vec(), w.vec()) <= 1e-9;
      if (!dup) uniq.push_back(v);
    }
    if (uniq.size() == 1) out.points.push_back(uniq[0]);
    if (uniq.size() >= 2) {
      double best = -1.0;
      std::pair<int, int> ext{0, 0};
      for (std::size_t i = 0; i < uniq.size(); ++i)
        for (std::size_t j = i + 1; j < uniq.size(); ++j)
          if (arc_distance(uniq[i], uniq[j]) > best) {
            best = arc_distance(uniq[i], uniq[j]);
            ext = {static_cast<int>(i), static_cast<int>(j)};
          }
      if (best <= 1e-9)
        out.points.push_back(uniq[0]);
      else
        out.arcs.emplace_back(uniq[ext.first], uniq[ext.second]);
    }
    return;
  }
  const Vec3 c = dir / dn;
  for (const Vec3 cand : {c, -1.0 * c})
    if (point_on_arc(cand, p, tol) && point_on_arc(cand, q, tol)) out.points.emplace_back(cand);
}

}  // namespace

SphericalRegion intersect_regions(const SphericalRegion& a, const SphericalRegion& b, double tol) {
  SphericalRegion out;
  // point x anything
  for (const auto& p : a.points)
    if (region_contains(b, p.vec(), tol)) out.points.push_back(p);
  for (const auto& p : b.points)
    if (region_contains(a, p.vec(), tol)) out.points.push_back(p);
  // arc x arc
  for (const auto& pa : a.arcs)
    for (const auto& qb : b.arcs) intersect_arcs_into(out, pa, qb, tol);
  // arc x polygon
  for (const auto& pa : a.arcs)
    for (const auto& qb : b.polygons) clip_arc_to_polygon(out, pa, qb);
  for (const auto& pb : b.arcs)
    for (const auto& qa : a.polygons) clip_arc_to_polygon(out, pb, qa);
  // polygon x polygon
  for (const auto& pa : a.polygons)
    for (const auto& qb : b.polygons) {
      std::vector<UnitVec> ring = pa.vertices();
      for (int i = 0; i < qb.size() && !ring.empty(); ++i) ring = clip_ring(ring, qb.edge_pole(i));
      if (!ring.empty()) push_ring_stratum(out, ring);
    }
  return deduplicated(out, tol);
}

// --- Hausdorff distance ------------------------------------------------------

namespace {

// min distance from u to the region, abandoning early once provably below
// `give_up_below` (returns an upper bound in that case, which is all the
// caller needs).
double distance_to_region_pruned(const Vec3& u, const SphericalRegion& r, double give_up_below) {
  double best = kPi;
  for (const auto& p : r.polygons) {
    best = std::min(best, p.distance_to(u));
    if (best <= give_up_below) return best;
  }
  for (const auto& a : r.arcs) {
    best = std::min(best, distance_point_arc(u, a));
    if (best <= give_up_below) return best;
  }
  for (const auto& p : r.points) {
    best = std::min(best, std::atan2(norm(cross(p.vec(), u)), dot(p.vec(), u)));
    if (best <= give_up_below) return best;
  }
  return best;
}

struct TriNode {
  Vec3 a, b, c;
};

}  // namespace

double directed_hausdorff(const SphericalRegion& from, const SphericalRegion& to, double res) {
  if (from.empty() || to.empty())
    throw EmptyRegionError("directed_hausdorff: empty region");
  if (!(res > 0.0)) throw InputError("directed_hausdorff: res must be positive");

  double best = 0.0;
  for (const auto& p : from.points)
    best = std::max(best, distance_to_region(p.vec(), to));

  // Arcs: uniform samples at spacing <= res (1-Lipschitz target function).
  for (const auto& a : from.arcs) {
    const int n = std::max(2, static_cast<int>(std::ceil(a.length() / res)) + 1);
    for (int i = 0; i < n; ++i) {
      const UnitVec p = a.point_at(static_cast<double>(i) / (n - 1));
      const double d = distance_to_region_pruned(p.vec(), to, best);
      best = std::max(best, d);
    }
  }

  // Polygons: branch-and-bound over fan triangles. A triangle with center
  // distance d and circumradius rad cannot contain a point farther than
  // d + rad, so it is pruned once that bound cannot beat the current best;
  // refinement stops at rad <= res/2, bounding the total error by res.
  for (const auto& poly : from.polygons) {
    const auto& vs = poly.vertices();
    for (const auto& v : vs) best = std::max(best, distance_to_region_pruned(v.vec(), to, best));
    std::vector<TriNode> stack;
    for (int i = 1; i + 1 < poly.size(); ++i)
      stack.push_back({vs[0].vec(), vs[i].vec(), vs[i + 1].vec()});
    std::size_t budget = 4000000;
    while (!stack.empty() && budget-- > 0) {
      const TriNode t = stack.back();
      stack.pop_back();
      Vec3 cen = t.a + t.b + t.c;
      const double cn = norm(cen);
      if (cn < 1e-12) continue;
      cen = cen / cn;
      double rad = 0.0;
      for (const Vec3* q : {&t.a, &t.b, &t.c})
        rad = std::max(rad, std::acos(clamp_unit(dot(cen, *q))));
      const double d = distance_to_region_pruned(cen, to, best);
      best = std::max(best, std::min(d, kPi));
      if (d + rad <= best) continue;  // cannot improve
      if (rad <= res * 0.5) continue; // refined enough
      const Vec3 ab = UnitVec(t.a + t.b).vec();
      const Vec3 bc = UnitVec(t.b + t.c).vec();
      const Vec3 ca = UnitVec(t.c + t.a).vec();
      stack.push_back({t.a, ab, ca});
      stack.push_back({ab, t.b, bc});
      stack.push_back({ca, bc, t.c});
      stack.push_back({ab, bc, ca});
    }
  }
  return best;
}

double hausdorff_distance(const SphericalRegion& a, const SphericalRegion& b, double res) {
  return std::max(directed_hausdorff(a, b, res), directed_hausdorff(b, a, res));
}

// --- Region equality ----------------------------------------------------------

namespace {

bool match_sets(std::size_t n, const std::vector<std::vector<bool>>& can) {
  // Greedy bipartite matching (strata counts are small and matches are
  // near-unique geometrically).
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (!used[j] && can[i][j]) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool arc_matches(const GeodesicArc& p, const GeodesicArc& q, double tol) {
  return (distance(p.a().vec(), q.a().vec()) <= tol && distance(p.b().vec(), q.b().vec()) <= tol) ||
         (distance(p.a().vec(), q.b().vec()) <= tol && distance(p.b().vec(), q.a().vec()) <= tol);
}

bool ring_matches(const SphericalPolygon& p, const SphericalPolygon& q, double tol) {
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

bool regions_equal(const SphericalRegion& a_in, const SphericalRegion& b_in, double tol) {
  const SphericalRegion a = deduplicated(a_in, tol);
  const SphericalRegion b = deduplicated(b_in, tol);
  if (a.points.size() != b.points.size() || a.arcs.size() != b.arcs.size() ||
      a.polygons.size() != b.polygons.size())
    return false;

  {
    const std::size_t n = a.points.size();
    std::vector<std::vector<bool>> can(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        can[i][j] = distance(a.points[i].vec(), b.points[j].vec()) <= tol;
    if (!match_sets(n, can)) return false;
  }
  {
    const std::size_t n = a.arcs.size();
    std::vector<std::vector<bool>> can(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) can[i][j] = arc_matches(a.arcs[i], b.arcs[j], tol);
    if (!match_sets(n, can)) return false;
  }
  {
    const std::size_t n = a.polygons.size();
    std::vector<std::vector<bool>> can(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) can[i][j] = ring_matches(a.polygons[i], b.polygons[j], tol);
    if (!match_sets(n, can)) return false;
  }
  return true;
}

bool region_strata_subset(const SphericalRegion& inner, const SphericalRegion& outer, double tol) {
  for (const auto& p : inner.points) {
    bool found = false;
    for (const auto& q : outer.points) found = found || distance(p.vec(), q.vec()) <= tol;
    if (!found) return false;
  }
  for (const auto& a : inner.arcs) {
    bool found = false;
    for (const auto& b : outer.arcs) found = found || arc_matches(a, b, tol);
    if (!found) return false;
  }
  for (const auto& p : inner.polygons) {
    bool found = false;
    for (const auto& q : outer.polygons) found = found || ring_matches(p, q, tol);
    if (!found) return false;
  }
  return true;
}

// --- Spherical convex hull ----------------------------------------------------

SphericalRegion spherical_convex_hull(std::span<const UnitVec> dirs) {
  SphericalRegion out;
  if (dirs.empty()) return out;
  Vec3 c{0, 0, 0};
  for (const auto& d : dirs) c += d.vec();
  if (norm(c) < 1e-9) throw HemisphereViolationError("spherical_convex_hull: no hemisphere witness");
  const Vec3 center = c / norm(c);
  for (const auto& d : dirs)
    if (dot(center, d.vec()) <= 1e-9)
      throw HemisphereViolationError("spherical_convex_hull: directions span a closed hemisphere");

  // Gnomonic projection onto the tangent plane at `center`; geodesics map to
  // straight lines, so the planar hull pulls back to the spherical hull.
  Vec3 t1, t2;
  tangent_frame(center, t1, t2);
  struct P2 {
    double x, y;
    int idx;
  };
  std::vector<P2> pts;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec3& v = dirs[i].vec();
    const double s = dot(center, v);
    pts.push_back({dot(t1, v) / s, dot(t2, v) / s, static_cast<int>(i)});
  }
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P2& a, const P2& b) {
                          return std::abs(a.x - b.x) < 1e-14 && std::abs(a.y - b.y) < 1e-14;
                        }),
            pts.end());

  if (pts.size() == 1) {
    out.points.push_back(dirs[pts[0].idx]);
    return out;
  }

  auto cross2 = [](const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  // Monotone chain.
  std::vector<P2> hull(2 * pts.size());
  std::size_t h = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (h >= 2 && cross2(hull[h - 2], hull[h - 1], pts[i]) <= 1e-18) --h;
    hull[h++] = pts[i];
  }
  const std::size_t lower = h + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (h >= lower && cross2(hull[h - 2], hull[h - 1], pts[i]) <= 1e-18) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);

  if (hull.size() <= 2 || pts.size() == 2) {
    // Collinear: extreme pair along the line.
    double best = -1.0;
    UnitVec ea = dirs[0], eb = dirs[0];
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const double d = arc_distance(dirs[i], dirs[j]);
        if (d > best) {
          best = d;
          ea = dirs[i];
          eb = dirs[j];
        }
      }
    if (best <= 1e-12)
      out.points.push_back(ea);
    else
      out.arcs.emplace_back(ea, eb);
    return out;
  }

  std::vector<UnitVec> ring;
  for (const auto& p : hull) {
    const UnitVec& v = dirs[p.idx];
    if (!ring.empty() && distance(ring.back().vec(), v.vec()) <= 1e-11) continue;
    ring.push_back(v);
  }
  while (ring.size() >= 2 && distance(ring.front().vec(), ring.back().vec()) <= 1e-11)
    ring.pop_back();
  if (ring.size() == 1) {
    out.points.push_back(ring[0]);
  } else if (ring.size() == 2) {
    out.arcs.emplace_back(ring[0], ring[1]);
  } else {
    out.polygons.emplace_back(std::move(ring));
  }
  return out;
}

}  // namespace gil
