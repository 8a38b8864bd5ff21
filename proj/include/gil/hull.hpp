#pragma once

// Incremental 3d convex hull over a pluggable arithmetic kernel, followed by
// coplanar-facet merging and boundary-ring extraction. The double kernel uses
// the library-wide relative sign tolerance; the rational kernel is exact.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "gil/geo.hpp"

namespace gil::hull {

// Merged facets of the hull, as CCW-from-outside rings of indices into the
// caller's point array. Collinear ring vertices (hull points interior to an
// edge or facet) are already removed.
struct HullFacets {
  std::vector<std::vector<int>> rings;
};

template <class K>
HullFacets compute_hull(const std::vector<typename K::Point>& pts) {
  using Point = typename K::Point;
  const int n = static_cast<int>(pts.size());

  // Distinct points, remembering one original index per location.
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    bool dup = false;
    for (int j : ids) dup = dup || K::equal(pts[i], pts[j]);
    if (!dup) ids.push_back(i);
  }
  const int m = static_cast<int>(ids.size());
  if (m < 4) throw InputError("convex hull: fewer than 4 distinct points");
  auto P = [&](int k) -> const Point& { return pts[ids[k]]; };

  // Initial simplex: spread out the base edge, triangle, tetrahedron.
  int i1 = -1;
  for (int k = 1; k < m && i1 < 0; ++k)
    if (!K::equal(P(0), P(k))) i1 = k;
  int i2 = -1;
  for (int k = 1; k < m && i2 < 0; ++k)
    if (k != i1 && !K::collinear(P(0), P(i1), P(k))) i2 = k;
  if (i2 < 0) throw InputError("convex hull: points are collinear");
  int i3 = -1;
  for (int k = 1; k < m && i3 < 0; ++k)
    if (k != i1 && k != i2 && K::orient(P(0), P(i1), P(i2), P(k)) != 0) i3 = k;
  if (i3 < 0) throw InputError("convex hull: points are coplanar");

  struct Tri {
    int a, b, c;
  };
  std::vector<Tri> tris;
  {
    int a = 0, b = i1, c = i2, d = i3;
    if (K::orient(P(a), P(b), P(c), P(d)) > 0) std::swap(b, c);
    tris = {{a, b, c}, {a, c, d}, {a, d, b}, {b, d, c}};
  }
  const Point interior = K::centroid(P(0), P(i1), P(i2), P(i3));

  std::vector<bool> inserted(m, false);
  inserted[0] = inserted[i1] = inserted[i2] = inserted[i3] = true;

  for (int k = 0; k < m; ++k) {
    if (inserted[k]) continue;
    std::vector<bool> visible(tris.size(), false);
    bool any = false;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      visible[t] = K::orient(P(tris[t].a), P(tris[t].b), P(tris[t].c), P(k)) > 0;
      any = any || visible[t];
    }
    if (!any) continue;  // inside or on the current hull

    // Horizon: directed edges of visible triangles whose reverse lies in a
    // hidden triangle.
    std::map<std::pair<int, int>, int> dir_edges;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!visible[t]) continue;
      const int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) dir_edges[{vs[e], vs[(e + 1) % 3]}] = 1;
    }
    std::vector<Tri> next;
    for (std::size_t t = 0; t < tris.size(); ++t)
      if (!visible[t]) next.push_back(tris[t]);
    for (const auto& [edge, unused] : dir_edges) {
      (void)unused;
      if (dir_edges.count({edge.second, edge.first})) continue;  // interior to the visible patch
      Tri nt{edge.first, edge.second, k};
      if (K::orient(P(nt.a), P(nt.b), P(nt.c), interior) > 0) std::swap(nt.b, nt.c);
      next.push_back(nt);
    }
    tris = std::move(next);
    inserted[k] = true;
  }

  // Merge coplanar neighbor triangles: grow groups testing every candidate
  // vertex against the seed triangle's plane (no drift across the group).
  const int T = static_cast<int>(tris.size());
  std::map<std::pair<int, int>, int> owner;  // directed edge -> triangle
  for (int t = 0; t < T; ++t) {
    const int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
    for (int e = 0; e < 3; ++e) owner[{vs[e], vs[(e + 1) % 3]}] = t;
  }
  std::vector<int> group(T, -1);
  int ngroups = 0;
  for (int seed = 0; seed < T; ++seed) {
    if (group[seed] >= 0) continue;
    const int g = ngroups++;
    std::vector<int> stack{seed};
    group[seed] = g;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      const int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) {
        auto it = owner.find({vs[(e + 1) % 3], vs[e]});
        if (it == owner.end()) continue;
        const int u = it->second;
        if (group[u] >= 0) continue;
        const int ws[3] = {tris[u].a, tris[u].b, tris[u].c};
        bool coplanar = true;
        for (int w = 0; w < 3 && coplanar; ++w)
          coplanar = K::orient(P(tris[seed].a), P(tris[seed].b), P(tris[seed].c), P(ws[w])) == 0;
        if (coplanar) {
          group[u] = g;
          stack.push_back(u);
        }
      }
    }
  }

  HullFacets out;
  out.rings.resize(ngroups);
  for (int g = 0; g < ngroups; ++g) {
    // Boundary of the group: directed edges whose reverse is outside it.
    std::map<int, int> succ;
    for (int t = 0; t < T; ++t) {
      if (group[t] != g) continue;
      const int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) {
        const int u = vs[e], v = vs[(e + 1) % 3];
        auto it = owner.find({v, u});
        if (it == owner.end() || group[it->second] != g) succ[u] = v;
      }
    }
    if (succ.size() < 3) throw Error("convex hull: degenerate facet ring");
    std::vector<int> ring;
    int start = succ.begin()->first;
    int cur = start;
    do {
      ring.push_back(cur);
      cur = succ.at(cur);
      if (ring.size() > succ.size()) throw Error("convex hull: facet ring is not a single cycle");
    } while (cur != start);

    // Remove ring vertices interior to a straight edge.
    bool changed = true;
    while (changed && ring.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const int a = ring[(i + ring.size() - 1) % ring.size()];
        const int b = ring[i];
        const int c = ring[(i + 1) % ring.size()];
        if (K::collinear(P(a), P(b), P(c))) {
          ring.erase(ring.begin() + i);
          changed = true;
          break;
        }
      }
    }
    for (int& r : ring) r = ids[r];
    out.rings[g] = std::move(ring);
  }
  return out;
}

}  // namespace gil::hull
