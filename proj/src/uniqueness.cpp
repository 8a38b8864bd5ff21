#include "gil/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "gil/parallel.hpp"

namespace gil {

SupportComponents support_components(const SphericalMeasure& m) {
  SupportComponents out;
  switch (m.kind()) {
    case SphericalMeasure::Kind::Atoms: {
      int i = 0;
      for (const auto& [dir, w] : m.atom_list()) {
        (void)w;
        SupportComponent c;
        c.kind = SupportComponent::Kind::Atom;
        c.id = "atom-" + std::to_string(i++);
        c.atoms.push_back(dir);
        out.components.push_back(std::move(c));
      }
      return out;
    }
    case SphericalMeasure::Kind::Uniform: {
      SupportComponent c;
      c.kind = SupportComponent::Kind::Sphere;
      c.id = "sphere";
      out.components.push_back(std::move(c));
      return out;
    }
    case SphericalMeasure::Kind::CapLebesgue: {
      // Overlap graph over the caps, merged with union-find.
      const auto& caps = m.caps();
      const int n = static_cast<int>(caps.size());
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (arc_distance(caps[i].center, caps[j].center) < caps[i].radius + caps[j].radius)
            parent[find(i)] = find(j);
      std::map<int, SupportComponent> groups;
      for (int i = 0; i < n; ++i) groups[find(i)].caps.push_back(caps[i]);
      int idx = 0;
      for (auto& [root, c] : groups) {
        (void)root;
        c.kind = SupportComponent::Kind::Caps;
        c.id = "caps-" + std::to_string(idx++);
        out.components.push_back(std::move(c));
      }
      return out;
    }
  }
  return out;
}

std::vector<UnitVec> sample_component(const SupportComponent& c, int n, RngStream& rng) {
  std::vector<UnitVec> out;
  switch (c.kind) {
    case SupportComponent::Kind::Atom:
      out = c.atoms;
      break;
    case SupportComponent::Kind::Sphere:
      for (int i = 0; i < n; ++i) out.emplace_back(rng.sphere());
      break;
    case SupportComponent::Kind::Caps: {
      std::vector<double> acc;
      double total = 0.0;
      for (const auto& cap : c.caps) {
        total += 2.0 * kPi * (1.0 - std::cos(cap.radius));
        acc.push_back(total);
      }
      for (int i = 0; i < n; ++i) {
        const double pick = rng.uniform(0.0, total);
        std::size_t idx = std::lower_bound(acc.begin(), acc.end(), pick) - acc.begin();
        if (idx >= c.caps.size()) idx = c.caps.size() - 1;
        out.emplace_back(rng.cap_point(c.caps[idx].center.vec(), c.caps[idx].radius));
      }
      break;
    }
  }
  return out;
}

namespace {

void require_family_respects(const TestFamily& family, const SphericalMeasure& lambda) {
  const double margin = 1e-7;
  for (const auto& [dir, w] : lambda.atom_list()) {
    (void)w;
    for (const auto& cell : family.cells) {
      const int k = cell.size();
      for (int i = 0; i < k; ++i) {
        GeodesicArc edge(cell.vertex(i), cell.vertex((i + 1) % k));
        if (distance_point_arc(dir.vec(), edge) <= margin)
          throw InputError("ae_equal_check: family does not respect the measure's atoms");
      }
    }
  }
}

struct FamilyQuery {
  std::string id;
  QuerySet query;
};

std::vector<FamilyQuery> family_queries(const TestFamily& family) {
  std::vector<FamilyQuery> out;
  const int n = static_cast<int>(family.cells.size());
  for (int i = 0; i < n; ++i)
    out.push_back({"cell-" + std::to_string(i), QuerySet::polygon(family.cells[i])});
  for (int i = 0; i < n; ++i)
    for (int j : family.neighbors[i]) {
      if (j <= i) continue;
      out.push_back({"union-" + std::to_string(i) + "-" + std::to_string(j),
                     QuerySet::polygon_list({family.cells[i], family.cells[j]})});
    }
  for (int i = 0; i < n; ++i) {
    const auto& nb = family.neighbors[i];
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        out.push_back(
            {"union-" + std::to_string(i) + "-" + std::to_string(nb[a]) + "-" +
                 std::to_string(nb[b]),
             QuerySet::polygon_list({family.cells[i], family.cells[nb[a]], family.cells[nb[b]]})});
  }
  return out;
}

}  // namespace

CheckReport ae_equal_check(const Polytope& K, const Polytope& L, const SphericalMeasure& lambda,
                           const TestFamily& family) {
  require_family_respects(family, lambda);
  const std::vector<FamilyQuery> queries = family_queries(family);

  struct Row {
    double s = 0.0, m = 0.0;
  };
  std::vector<Row> rows(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) {
    const SphericalRegion a = gauss_image(K, queries[i].query);
    const SphericalRegion b = gauss_image(L, queries[i].query);
    rows[i].s = symdiff_distance(lambda, a, b);
    rows[i].m = std::abs(region_measure(lambda, a) - region_measure(lambda, b));
  });

  CheckReport report;
  report.check = "ae-equality";
  double max_s = 0.0, max_m = 0.0;
  std::size_t max_m_idx = 0;
  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    max_s = std::max(max_s, rows[i].s);
    if (rows[i].m > max_m) {
      max_m = rows[i].m;
      max_m_idx = i;
    }
    if (rows[i].s > kMeasEps) {
      ++failures;
      if (report.witnesses.size() < 8)
        report.add_witness(queries[i].id, {{"s", rows[i].s}, {"m", rows[i].m}});
    }
  }
  report.pass = failures == 0;
  report.add_margin("max_s", max_s);
  report.add_margin("max_m", max_m);
  report.add_margin("sets_checked", static_cast<double>(rows.size()));
  report.add_margin("failing_sets", static_cast<double>(failures));
  // When the maps differ on a set, the mass gap witness makes the
  // equivalence two-sided on the instance: record the strongest one.
  if (!report.pass && max_m > kMeasEps)
    report.add_witness("mass-gap:" + queries[max_m_idx].id, {{"m", max_m}});
  return report.finalize();
}

SphericalRegion simultaneous_map(const Polytope& K, const Polytope& L, const UnitVec& u) {
  return simultaneous_map_set(K, L, QuerySet::point(u));
}

SphericalRegion simultaneous_map_set(const Polytope& K, const Polytope& L, const QuerySet& w) {
  return intersect_regions(reverse_gauss_image(K, w), reverse_gauss_image(L, w));
}

CheckReport simultaneous_check(const Polytope& K, const Polytope& L,
                               const SupportComponents& comps, int samples_per_component,
                               const std::vector<double>& deltas, double res, std::uint64_t seed,
                               const CheckReport& ae) {
  if (!ae.pass)
    throw HypothesisNotEstablishedError(
        "simultaneous_check: requires a passing ae-equality report");
  CheckReport report;
  report.check = "simultaneous-map";
  report.pass = true;

  int empties = 0;
  for (const auto& comp : comps.components) {
    RngStream rng(seed, "simultaneous-samples:" + comp.id);
    const auto dirs = sample_component(comp, samples_per_component, rng);
    for (const auto& u : dirs) {
      const SphericalRegion sim = simultaneous_map(K, L, u);
      if (sim.empty()) {
        ++empties;
        report.pass = false;
        if (report.witnesses.size() < 8)
          report.add_witness("empty:" + comp.id, {{"x", u.x()}, {"y", u.y()}, {"z", u.z()}});
      }
    }
    // Continuity probe at the first sampled direction of the component.
    if (!dirs.empty()) {
      const UnitVec u = dirs.front();
      const SphericalRegion at_u = simultaneous_map(K, L, u);
      if (!at_u.empty()) {
        double prev = kPi;
        bool monotone = true;
        double last = 0.0;
        for (double d : deltas) {
          const SphericalRegion at_cap = simultaneous_map_set(K, L, QuerySet::cap(Cap(u, d)));
          const double dh = at_cap.empty() ? 0.0 : directed_hausdorff(at_cap, at_u, res);
          monotone = monotone && dh <= prev + res;
          prev = dh;
          last = dh;
          report.add_margin("probe:" + comp.id + ":" + std::to_string(d), dh);
        }
        if (!monotone || last > 10.0 * res) {
          report.pass = false;
          report.add_witness("continuity:" + comp.id, {{"last_probe", last}});
        }
      }
    }
  }
  report.add_margin("empty_intersections", static_cast<double>(empties));
  return report.finalize();
}

namespace {

std::vector<UnitVec> polygon_grid(const SphericalPolygon& p, int side) {
  std::vector<UnitVec> out = p.vertices();
  const auto& vs = p.vertices();
  for (int f = 1; f + 1 < p.size(); ++f) {
    const Vec3 a = vs[0].vec(), b = vs[f].vec(), c = vs[f + 1].vec();
    for (int i = 0; i <= side; ++i)
      for (int j = 0; j <= side - i; ++j) {
        const double u = static_cast<double>(i) / side;
        const double v = static_cast<double>(j) / side;
        const Vec3 q = a * (1.0 - u - v) + b * u + c * v;
        if (norm(q) > 1e-9) out.emplace_back(q);
      }
  }
  return out;
}

}  // namespace

RatioPartition ratio_partition(const Polytope& K, const Polytope& L, const TestFamily& family,
                               int interior_side) {
  RatioPartition out;
  out.labels.resize(family.cells.size());
  const int side = std::max(2, interior_side);
  parallel_for(family.cells.size(), [&](std::size_t i) {
    bool any_k = false, any_l = false, any_eq = false;
    for (const auto& u : polygon_grid(family.cells[i], side)) {
      const double rk = radial(K, u);
      const double rl = radial(L, u);
      const double tol = kGeomEps * std::max(rk, rl);
      if (rk > rl + tol)
        any_k = true;
      else if (rl > rk + tol)
        any_l = true;
      else
        any_eq = true;
    }
    RadialLabel label = RadialLabel::Mixed;
    if (any_k && !any_l && !any_eq) label = RadialLabel::KLarger;
    if (any_l && !any_k && !any_eq) label = RadialLabel::LLarger;
    if (any_eq && !any_k && !any_l) label = RadialLabel::Equal;
    out.labels[i] = label;
  });
  for (const auto& l : out.labels) {
    if (l == RadialLabel::KLarger) ++out.k_larger;
    if (l == RadialLabel::LLarger) ++out.l_larger;
    if (l == RadialLabel::Equal) ++out.equal;
    if (l == RadialLabel::Mixed) ++out.mixed;
  }
  return out;
}

CheckReport dilation_component_check(const Polytope& K, const Polytope& L,
                                     const SupportComponents& comps, int samples,
                                     std::uint64_t seed, const CheckReport& ae) {
  if (!ae.pass)
    throw HypothesisNotEstablishedError(
        "dilation_component_check: requires a passing ae-equality report");
  CheckReport report;
  report.check = "dilation-components";
  report.pass = true;
  for (const auto& comp : comps.components) {
    RngStream rng(seed, "dilation-samples:" + comp.id);
    const auto dirs = sample_component(comp, samples, rng);
    double lo = 1e300, hi = -1e300;
    for (const auto& u : dirs) {
      const double ratio = support(K, u.vec()) / support(L, u.vec());
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double mid = 0.5 * (lo + hi);
    const double spread = (hi - lo) / std::max(std::abs(mid), 1e-300);
    report.add_margin("ratio:" + comp.id, mid);
    report.add_margin("spread:" + comp.id, spread);
    if (!(spread <= 1e-9)) {
      report.pass = false;
      report.add_witness(comp.id, {{"ratio_min", lo}, {"ratio_max", hi}, {"spread", spread}});
    }
  }
  return report.finalize();
}

CheckReport ratio_increment_check(const Polytope& K, const Polytope& L,
                                  const SupportComponents& comps, double eps, int pair_samples,
                                  std::uint64_t seed, const CheckReport& ae) {
  if (!ae.pass)
    throw HypothesisNotEstablishedError(
        "ratio_increment_check: requires a passing ae-equality report");
  CheckReport report;
  report.check = "ratio-increment";
  report.pass = true;

  // Q = rho_{K*}/rho_{L*} = h_L/h_K on directions.
  auto Q = [&](const UnitVec& u) { return support(L, u.vec()) / support(K, u.vec()); };

  const std::vector<double> separations = {0.2, 0.1, 0.05, 0.02, 0.01, 0.005};
  for (const auto& comp : comps.components) {
    if (comp.kind == SupportComponent::Kind::Atom) {
      report.add_margin("skipped:" + comp.id, 1.0);  // no pairs inside a single atom
      continue;
    }
    RngStream rng(seed, "increment-samples:" + comp.id);
    double last_max = 0.0;
    for (double sep : separations) {
      double worst = 0.0;
      int made = 0;
      int guard = 0;
      while (made < pair_samples && guard++ < pair_samples * 200) {
        const auto base = sample_component(comp, 1, rng);
        if (base.empty()) break;
        const UnitVec u = base.front();
        Vec3 t1, t2;
        tangent_frame(u.vec(), t1, t2);
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const UnitVec up(u.vec() + (t1 * std::cos(phi) + t2 * std::sin(phi)) * sep);
        // Keep the pair inside the component.
        bool inside = comp.kind == SupportComponent::Kind::Sphere;
        for (const auto& cap : comp.caps) inside = inside || cap.contains(up.vec(), 0.0);
        if (!inside) continue;
        const double chord = distance(u.vec(), up.vec());
        if (chord < 1e-12) continue;
        worst = std::max(worst, std::abs(Q(up) - Q(u)) / chord);
        ++made;
      }
      report.add_margin("increment:" + comp.id + ":" + std::to_string(sep), worst);
      last_max = worst;
    }
    if (!(last_max <= eps)) {
      report.pass = false;
      report.add_witness(comp.id, {{"increment", last_max}, {"eps", eps}});
    }
  }
  return report.finalize();
}

}  // namespace gil
