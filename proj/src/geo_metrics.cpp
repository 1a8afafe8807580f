#include "netrob/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "netrob/components.hpp"
#include "netrob/parallel.hpp"
#include "netrob/paths.hpp"

namespace netrob {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;

double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

double haversine_km(const Coord& a, const Coord& b) {
  const double lat1 = deg2rad(a.y), lat2 = deg2rad(b.y);
  const double dlat = lat2 - lat1;
  const double dlon = deg2rad(b.x - a.x);
  const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(s)));
}

double coord_distance(const Coord& a, const Coord& b, bool geographic) {
  if (geographic) return haversine_km(a, b);
  return std::hypot(a.x - b.x, a.y - b.y);
}

void require_coords(const Topology& t, const char* what) {
  if (!t.has_coords())
    throw TopologyError(std::string(what) + " needs node coordinates");
}

bool use_great_circle(const Topology& t, const GeoParams& p) {
  switch (p.model) {
    case GeoDistanceModel::Planar: return false;
    case GeoDistanceModel::GreatCircle: return true;
    case GeoDistanceModel::Auto: break;
  }
  return t.geographic();
}

void check_params(const GeoParams& p) {
  if (!(p.lambda > 0)) throw TopologyError("lambda must be positive");
  if (p.omega < 0 || p.omega > 1) throw TopologyError("omega must lie in [0,1]");
}

// Deterministic Dijkstra over reciprocal-weight lengths where entering a
// penalized node or reusing a penalized link costs extra; ties resolve toward
// lower node ids.
std::vector<NodeId> penalized_path(const Topology& t, NodeId s, NodeId d,
                                   const std::vector<std::uint8_t>& node_pen,
                                   const std::vector<std::uint8_t>& edge_pen,
                                   double penalty) {
  const std::uint32_t v = t.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(v, inf);
  std::vector<NodeId> pred(v, v);
  std::set<std::pair<double, NodeId>> queue;
  dist[s] = 0.0;
  queue.insert({0.0, s});
  while (!queue.empty()) {
    const auto [du, u] = *queue.begin();
    queue.erase(queue.begin());
    if (u == d) break;
    for (const Arc& a : t.out(u)) {
      const double len = t.weighted() ? 1.0 / t.weight(a.edge) : 1.0;
      const double nd = du + len + (node_pen[a.to] ? penalty : 0.0) +
                        (edge_pen[a.edge] ? penalty : 0.0);
      if (nd < dist[a.to]) {
        if (dist[a.to] < inf) queue.erase({dist[a.to], a.to});
        dist[a.to] = nd;
        pred[a.to] = u;
        queue.insert({nd, a.to});
      }
    }
  }
  if (dist[d] == inf) return {};
  std::vector<NodeId> path;
  for (NodeId cur = d; cur != s; cur = pred[cur]) path.push_back(cur);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

// Area of the loop formed by one path followed by the reverse of the other;
// self-intersecting loops keep the absolute signed sum.
double loop_area(const Topology& t, bool geographic, const std::vector<NodeId>& pa,
                 const std::vector<NodeId>& pb) {
  std::vector<Coord> loop;
  loop.reserve(pa.size() + pb.size());
  for (NodeId n : pa) loop.push_back(t.coords()[n]);
  for (auto it = pb.rbegin(); it != pb.rend(); ++it) loop.push_back(t.coords()[*it]);
  if (loop.size() < 3) return 0.0;
  std::vector<std::pair<double, double>> pts(loop.size());
  if (geographic) {
    double lat0 = 0.0;
    for (const Coord& c : loop) lat0 += deg2rad(c.y);
    lat0 /= static_cast<double>(loop.size());
    for (std::size_t i = 0; i < loop.size(); ++i)
      pts[i] = {kEarthRadiusKm * std::cos(lat0) * deg2rad(loop[i].x),
                kEarthRadiusKm * deg2rad(loop[i].y)};
  } else {
    for (std::size_t i = 0; i < loop.size(); ++i) pts[i] = {loop[i].x, loop[i].y};
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& [x1, y1] = pts[i];
    const auto& [x2, y2] = pts[(i + 1) % pts.size()];
    acc += x1 * y2 - x2 * y1;
  }
  return 0.5 * std::abs(acc);
}

// Minimum coordinate distance between interior nodes of the two paths; zero
// when either path runs directly between the endpoints.
double interior_separation(const Topology& t, bool geographic,
                           const std::vector<NodeId>& pa, const std::vector<NodeId>& pb) {
  if (pa.size() < 3 || pb.size() < 3) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < pa.size(); ++i)
    for (std::size_t j = 1; j + 1 < pb.size(); ++j)
      best = std::min(best, coord_distance(t.coords()[pa[i]], t.coords()[pb[j]], geographic));
  return best;
}

struct PairPaths {
  std::vector<std::vector<NodeId>> paths;  // base first
  std::vector<double> scores;              // separation score per alternative
};

PairPaths diversity_paths(const Topology& t, NodeId s, NodeId d, const GeoParams& p,
                          bool geographic) {
  PairPaths out;
  std::vector<std::uint8_t> node_pen(t.node_count(), 0);
  std::vector<std::uint8_t> edge_pen(t.edge_count(), 0);
  std::vector<NodeId> base = penalized_path(t, s, d, node_pen, edge_pen, 0.0);
  if (base.empty()) return out;
  double penalty = 1.0;
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    penalty += t.weighted() ? 1.0 / t.weight(e) : 1.0;
  auto mark = [&](const std::vector<NodeId>& path) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) node_pen[path[i]] = 1;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (auto e = t.find_edge(path[i], path[i + 1])) edge_pen[*e] = 1;
  };
  mark(base);
  out.paths.push_back(std::move(base));
  for (std::uint32_t round = 0; round < p.k; ++round) {
    std::vector<NodeId> alt = penalized_path(t, s, d, node_pen, edge_pen, penalty);
    if (alt.empty()) break;
    bool seen = false;
    for (const auto& prev : out.paths) seen = seen || prev == alt;
    if (seen) break;
    const double dmin = interior_separation(t, geographic, alt, out.paths.front());
    const double area = loop_area(t, geographic, alt, out.paths.front());
    out.scores.push_back(p.omega * dmin * dmin + (1.0 - p.omega) * area);
    mark(alt);
    out.paths.push_back(std::move(alt));
  }
  return out;
}

}  // namespace

double geo_distance(const Topology& t, NodeId a, NodeId b) {
  require_coords(t, "geographic distance");
  return coord_distance(t.coords()[a], t.coords()[b], t.geographic());
}

DistanceStrengthOutreach distance_strength_outreach(const Topology& t) {
  require_coords(t, "distance strength");
  const std::uint32_t v = t.node_count();
  DistanceStrengthOutreach r;
  r.strength.key = "distance_strength";
  r.outreach.key = "outreach";
  for (MetricResult* m : {&r.strength, &r.outreach}) {
    m->kind = MetricKind::PerNode;
    m->scope = MetricScope::Local;
    m->codomain = Codomain::nonneg();
    m->node_values.assign(v, 0.0);
  }
  for (NodeId i = 0; i < v; ++i) {
    double dsum = 0.0, osum = 0.0;
    for (const Arc& a : t.out(i)) {
      const double g = geo_distance(t, i, a.to);
      dsum += g;
      osum += t.weight(a.edge) * g;
    }
    for (const Arc& a : t.in(i)) {
      const double g = geo_distance(t, i, a.to);
      dsum += g;
      osum += t.weight(a.edge) * g;
    }
    r.strength.node_values[i] = dsum;
    r.outreach.node_values[i] = osum;
  }
  auto peak = [v](const std::vector<std::optional<double>>& xs) {
    double m = 0.0;
    for (std::uint32_t i = 0; i < v; ++i) m = std::max(m, *xs[i]);
    return m;
  };
  r.strength.value = peak(r.strength.node_values);
  r.outreach.value = peak(r.outreach.node_values);
  return r;
}

bool region_contains(const GeoRegion& region, const Coord& c, bool geographic) {
  if (region.shape == GeoRegion::Shape::Disk) {
    if (region.radius < 0) throw TopologyError("disk region needs a nonnegative radius");
    return coord_distance(region.center, c, geographic) <= region.radius;
  }
  const auto& ring = region.ring;
  if (ring.size() < 3) throw TopologyError("polygon region needs at least three vertices");
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    if ((ring[i].y > c.y) == (ring[j].y > c.y)) continue;
    const double xcross =
        (ring[j].x - ring[i].x) * (c.y - ring[i].y) / (ring[j].y - ring[i].y) + ring[i].x;
    if (c.x < xcross) inside = !inside;
  }
  return inside;
}

GeoSurvivability geo_survivability(const Topology& t, const std::vector<GeoEvent>& events) {
  require_coords(t, "geographic survivability");
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("survivability needs at least one node");
  double total_p = 0.0;
  for (const GeoEvent& e : events) {
    if (e.probability < 0) throw TopologyError("event probability must be nonnegative");
    total_p += e.probability;
  }
  if (total_p > 1.0 + 1e-9) throw TopologyError("event probabilities exceed 1");

  std::vector<double> outcome(events.size(), 0.0);
  parallel_for(static_cast<std::uint32_t>(events.size()), [&](std::uint32_t idx) {
    if (events[idx].probability <= 0) return;
    std::vector<bool> keep(v);
    std::uint32_t kept = 0;
    for (NodeId i = 0; i < v; ++i) {
      keep[i] = !region_contains(events[idx].region, t.coords()[i], t.geographic());
      kept += keep[i] ? 1u : 0u;
    }
    if (kept == 0) return;
    const Topology sub = t.induced(keep);
    outcome[idx] = static_cast<double>(components(sub).largest_size()) / v;
  });

  GeoSurvivability r;
  r.residual = std::max(0.0, 1.0 - total_p);
  std::vector<std::pair<double, double>> mass;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].probability > 0) mass.push_back({outcome[i], events[i].probability});
  if (r.residual > 0)
    mass.push_back({static_cast<double>(components(t).largest_size()) / v, r.residual});
  std::sort(mass.begin(), mass.end());
  for (const auto& [x, p] : mass) {
    if (!r.distribution.empty() && r.distribution.back().first == x)
      r.distribution.back().second += p;
    else
      r.distribution.push_back({x, p});
    r.expected += x * p;
  }
  r.worst_case = r.distribution.empty() ? 0.0 : r.distribution.front().first;
  return r;
}

MetricResult pointwise_vulnerability(const Topology& t) {
  require_coords(t, "pointwise vulnerability");
  const std::uint32_t v = t.node_count();
  if (v < 2)
    return MetricResult::undefined("pointwise_vulnerability", MetricKind::PerNode,
                                   "needs at least two nodes");
  // raw efficiency sum over ordered reachable pairs; dropping a node keeps the
  // original pair normalization so removals can only lower it
  auto raw_efficiency = [](const Topology& g) {
    double acc = 0.0;
    for (NodeId m = 0; m < g.node_count(); ++m) {
      const DistanceView dv = shortest_paths(g, m);
      for (NodeId n = 0; n < g.node_count(); ++n) {
        if (n == m || !dv.reachable(n)) continue;
        acc += coord_distance(g.coords()[m], g.coords()[n], g.geographic()) / dv.dist[n];
      }
    }
    return acc;
  };
  const double norm = static_cast<double>(v) * (v - 1);
  const double base = raw_efficiency(t) / norm;
  if (base == 0.0)
    return MetricResult::undefined("pointwise_vulnerability", MetricKind::PerNode,
                                   "baseline euclidean efficiency is zero");

  std::vector<double> u(v, 0.0);
  parallel_for(v, [&](NodeId i) {
    std::vector<bool> keep(v, true);
    keep[i] = false;
    const Topology sub = t.induced(keep);
    const double reduced = raw_efficiency(sub) / norm;
    u[i] = (base - reduced) / base;
  });

  MetricResult r;
  r.key = "pointwise_vulnerability";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.mode = MetricMode::Dynamic;
  r.codomain = Codomain::unit();
  r.node_values.assign(u.begin(), u.end());
  double mean = 0.0, peak = 0.0;
  for (double x : u) {
    mean += x / v;
    peak = std::max(peak, x);
  }
  double var = 0.0;
  for (double x : u) var += (x - mean) * (x - mean) / v;
  r.value = peak;
  r.extras.push_back({"relative_variance", var / (mean * mean)});
  r.extras.push_back({"baseline_efficiency", base});
  return r;
}

PathDiversity egpd(const Topology& t, NodeId s, NodeId d, const GeoParams& params) {
  require_coords(t, "path diversity");
  check_params(params);
  if (s == d) throw TopologyError("path diversity needs distinct endpoints");
  PairPaths pp = diversity_paths(t, s, d, params, use_great_circle(t, params));
  PathDiversity r;
  r.paths = std::move(pp.paths);
  for (double score : pp.scores) r.k_sd += score;
  r.egpd = r.paths.empty() ? 0.0 : 1.0 - std::exp(-params.lambda * r.k_sd);
  return r;
}

GeoDiversity tggd(const Topology& t, const GeoParams& params) {
  require_coords(t, "graph diversity");
  check_params(params);
  const std::uint32_t v = t.node_count();
  const bool gc = use_great_circle(t, params);
  GeoDiversity r;
  if (v < 2) return r;
  std::vector<double> per_source(v, 0.0);
  parallel_for(v, [&](NodeId s) {
    for (NodeId d = t.directed() ? 0 : s + 1; d < v; ++d) {
      if (d == s) continue;
      PairPaths pp = diversity_paths(t, s, d, params, gc);
      double ksd = 0.0;
      for (double score : pp.scores) ksd += score;
      if (!pp.paths.empty()) per_source[s] += 1.0 - std::exp(-params.lambda * ksd);
    }
  });
  double acc = 0.0;
  for (double x : per_source) acc += x;
  r.pairs = t.directed() ? static_cast<std::uint64_t>(v) * (v - 1)
                         : static_cast<std::uint64_t>(v) * (v - 1) / 2;
  r.tggd = acc / static_cast<double>(r.pairs);
  if (t.edge_count() > 0)
    r.ctggd = std::exp(r.tggd - 1.0) * std::pow(static_cast<double>(t.edge_count()), -params.rho);
  r.ctggd_in_range = r.ctggd >= 0.0 && r.ctggd <= 1.0 + 1e-12;
  return r;
}

double calibrate_lambda(const std::vector<Topology>& corpus, GeoParams params) {
  check_params(params);
  std::vector<double> scores;
  for (const Topology& t : corpus) {
    require_coords(t, "lambda calibration");
    const bool gc = use_great_circle(t, params);
    const std::uint32_t v = t.node_count();
    for (NodeId s = 0; s < v; ++s) {
      for (NodeId d = t.directed() ? 0 : s + 1; d < v; ++d) {
        if (d == s) continue;
        for (double score : diversity_paths(t, s, d, params, gc).scores)
          if (score > 0) scores.push_back(score);
      }
    }
  }
  if (scores.empty()) return 1.0;
  std::sort(scores.begin(), scores.end());
  const std::size_t n = scores.size();
  const double median =
      n % 2 ? scores[n / 2] : 0.5 * (scores[n / 2 - 1] + scores[n / 2]);
  return -std::log(1.0 - 0.63) / median;
}

}  // namespace netrob
