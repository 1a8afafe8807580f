#include "netrob/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "netrob/betweenness.hpp"
#include "netrob/components.hpp"
#include "netrob/parallel.hpp"
#include "netrob/paths.hpp"
#include "netrob/rng.hpp"

namespace netrob {

namespace {

constexpr std::uint32_t kNoHop = std::numeric_limits<std::uint32_t>::max();

// Hop-level shortest-path DAG from one source: settle order, hop levels and
// path counts.
struct SourceDag {
  std::vector<std::uint32_t> hop;
  std::vector<double> sigma;
  std::vector<NodeId> order;
};

SourceDag source_dag(const Topology& t, NodeId src) {
  const std::uint32_t v = t.node_count();
  SourceDag d;
  d.hop.assign(v, kNoHop);
  d.sigma.assign(v, 0.0);
  d.order.reserve(v);
  d.hop[src] = 0;
  d.sigma[src] = 1.0;
  std::deque<NodeId> q{src};
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop_front();
    d.order.push_back(u);
    for (const Arc& a : t.out(u)) {
      if (d.hop[a.to] == kNoHop) {
        d.hop[a.to] = d.hop[u] + 1;
        q.push_back(a.to);
      }
      if (d.hop[a.to] == d.hop[u] + 1) d.sigma[a.to] += d.sigma[u];
    }
  }
  return d;
}

}  // namespace

MetricResult betweenness_centrality(const Topology& t, BetweennessTarget target,
                                    bool weighted) {
  MetricResult r;
  r.key = target == BetweennessTarget::Node ? "betweenness_node" : "betweenness_edge";
  r.kind = target == BetweennessTarget::Node ? MetricKind::PerNode : MetricKind::PerEdge;
  r.scope = MetricScope::Local;
  const double v = t.node_count();
  r.codomain = target == BetweennessTarget::Node
                   ? Codomain::range(0.0, v >= 2 ? (v - 1) * (v - 2) / 2.0 : 0.0)
                   : Codomain::range(0.0, (v / 2.0) * (v / 2.0));

  const Betweenness b = brandes_betweenness(t, weighted && t.weighted());
  double total = 0.0;
  double peak = 0.0;
  if (target == BetweennessTarget::Node) {
    r.node_values.assign(t.node_count(), std::nullopt);
    for (NodeId i = 0; i < t.node_count(); ++i) {
      r.node_values[i] = b.node[i];
      total += b.node[i];
      peak = std::max(peak, b.node[i]);
    }
    if (t.node_count() > 0) r.value = total / t.node_count();
  } else {
    r.edge_values.assign(t.edge_count(), std::nullopt);
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      r.edge_values[e] = b.edge[e];
      total += b.edge[e];
      peak = std::max(peak, b.edge[e]);
    }
    if (t.edge_count() > 0) r.value = total / t.edge_count();
  }
  r.extras.push_back({"max", peak});
  return r;
}

MetricResult as_hegemony(const Topology& t, const std::vector<NodeId>& viewpoints,
                         double alpha) {
  MetricResult r;
  r.key = "as_hegemony";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::unit();
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    throw TopologyError("trim fraction must lie in [0, 0.5)");
  }
  const std::uint32_t v = t.node_count();
  std::vector<NodeId> vp = viewpoints;
  if (vp.empty()) {
    vp.resize(v);
    for (NodeId i = 0; i < v; ++i) vp[i] = i;
  }
  for (const NodeId i : vp) {
    if (i >= v) throw TopologyError("viewpoint out of range");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(vp.size());
  const std::uint32_t cut = static_cast<std::uint32_t>(std::floor(alpha * n + 1e-12));
  if (n <= 2 * cut) throw TopologyError("trim fraction leaves no viewpoint");

  // scores[k * v + u]: viewpoint k's path-count centrality of node u
  std::vector<double> scores(static_cast<std::size_t>(n) * v, 0.0);
  parallel_for(n, [&](std::uint32_t k) {
    const SourceDag d = source_dag(t, vp[k]);
    // paths[u]: number of shortest-path continuations from u (length >= 1)
    std::vector<double> paths(v, 0.0);
    for (std::size_t idx = d.order.size(); idx-- > 0;) {
      const NodeId u = d.order[idx];
      for (const Arc& a : t.out(u)) {
        if (d.hop[a.to] == d.hop[u] + 1) paths[u] += 1.0 + paths[a.to];
      }
    }
    const double s = paths[vp[k]];
    if (s <= 0.0) return;
    double* row = scores.data() + static_cast<std::size_t>(k) * v;
    for (NodeId u = 0; u < v; ++u) {
      if (u != vp[k] && d.hop[u] != kNoHop) row[u] = d.sigma[u] * paths[u] / s;
    }
  });

  r.node_values.assign(v, std::nullopt);
  std::vector<double> col(n);
  double total = 0.0;
  for (NodeId u = 0; u < v; ++u) {
    for (std::uint32_t k = 0; k < n; ++k) col[k] = scores[static_cast<std::size_t>(k) * v + u];
    std::sort(col.begin(), col.end());
    double acc = 0.0;
    for (std::uint32_t k = cut; k < n - cut; ++k) acc += col[k];
    const double h = acc / (n - 2 * cut);
    r.node_values[u] = h;
    total += h;
  }
  if (v > 0) r.value = total / v;
  r.extras.push_back({"viewpoints", static_cast<double>(n)});
  r.extras.push_back({"trimmed_each_side", static_cast<double>(cut)});
  return r;
}

MetricResult central_point_dominance(const Topology& t) {
  MetricResult r;
  r.key = "central_point_dominance";
  r.codomain = Codomain::unit();
  const std::uint32_t v = t.node_count();
  if (v < 3) throw TopologyError("central point dominance needs at least three nodes");

  const Betweenness b = brandes_betweenness(t, false);
  const double norm = (static_cast<double>(v) - 1) * (static_cast<double>(v) - 2) / 2.0;
  double peak = 0.0;
  for (NodeId i = 0; i < v; ++i) peak = std::max(peak, b.node[i]);
  double acc = 0.0;
  for (NodeId i = 0; i < v; ++i) acc += (peak - b.node[i]) / norm;
  r.value = acc / (v - 1);
  r.extras.push_back({"max_normalized", peak / norm});
  return r;
}

EffectiveLoad effective_load(const Topology& t, double a_fraction, std::uint32_t ensembles,
                             std::uint64_t seed) {
  if (!(a_fraction > 0.0 && a_fraction <= 1.0)) {
    throw TopologyError("communicating fraction must lie in (0, 1]");
  }
  if (ensembles == 0) throw TopologyError("need at least one ensemble");
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("effective load needs at least two nodes");
  const std::uint64_t all_pairs = static_cast<std::uint64_t>(v) * (v - 1);
  std::uint64_t m = static_cast<std::uint64_t>(std::llround(a_fraction * all_pairs));
  m = std::max<std::uint64_t>(1, std::min(m, all_pairs));

  EffectiveLoad out;
  out.ensembles = ensembles;
  out.pairs_per_ensemble = m;

  std::vector<std::vector<double>> node_runs(ensembles);
  std::vector<std::vector<double>> edge_runs(ensembles);
  parallel_for(ensembles, [&](std::uint32_t run) {
    Rng rng(substream(seed, run));
    const std::vector<std::uint32_t> picks =
        rng.sample(static_cast<std::uint32_t>(all_pairs), static_cast<std::uint32_t>(m));
    std::vector<double> node_load(v, 0.0);
    std::vector<double> edge_load(t.edge_count(), 0.0);
    std::vector<std::uint8_t> sel(v, 0);
    std::vector<double> suffix(v, 0.0);
    std::size_t at = 0;
    while (at < picks.size()) {
      const NodeId i = picks[at] / (v - 1);
      std::size_t end = at;
      std::fill(sel.begin(), sel.end(), 0);
      while (end < picks.size() && picks[end] / (v - 1) == i) {
        const std::uint32_t rest = picks[end] % (v - 1);
        const NodeId j = rest + (rest >= i ? 1 : 0);
        sel[j] = 1;
        ++end;
      }
      const SourceDag d = source_dag(t, i);
      std::fill(suffix.begin(), suffix.end(), 0.0);
      for (std::size_t idx = d.order.size(); idx-- > 0;) {
        const NodeId u = d.order[idx];
        for (const Arc& a : t.out(u)) {
          if (d.hop[a.to] != d.hop[u] + 1) continue;
          const double down = sel[a.to] + suffix[a.to];
          suffix[u] += down;
          edge_load[a.edge] += d.sigma[u] * down;
        }
        if (u != i) node_load[u] += d.sigma[u] * suffix[u];
      }
      at = end;
    }
    // interior load only: subtract nothing, but selected destinations were
    // never credited to themselves because suffix counts continuations
    node_runs[run] = std::move(node_load);
    edge_runs[run] = std::move(edge_load);
  });

  out.node_mean.assign(v, 0.0);
  out.edge_mean.assign(t.edge_count(), 0.0);
  out.node_stderr.assign(v, 0.0);
  out.edge_stderr.assign(t.edge_count(), 0.0);
  for (std::uint32_t run = 0; run < ensembles; ++run) {
    for (NodeId u = 0; u < v; ++u) out.node_mean[u] += node_runs[run][u];
    for (EdgeId e = 0; e < t.edge_count(); ++e) out.edge_mean[e] += edge_runs[run][e];
  }
  for (NodeId u = 0; u < v; ++u) out.node_mean[u] /= ensembles;
  for (EdgeId e = 0; e < t.edge_count(); ++e) out.edge_mean[e] /= ensembles;
  if (ensembles > 1) {
    for (std::uint32_t run = 0; run < ensembles; ++run) {
      for (NodeId u = 0; u < v; ++u) {
        const double d = node_runs[run][u] - out.node_mean[u];
        out.node_stderr[u] += d * d;
      }
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        const double d = edge_runs[run][e] - out.edge_mean[e];
        out.edge_stderr[e] += d * d;
      }
    }
    const double k = static_cast<double>(ensembles) * (ensembles - 1);
    for (double& x : out.node_stderr) x = std::sqrt(x / k);
    for (double& x : out.edge_stderr) x = std::sqrt(x / k);
  }
  return out;
}

std::vector<double> motter_lai_capacities(const Topology& t, double alpha) {
  if (alpha < 0.0) throw TopologyError("capacity headroom must be nonnegative");
  const Betweenness b = brandes_betweenness(t, false);
  std::vector<double> cap(t.node_count());
  for (NodeId i = 0; i < t.node_count(); ++i) cap[i] = (1.0 + alpha) * b.node[i];
  return cap;
}

MetricResult performance(const Topology& t, const std::vector<double>& demands,
                         const std::vector<double>& capacities, bool transit_only) {
  MetricResult r;
  r.key = "performance";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (t.directed()) throw TopologyError("performance applies to undirected graphs only");
  if (demands.size() != v || capacities.size() != v) {
    throw TopologyError("demand and capacity vectors must cover every node");
  }
  for (NodeId i = 0; i < v; ++i) {
    if (!(demands[i] > 0.0) || !(capacities[i] > 0.0)) {
      throw TopologyError("demands and capacities must be positive");
    }
  }
  if (v < 2) throw TopologyError("performance needs at least two nodes");
  if (!is_connected(t)) throw TopologyError("performance needs a connected graph");

  std::vector<double> load(v, 0.0);
  double pair_demand = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    for (NodeId j = i + 1; j < v; ++j) {
      const double yy = demands[i] * demands[j];
      pair_demand += yy;
      const std::vector<NodeId> path = min_hop_path(t, i, j);
      for (std::size_t p = 0; p < path.size(); ++p) {
        if (transit_only && (p == 0 || p + 1 == path.size())) continue;
        load[path[p]] += yy;
      }
    }
  }

  double rho = std::numeric_limits<double>::infinity();
  NodeId bottleneck = 0;
  for (NodeId i = 0; i < v; ++i) {
    if (load[i] > 0.0 && capacities[i] / load[i] < rho) {
      rho = capacities[i] / load[i];
      bottleneck = i;
    }
  }
  if (!std::isfinite(rho)) {
    return MetricResult::undefined(r.key, r.kind, "no loaded router constrains the flow");
  }
  r.value = rho;
  r.extras.push_back({"p_g", rho * pair_demand});
  r.extras.push_back({"bottleneck", static_cast<double>(bottleneck)});
  r.node_values.assign(v, std::nullopt);
  for (NodeId i = 0; i < v; ++i) r.node_values[i] = load[i];
  return r;
}

namespace {

// Unit-capacity link-constrained throughput: best uniform per-pair flow times
// the number of pairs. Returns 0 when fewer than two nodes remain.
double uniform_link_throughput(const Topology& t) {
  const std::uint32_t v = t.node_count();
  if (v < 2) return 0.0;
  std::vector<double> load(t.edge_count(), 0.0);
  double pairs = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    const DistanceView dv = shortest_paths(t, i, false);
    for (NodeId j = i + 1; j < v; ++j) {
      if (!dv.reachable(j)) continue;
      ++pairs;
      const std::vector<NodeId> path = min_hop_path(t, i, j);
      for (std::size_t p = 0; p + 1 < path.size(); ++p) {
        const auto e = t.find_edge(std::min(path[p], path[p + 1]),
                                   std::max(path[p], path[p + 1]));
        load[*e] += 1.0;
      }
    }
  }
  double worst = 0.0;
  for (const double x : load) worst = std::max(worst, x);
  if (worst <= 0.0) return 0.0;  // no pair uses any link
  return pairs / worst;
}

}  // namespace

MetricResult elasticity(const Topology& t, const std::vector<NodeId>& removal_sequence) {
  MetricResult r;
  r.key = "elasticity";
  r.codomain = Codomain::unit();
  if (t.directed()) throw TopologyError("elasticity applies to undirected graphs only");
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("elasticity needs at least two nodes");
  if (!is_connected(t)) throw TopologyError("elasticity needs a connected graph");
  for (const NodeId u : removal_sequence) {
    if (u >= v) throw TopologyError("removal target out of range");
  }

  const double t0 = uniform_link_throughput(t);
  if (t0 <= 0.0) return MetricResult::undefined(r.key, r.kind, "intact graph carries no flow");

  r.curve.push_back({0.0, 1.0});
  std::vector<bool> alive(v, true);
  double integral = 0.0;
  double prev_tg = 1.0;
  bool stopped = false;
  std::uint32_t removed = 0;
  for (const NodeId u : removal_sequence) {
    if (!alive[u]) throw TopologyError("removal sequence repeats a node");
    alive[u] = false;
    ++removed;
    const double frac = static_cast<double>(removed) / v;
    double tg = 0.0;
    if (removed < v) {
      const Topology sub = t.induced(alive);
      if (sub.node_count() >= 2 && !is_connected(sub)) {
        stopped = true;
        break;
      }
      tg = uniform_link_throughput(sub) / t0;
    }
    r.curve.push_back({frac, tg});
    integral += (prev_tg + tg) * 0.5 * (1.0 / v);
    prev_tg = tg;
  }
  r.value = integral;
  r.extras.push_back({"t0", t0});
  r.extras.push_back({"stopped_early", stopped ? 1.0 : 0.0});
  r.extras.push_back({"removed", static_cast<double>(r.curve.size() - 1)});
  return r;
}

ImpactReport vulnerability_impact_factors(const std::vector<AgentMeasure>& agents,
                                          double threshold) {
  if (agents.empty()) throw TopologyError("impact factors need at least one agent");
  ImpactReport rep;
  rep.cif.reserve(agents.size());
  for (const AgentMeasure& a : agents) {
    const double denom = std::abs(a.normal - a.min_operational);
    if (denom <= 0.0) {
      throw TopologyError("agent normal and minimal operation measures coincide");
    }
    const double cif = std::abs(a.normal - a.fault) / denom;
    rep.cif.push_back(cif);
    if (cif > threshold) ++rep.abnormal;
  }
  rep.sif = static_cast<double>(rep.abnormal) / agents.size();
  return rep;
}

namespace {

struct FlowOutcome {
  double delivered = 0.0;
  double demanded = 0.0;
};

// Sequential fill: each demand takes the min-hop path over surviving entities
// with spare capacity and delivers up to the path bottleneck.
FlowOutcome route_demands(const Topology& t, const std::vector<Demand>& demands,
                          const std::vector<std::uint8_t>& node_dead,
                          const std::vector<std::uint8_t>& edge_dead) {
  const std::uint32_t v = t.node_count();
  std::vector<double> residual(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) residual[e] = t.weight(e);

  FlowOutcome out;
  std::vector<std::uint32_t> hop(v);
  std::vector<std::pair<NodeId, EdgeId>> pred(v);
  for (const Demand& d : demands) {
    out.demanded += d.amount;
    if (node_dead[d.src] || node_dead[d.dst]) continue;
    if (d.src == d.dst) {
      out.delivered += d.amount;
      continue;
    }
    // BFS over live entities with spare capacity; lowest-id predecessor wins
    // because arcs are sorted by target.
    std::fill(hop.begin(), hop.end(), kNoHop);
    hop[d.src] = 0;
    std::deque<NodeId> q{d.src};
    while (!q.empty() && hop[d.dst] == kNoHop) {
      const NodeId u = q.front();
      q.pop_front();
      for (const Arc& a : t.out(u)) {
        if (edge_dead[a.edge] || node_dead[a.to] || residual[a.edge] <= 0.0) continue;
        if (hop[a.to] != kNoHop) continue;
        hop[a.to] = hop[u] + 1;
        pred[a.to] = {u, a.edge};
        q.push_back(a.to);
      }
    }
    if (hop[d.dst] == kNoHop) continue;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (NodeId x = d.dst; x != d.src; x = pred[x].first) {
      bottleneck = std::min(bottleneck, residual[pred[x].second]);
    }
    const double sent = std::min(d.amount, bottleneck);
    for (NodeId x = d.dst; x != d.src; x = pred[x].first) residual[pred[x].second] -= sent;
    out.delivered += sent;
  }
  return out;
}

}  // namespace

Survivability survivability_failures(const Topology& t, const std::vector<Demand>& demands,
                                     const FailureModel& fm, FailureScope scope,
                                     std::uint32_t samples, std::uint64_t seed) {
  const std::uint32_t v = t.node_count();
  const EdgeId e = t.edge_count();
  if (!fm.node_p.empty() && fm.node_p.size() != v) {
    throw TopologyError("node failure probabilities must cover every node");
  }
  if (!fm.edge_p.empty() && fm.edge_p.size() != e) {
    throw TopologyError("link failure probabilities must cover every link");
  }
  if (demands.empty()) throw TopologyError("survivability needs at least one demand");
  for (const Demand& d : demands) {
    if (d.src >= v || d.dst >= v) throw TopologyError("demand endpoint out of range");
    if (!(d.amount > 0.0)) throw TopologyError("demand amounts must be positive");
  }
  auto prob_of = [&](std::size_t k) {
    return k < fm.node_p.size() ? fm.node_p[k] : fm.edge_p[k - fm.node_p.size()];
  };
  const std::size_t entity_count = fm.node_p.size() + fm.edge_p.size();
  std::vector<std::size_t> prone;
  for (std::size_t k = 0; k < entity_count; ++k) {
    const double p = prob_of(k);
    if (p < 0.0 || p > 1.0) throw TopologyError("failure probabilities must lie in [0, 1]");
    if (p > 0.0) prone.push_back(k);
  }

  std::vector<std::uint8_t> node_dead(v, 0);
  std::vector<std::uint8_t> edge_dead(e, 0);
  auto apply = [&](std::size_t k, std::uint8_t val) {
    if (k < fm.node_p.size()) {
      node_dead[k] = val;
    } else {
      edge_dead[k - fm.node_p.size()] = val;
    }
  };
  auto share = [&]() {
    const FlowOutcome f = route_demands(t, demands, node_dead, edge_dead);
    return f.delivered / f.demanded;
  };

  Survivability s;
  const double baseline = share();
  s.baseline_overload = baseline < 1.0 - 1e-12;

  std::map<double, double> dist;
  if (scope == FailureScope::SingleOnly) {
    double total_p = 0.0;
    for (const std::size_t k : prone) total_p += prob_of(k);
    if (prone.empty() || total_p <= 0.0) {
      dist[baseline] = 1.0;
      s.events = 1;
    } else {
      for (const std::size_t k : prone) {
        apply(k, 1);
        dist[share()] += prob_of(k) / total_p;
        apply(k, 0);
        ++s.events;
      }
    }
    s.exact = true;
  } else if (prone.size() <= 16) {
    const std::size_t masks = std::size_t{1} << prone.size();
    for (std::size_t mask = 0; mask < masks; ++mask) {
      double p = 1.0;
      for (std::size_t b = 0; b < prone.size(); ++b) {
        const bool down = (mask >> b) & 1;
        apply(prone[b], down ? 1 : 0);
        p *= down ? prob_of(prone[b]) : 1.0 - prob_of(prone[b]);
      }
      if (p > 0.0) dist[share()] += p;
      ++s.events;
    }
    for (const std::size_t k : prone) apply(k, 0);
    s.exact = true;
  } else {
    Rng rng(substream(seed, 0));
    for (std::uint32_t it = 0; it < samples; ++it) {
      for (const std::size_t k : prone) apply(k, rng.chance(prob_of(k)) ? 1 : 0);
      dist[share()] += 1.0 / samples;
      ++s.events;
    }
    for (const std::size_t k : prone) apply(k, 0);
    s.exact = false;
  }

  for (const auto& [x, p] : dist) {
    s.distribution.push_back({x, p});
    s.expected += x * p;
  }
  return s;
}

}  // namespace netrob
