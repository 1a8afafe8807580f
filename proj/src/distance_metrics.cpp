#include "netrob/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "netrob/components.hpp"
#include "netrob/parallel.hpp"
#include "netrob/paths.hpp"

namespace netrob {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distances from src with one node removed from the graph; hop counts, or
// reciprocal-weight lengths when use_weights is set.
std::vector<double> masked_lengths(const Topology& t, NodeId src, NodeId blocked,
                                   bool use_weights) {
  const std::uint32_t v = t.node_count();
  std::vector<double> dist(v, kInf);
  dist[src] = 0.0;
  if (!use_weights) {
    std::deque<NodeId> q{src};
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop_front();
      for (const Arc& a : t.out(u)) {
        if (a.to == blocked || dist[a.to] != kInf) continue;
        dist[a.to] = dist[u] + 1.0;
        q.push_back(a.to);
      }
    }
    return dist;
  }
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<std::uint8_t> done(v, 0);
  pq.push({0.0, src});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Arc& a : t.out(u)) {
      if (a.to == blocked || done[a.to]) continue;
      const double nd = d + 1.0 / t.weight(a.edge);
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return dist;
}

// Cumulative reachable-node counts by hop, self included; profile[0] = 1 and
// the last entry is the size of the reachable set.
std::vector<std::uint64_t> hop_profile(const Topology& t, NodeId src) {
  const std::uint32_t v = t.node_count();
  std::vector<std::uint32_t> hops(v, std::numeric_limits<std::uint32_t>::max());
  hops[src] = 0;
  std::uint32_t ecc = 0;
  std::deque<NodeId> q{src};
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop_front();
    ecc = std::max(ecc, hops[u]);
    for (const Arc& a : t.out(u)) {
      if (hops[a.to] != std::numeric_limits<std::uint32_t>::max()) continue;
      hops[a.to] = hops[u] + 1;
      q.push_back(a.to);
    }
  }
  std::vector<std::uint64_t> profile(ecc + 1, 0);
  for (NodeId j = 0; j < v; ++j) {
    if (hops[j] != std::numeric_limits<std::uint32_t>::max()) ++profile[hops[j]];
  }
  for (std::size_t h = 1; h < profile.size(); ++h) profile[h] += profile[h - 1];
  return profile;
}

struct Fit {
  double slope = 0.0;
  double r2 = 0.0;
  bool ok = false;
};

Fit loglog_fit(const std::vector<std::pair<double, double>>& pts) {
  Fit f;
  double sx = 0, sy = 0;
  std::size_t n = 0;
  for (const auto& [x, y] : pts) {
    if (x <= 0.0 || y <= 0.0) continue;
    sx += std::log(x);
    sy += std::log(y);
    ++n;
  }
  if (n < 2) return f;
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    if (x <= 0.0 || y <= 0.0) continue;
    const double dx = std::log(x) - mx;
    const double dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) return f;
  f.slope = sxy / sxx;
  f.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  f.ok = true;
  return f;
}

}  // namespace

MetricResult aspl(const Topology& t, AsplMode mode, bool use_weights) {
  MetricResult r;
  r.key = mode == AsplMode::FiniteOnly        ? "aspl"
          : mode == AsplMode::GiantComponent ? "aspl_giant_component"
                                             : "dik";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("average path length needs at least two nodes");
  const bool weighted = use_weights && t.weighted();

  std::vector<std::uint8_t> member(v, 1);
  std::uint32_t member_count = v;
  if (mode == AsplMode::GiantComponent) {
    const ComponentReport cr = components(t);
    for (NodeId i = 0; i < v; ++i) member[i] = cr.comp[i] == cr.largest;
    member_count = cr.largest_size();
  }

  struct Slot {
    double sum = 0.0;
    double sumsq = 0.0;
    std::uint64_t cnt = 0;
  };
  std::vector<Slot> slot(v);
  parallel_for(v, [&](std::uint32_t i) {
    if (!member[i]) return;
    const DistanceView dv = shortest_paths(t, i, weighted);
    Slot& s = slot[i];
    for (NodeId j = 0; j < v; ++j) {
      if (j == i || !member[j] || !dv.reachable(j)) continue;
      const double d = dv.dist[j];
      s.sum += d;
      s.sumsq += d * d;
      ++s.cnt;
    }
  });

  double sum = 0.0, sumsq = 0.0;
  std::uint64_t cnt = 0;
  r.node_values.assign(v, std::nullopt);
  for (NodeId i = 0; i < v; ++i) {
    sum += slot[i].sum;
    sumsq += slot[i].sumsq;
    cnt += slot[i].cnt;
    if (slot[i].cnt > 0) r.node_values[i] = slot[i].sum / slot[i].cnt;
  }
  if (cnt == 0) return MetricResult::undefined(r.key, r.kind, "no finite pair");

  const double mean = sum / cnt;
  const double width = std::sqrt(std::max(0.0, sumsq / cnt - mean * mean));
  const double all_pairs = static_cast<double>(v) * (v - 1);
  switch (mode) {
    case AsplMode::FiniteOnly:
      r.value = mean;
      r.extras.push_back({"width", width});
      r.extras.push_back({"pair_coverage", cnt / all_pairs});
      break;
    case AsplMode::GiantComponent: {
      const double in_pairs = static_cast<double>(member_count) * (member_count - 1);
      r.value = mean;
      r.extras.push_back({"width", width});
      r.extras.push_back({"giant_size", static_cast<double>(member_count)});
      if (in_pairs > 0) r.extras.push_back({"pair_coverage", cnt / in_pairs});
      break;
    }
    case AsplMode::Dik: {
      const double k = cnt / all_pairs;
      r.value = mean / k;
      r.extras.push_back({"finite_mean", mean});
      r.extras.push_back({"k", k});
      r.extras.push_back({"width", width});
      break;
    }
  }
  return r;
}

MetricResult diameter(const Topology& t, bool use_weights) {
  MetricResult r;
  r.key = "diameter";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  const bool weighted = use_weights && t.weighted();

  std::vector<double> ecc(v, -1.0);
  std::vector<std::uint8_t> missing(v, 0);
  parallel_for(v, [&](std::uint32_t i) {
    const DistanceView dv = shortest_paths(t, i, weighted);
    for (NodeId j = 0; j < v; ++j) {
      if (j == i) continue;
      if (!dv.reachable(j)) {
        missing[i] = 1;
      } else {
        ecc[i] = std::max(ecc[i], dv.dist[j]);
      }
    }
  });

  double best = -1.0;
  bool any_missing = false;
  for (NodeId i = 0; i < v; ++i) {
    best = std::max(best, ecc[i]);
    any_missing = any_missing || missing[i];
  }
  if (best < 0.0) return MetricResult::undefined(r.key, r.kind, "no finite pair");
  r.value = best;
  r.extras.push_back({"infinite", any_missing ? 1.0 : 0.0});
  return r;
}

MetricResult global_efficiency(const Topology& t, bool use_weights) {
  MetricResult r;
  r.key = "global_efficiency";
  const bool weighted = use_weights && t.weighted();
  r.codomain = weighted ? Codomain::nonneg() : Codomain::unit();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("efficiency needs at least two nodes");

  std::vector<double> eff(v, 0.0);
  parallel_for(v, [&](std::uint32_t i) {
    const DistanceView dv = shortest_paths(t, i, weighted);
    double acc = 0.0;
    for (NodeId j = 0; j < v; ++j) {
      if (j != i && dv.reachable(j)) acc += 1.0 / dv.dist[j];
    }
    eff[i] = acc / (v - 1);
  });

  double total = 0.0;
  r.node_values.assign(v, std::nullopt);
  for (NodeId i = 0; i < v; ++i) {
    total += eff[i];
    r.node_values[i] = eff[i];
  }
  r.value = total / v;
  if (*r.value > 0.0) r.extras.push_back({"harmonic_mean", 1.0 / *r.value});
  return r;
}

MetricResult harmonic_mean_distance(const Topology& t, bool use_weights) {
  MetricResult r;
  r.key = "harmonic_mean_distance";
  const bool weighted = use_weights && t.weighted();
  r.codomain = weighted ? Codomain::nonneg() : Codomain::range(1.0, kInf);
  const MetricResult eg = global_efficiency(t, use_weights);
  if (!eg.value || *eg.value <= 0.0) {
    return MetricResult::undefined(r.key, r.kind, "totally disconnected graph");
  }
  r.value = 1.0 / *eg.value;
  r.extras.push_back({"global_efficiency", *eg.value});
  return r;
}

MetricResult local_efficiency(const Topology& t, bool use_weights) {
  MetricResult r;
  r.key = "local_efficiency";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  const bool weighted = use_weights && t.weighted();
  r.codomain = weighted ? Codomain::nonneg() : Codomain::unit();
  if (t.directed()) throw TopologyError("local efficiency applies to undirected graphs only");
  const std::uint32_t v = t.node_count();

  std::vector<std::optional<double>> vals(v);
  parallel_for(v, [&](std::uint32_t i) {
    const std::uint32_t k = t.degree(i);
    if (k < 2) return;
    double acc = 0.0;
    for (const Arc& am : t.out(i)) {
      const std::vector<double> dist = masked_lengths(t, am.to, i, weighted);
      for (const Arc& an : t.out(i)) {
        if (an.to != am.to && std::isfinite(dist[an.to])) acc += 1.0 / dist[an.to];
      }
    }
    vals[i] = acc / (static_cast<double>(k) * (k - 1));
  });

  r.node_values = std::move(vals);
  double total = 0.0;
  std::uint32_t defined = 0;
  for (const auto& x : r.node_values) {
    if (x) {
      total += *x;
      ++defined;
    }
  }
  if (defined > 0) r.value = total / defined;
  r.extras.push_back({"defined_count", static_cast<double>(defined)});
  return r;
}

MetricResult cyclic_coefficient(const Topology& t) {
  MetricResult r;
  r.key = "cyclic_coefficient";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::range(0.0, 1.0 / 3.0);
  if (t.directed()) throw TopologyError("cyclic coefficient applies to undirected graphs only");
  const std::uint32_t v = t.node_count();

  std::vector<std::optional<double>> vals(v);
  parallel_for(v, [&](std::uint32_t i) {
    const std::uint32_t k = t.degree(i);
    if (k < 2) return;
    double acc = 0.0;
    for (const Arc& am : t.out(i)) {
      const std::vector<double> dist = masked_lengths(t, am.to, i, false);
      for (const Arc& an : t.out(i)) {
        if (an.to != am.to && std::isfinite(dist[an.to])) acc += 1.0 / (dist[an.to] + 2.0);
      }
    }
    vals[i] = acc / (static_cast<double>(k) * (k - 1));
  });

  r.node_values = std::move(vals);
  double total = 0.0;
  std::uint32_t defined = 0;
  for (const auto& x : r.node_values) {
    if (x) {
      total += *x;
      ++defined;
    }
  }
  if (defined > 0) r.value = total / defined;
  r.extras.push_back({"defined_count", static_cast<double>(defined)});
  return r;
}

CplReport characteristic_path_length(const Topology& t,
                                     const std::vector<std::uint32_t>& labels,
                                     bool use_weights) {
  const std::uint32_t v = t.node_count();
  if (labels.size() != v) throw TopologyError("label vector must cover every node");
  if (v == 0) throw TopologyError("characteristic path length needs nodes");
  const bool weighted = use_weights && t.weighted();

  std::uint32_t count = 0;
  for (const std::uint32_t q : labels) count = std::max(count, q + 1);
  std::vector<std::uint64_t> size(count, 0);
  for (const std::uint32_t q : labels) ++size[q];
  for (std::uint32_t q = 0; q < count; ++q) {
    if (size[q] == 0) throw TopologyError("label class has no members");
  }

  std::vector<double> sums(static_cast<std::size_t>(v) * count, 0.0);
  std::vector<std::uint64_t> cnts(static_cast<std::size_t>(v) * count, 0);
  parallel_for(v, [&](std::uint32_t i) {
    const DistanceView dv = shortest_paths(t, i, weighted);
    double* srow = sums.data() + static_cast<std::size_t>(i) * count;
    std::uint64_t* crow = cnts.data() + static_cast<std::size_t>(i) * count;
    for (NodeId j = 0; j < v; ++j) {
      if (j == i || !dv.reachable(j)) continue;
      srow[labels[j]] += dv.dist[j];
      ++crow[labels[j]];
    }
  });

  CplReport rep;
  rep.class_count = count;
  rep.mean.assign(static_cast<std::size_t>(count) * count, std::nullopt);
  rep.coverage.assign(static_cast<std::size_t>(count) * count, 0.0);
  std::vector<double> cell_sum(static_cast<std::size_t>(count) * count, 0.0);
  std::vector<std::uint64_t> cell_cnt(static_cast<std::size_t>(count) * count, 0);
  for (NodeId i = 0; i < v; ++i) {
    const std::size_t row = static_cast<std::size_t>(labels[i]) * count;
    for (std::uint32_t qj = 0; qj < count; ++qj) {
      cell_sum[row + qj] += sums[static_cast<std::size_t>(i) * count + qj];
      cell_cnt[row + qj] += cnts[static_cast<std::size_t>(i) * count + qj];
    }
  }
  for (std::uint32_t qi = 0; qi < count; ++qi) {
    for (std::uint32_t qj = 0; qj < count; ++qj) {
      const std::size_t c = static_cast<std::size_t>(qi) * count + qj;
      const std::uint64_t pairs_total =
          qi == qj ? size[qi] * (size[qi] - 1) : size[qi] * size[qj];
      if (cell_cnt[c] > 0) rep.mean[c] = cell_sum[c] / cell_cnt[c];
      rep.coverage[c] =
          pairs_total > 0 ? static_cast<double>(cell_cnt[c]) / pairs_total : 0.0;
    }
  }
  return rep;
}

MetricResult expansion(const Topology& t, std::uint32_t h, bool directed_policy) {
  MetricResult r;
  r.key = "expansion";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::unit();
  if (h < 1) throw TopologyError("expansion horizon must be at least one hop");
  const std::uint32_t v = t.node_count();

  std::vector<double> vals(v, 0.0);
  if (directed_policy && t.directed()) {
    const auto dist = policy_distance_matrix(t);
    parallel_for(v, [&](std::uint32_t i) {
      std::uint32_t cnt = 0;
      for (NodeId j = 0; j < v; ++j) {
        if (j != i && dist[i][j] <= h) ++cnt;
      }
      vals[i] = static_cast<double>(cnt) / v;
    });
  } else {
    parallel_for(v, [&](std::uint32_t i) {
      const DistanceView dv = shortest_paths(t, i, false);
      std::uint32_t cnt = 0;
      for (NodeId j = 0; j < v; ++j) {
        if (j != i && dv.reachable(j) && dv.hops[j] <= h) ++cnt;
      }
      vals[i] = static_cast<double>(cnt) / v;
    });
  }

  r.node_values.assign(v, std::nullopt);
  double total = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    r.node_values[i] = vals[i];
    total += vals[i];
  }
  if (v > 0) r.value = total / v;
  return r;
}

MetricResult expansion_exponent(const Topology& t) {
  MetricResult r;
  r.key = "expansion_exponent";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();

  std::vector<std::vector<std::uint64_t>> profiles(v);
  parallel_for(v, [&](std::uint32_t i) { profiles[i] = hop_profile(t, i); });

  std::size_t hmax = 1;
  for (const auto& p : profiles) hmax = std::max(hmax, p.size() - 1);

  r.node_values.assign(v, std::nullopt);
  double r2_sum = 0.0;
  std::uint32_t defined = 0;
  for (NodeId i = 0; i < v; ++i) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t h = 1; h < profiles[i].size(); ++h) {
      pts.push_back({static_cast<double>(h),
                     static_cast<double>(profiles[i][h] - 1) / v});
    }
    const Fit f = loglog_fit(pts);
    if (f.ok) {
      r.node_values[i] = f.slope;
      r2_sum += f.r2;
      ++defined;
    }
  }
  if (defined > 0) r.extras.push_back({"r2_mean", r2_sum / defined});

  std::vector<std::pair<double, double>> global_pts;
  for (std::size_t h = 1; h <= hmax; ++h) {
    double acc = 0.0;
    for (NodeId i = 0; i < v; ++i) {
      const std::size_t hh = std::min(h, profiles[i].size() - 1);
      acc += static_cast<double>(profiles[i][hh] - 1) / v;
    }
    global_pts.push_back({static_cast<double>(h), acc / v});
    r.curve.push_back({static_cast<double>(h), acc / v});
  }
  const Fit g = loglog_fit(global_pts);
  if (g.ok) {
    r.value = g.slope;
    r.extras.push_back({"r2", g.r2});
  }
  if (!r.value && defined == 0) {
    return MetricResult::undefined(r.key, r.kind, "expansion curve has fewer than two points");
  }
  return r;
}

MetricResult effective_eccentricity(const Topology& t, double r_frac) {
  MetricResult r;
  r.key = "effective_eccentricity";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  if (!(r_frac > 0.0 && r_frac <= 1.0)) throw TopologyError("coverage fraction must lie in (0, 1]");
  const std::uint32_t v = t.node_count();

  std::vector<double> vals(v, 0.0);
  parallel_for(v, [&](std::uint32_t i) {
    const std::vector<std::uint64_t> profile = hop_profile(t, i);
    const double threshold = r_frac * static_cast<double>(profile.back());
    std::size_t h = 0;
    while (static_cast<double>(profile[h]) < threshold) ++h;
    vals[i] = static_cast<double>(h);
  });

  r.node_values.assign(v, std::nullopt);
  double total = 0.0;
  double peak = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    r.node_values[i] = vals[i];
    total += vals[i];
    peak = std::max(peak, vals[i]);
  }
  if (v > 0) {
    r.value = total / v;
    r.extras.push_back({"max", peak});
  }
  return r;
}

MetricResult effective_diameter(const Topology& t, double r_frac) {
  MetricResult r;
  r.key = "effective_diameter";
  r.codomain = Codomain::nonneg();
  if (!(r_frac > 0.0 && r_frac <= 1.0)) throw TopologyError("coverage fraction must lie in (0, 1]");
  const std::uint32_t v = t.node_count();
  if (v == 0) return MetricResult::undefined(r.key, r.kind, "empty graph");

  std::vector<std::vector<std::uint64_t>> profiles(v);
  parallel_for(v, [&](std::uint32_t i) { profiles[i] = hop_profile(t, i); });

  std::size_t hmax = 0;
  for (const auto& p : profiles) hmax = std::max(hmax, p.size() - 1);

  std::vector<double> total(hmax + 1, 0.0);
  double total_inf = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    for (std::size_t h = 0; h <= hmax; ++h) {
      total[h] += static_cast<double>(profiles[i][std::min(h, profiles[i].size() - 1)]);
    }
    total_inf += static_cast<double>(profiles[i].back());
  }

  const double threshold = r_frac * total_inf;
  std::size_t d = 0;
  while (total[d] < threshold) ++d;
  r.value = static_cast<double>(d);
  for (std::size_t h = 0; h <= hmax; ++h) r.curve.push_back({static_cast<double>(h), total[h] / total_inf});
  return r;
}

}  // namespace netrob
