#include "netrob/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace netrob {
namespace {

const char* variant_key(ClusteringVariant v) {
  switch (v) {
    case ClusteringVariant::WattsLocal: return "clustering_local";
    case ClusteringVariant::GlobalAvg: return "clustering_global_avg";
    case ClusteringVariant::GlobalTriangle: return "clustering_global_triangle";
    case ClusteringVariant::SofferLocal: return "clustering_soffer_local";
    case ClusteringVariant::SofferGlobal: return "clustering_soffer_global";
    case ClusteringVariant::SofferGlobalTriangle: return "clustering_soffer_global_triangle";
    case ClusteringVariant::BarratWeighted: return "clustering_barrat";
    case ClusteringVariant::OnnelaWeighted: return "clustering_onnela";
    case ClusteringVariant::OpsahlTau: return "clustering_opsahl";
    case ClusteringVariant::WassermanDirected: return "clustering_wasserman";
  }
  return "clustering";
}

bool is_local_variant(ClusteringVariant v) {
  return v == ClusteringVariant::WattsLocal || v == ClusteringVariant::SofferLocal ||
         v == ClusteringVariant::BarratWeighted || v == ClusteringVariant::OnnelaWeighted;
}

MetricResult result_shell(ClusteringVariant v) {
  MetricResult r;
  r.key = variant_key(v);
  r.kind = is_local_variant(v) ? MetricKind::PerNode : MetricKind::GlobalScalar;
  r.scope = is_local_variant(v) ? MetricScope::Local : MetricScope::Global;
  r.codomain = Codomain::unit();
  return r;
}

// Visits every connected neighbor pair (j, l) of i with j < l exactly once,
// handing over the edge ids i-j, i-l and j-l. `mark` must be zeroed outside;
// it temporarily holds edge-id+1 towards i.
template <typename F>
void connected_neighbor_pairs(const Topology& t, NodeId i, std::vector<uint32_t>& mark, F&& f) {
  for (const Arc& a : t.out(i)) mark[a.to] = a.edge + 1;
  for (const Arc& a : t.out(i)) {
    const NodeId j = a.to;
    for (const Arc& b : t.out(j)) {
      const NodeId l = b.to;
      if (l > j && l != i && mark[l] != 0) f(j, a.edge, l, mark[l] - 1, b.edge);
    }
  }
  for (const Arc& a : t.out(i)) mark[a.to] = 0;
}

std::vector<uint32_t> neighborhood_edge_counts(const Topology& t) {
  std::vector<uint32_t> counts(t.node_count(), 0);
  std::vector<uint32_t> mark(t.node_count(), 0);
  for (NodeId i = 0; i < t.node_count(); ++i) {
    uint32_t e = 0;
    connected_neighbor_pairs(t, i, mark,
                             [&](NodeId, EdgeId, NodeId, EdgeId, EdgeId) { ++e; });
    counts[i] = e;
  }
  return counts;
}

void require_undirected(const Topology& t, const char* what) {
  if (t.directed()) throw TopologyError(std::string(what) + " applies to undirected graphs only");
}

void require_weighted(const Topology& t, const char* what) {
  if (!t.weighted()) throw TopologyError(std::string(what) + " needs edge weights");
}

// Greedy simple-graph packing under per-vertex stub budgets: repeatedly take
// the vertex with the most remaining stubs and link it to the fattest
// still-unlinked partners. Lower-bounds the true optimum, upper-bounded by
// floor(sum caps / 2).
uint32_t greedy_pack(std::vector<uint32_t> cap) {
  const size_t n = cap.size();
  if (n < 2) return 0;
  std::vector<bool> linked(n * n, false);
  std::vector<size_t> cand;
  uint32_t placed = 0;
  while (true) {
    size_t a = n;
    for (size_t i = 0; i < n; ++i) {
      if (cap[i] > 0 && (a == n || cap[i] > cap[a])) a = i;
    }
    if (a == n) break;
    cand.clear();
    for (size_t b = 0; b < n; ++b) {
      if (b != a && cap[b] > 0 && !linked[a * n + b]) cand.push_back(b);
    }
    if (cand.empty()) {
      cap[a] = 0;
      continue;
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [&](size_t x, size_t y) { return cap[x] > cap[y]; });
    const size_t take = std::min<size_t>(cap[a], cand.size());
    for (size_t c = 0; c < take; ++c) {
      const size_t b = cand[c];
      linked[a * n + b] = linked[b * n + a] = true;
      --cap[b];
      ++placed;
    }
    cap[a] -= static_cast<uint32_t>(take);
  }
  return placed;
}

double triplet_value(TripletValue def, double wa, double wb) {
  switch (def) {
    case TripletValue::Arithmetic: return 0.5 * (wa + wb);
    case TripletValue::Geometric: return std::sqrt(wa * wb);
    case TripletValue::Max: return std::max(wa, wb);
    case TripletValue::Min: return std::min(wa, wb);
  }
  return 0.0;
}

MetricResult watts_local(const Topology& t) {
  MetricResult r = result_shell(ClusteringVariant::WattsLocal);
  const std::vector<uint32_t> e = neighborhood_edge_counts(t);
  r.node_values.assign(t.node_count(), std::nullopt);
  std::vector<std::pair<double, std::pair<double, uint32_t>>> by_degree;  // k -> (sum, n)
  double sum = 0.0;
  uint32_t defined = 0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    if (k < 2) continue;
    const double c = static_cast<double>(e[i]) / (0.5 * k * (k - 1.0));
    r.node_values[i] = c;
    sum += c;
    ++defined;
    auto it = std::find_if(by_degree.begin(), by_degree.end(),
                           [&](const auto& p) { return p.first == k; });
    if (it == by_degree.end()) {
      by_degree.push_back({static_cast<double>(k), {c, 1}});
    } else {
      it->second.first += c;
      it->second.second += 1;
    }
  }
  std::sort(by_degree.begin(), by_degree.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& p : by_degree) {
    r.curve.push_back({p.first, p.second.first / p.second.second});
  }
  if (defined > 0) r.extras.push_back({"mean", sum / defined});
  return r;
}

MetricResult global_avg(const Topology& t) {
  MetricResult r = result_shell(ClusteringVariant::GlobalAvg);
  const std::vector<uint32_t> e = neighborhood_edge_counts(t);
  double sum = 0.0;
  uint32_t counted = 0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    if (k < 2) continue;
    sum += static_cast<double>(e[i]) / (0.5 * k * (k - 1.0));
    ++counted;
  }
  if (counted == 0) {
    return MetricResult::undefined(r.key, r.kind, "no node has degree above one");
  }
  r.value = sum / counted;
  r.extras.push_back({"nodes_counted", static_cast<double>(counted)});
  return r;
}

MetricResult global_triangle(const Topology& t) {
  MetricResult r = result_shell(ClusteringVariant::GlobalTriangle);
  const std::vector<uint32_t> e = neighborhood_edge_counts(t);
  double closed = 0.0;
  double triplets = 0.0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    closed += e[i];
    triplets += 0.5 * k * (k - 1.0);
  }
  if (triplets == 0.0) {
    return MetricResult::undefined(r.key, r.kind, "graph has no connected triples");
  }
  r.value = closed / triplets;
  r.extras.push_back({"triangles", closed / 3.0});
  r.extras.push_back({"triplets", triplets});
  return r;
}

MetricResult soffer(const Topology& t, ClusteringVariant variant) {
  MetricResult r = result_shell(variant);
  const std::vector<uint32_t> e = neighborhood_edge_counts(t);
  const SofferOmega omega = soffer_omega(t);
  if (variant == ClusteringVariant::SofferLocal) {
    r.node_values.assign(t.node_count(), std::nullopt);
    double sum = 0.0;
    uint32_t defined = 0;
    for (NodeId i = 0; i < t.node_count(); ++i) {
      if (omega.refined[i] <= 0.0) continue;
      const double c = e[i] / omega.refined[i];
      r.node_values[i] = c;
      sum += c;
      ++defined;
    }
    if (defined > 0) r.extras.push_back({"mean", sum / defined});
    return r;
  }
  if (variant == ClusteringVariant::SofferGlobal) {
    double sum = 0.0;
    uint32_t counted = 0;
    for (NodeId i = 0; i < t.node_count(); ++i) {
      if (omega.refined[i] <= 0.0) continue;
      sum += e[i] / omega.refined[i];
      ++counted;
    }
    if (counted == 0) {
      return MetricResult::undefined(r.key, r.kind, "no node has free neighbor capacity");
    }
    r.value = sum / counted;
    r.extras.push_back({"nodes_counted", static_cast<double>(counted)});
    return r;
  }
  double num = 0.0;
  double den = 0.0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    num += e[i];
    den += omega.refined[i];
  }
  if (den == 0.0) {
    return MetricResult::undefined(r.key, r.kind, "no node has free neighbor capacity");
  }
  r.value = num / den;
  return r;
}

MetricResult barrat(const Topology& t) {
  MetricResult r = result_shell(ClusteringVariant::BarratWeighted);
  require_weighted(t, "barrat coefficient");
  r.node_values.assign(t.node_count(), std::nullopt);
  std::vector<uint32_t> mark(t.node_count(), 0);
  double sum = 0.0;
  uint32_t defined = 0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    if (k < 2) continue;
    double acc = 0.0;
    connected_neighbor_pairs(t, i, mark, [&](NodeId, EdgeId eij, NodeId, EdgeId eil, EdgeId) {
      acc += t.weight(eij) + t.weight(eil);  // ordered pairs fold the 1/2 away
    });
    const double c = acc / (t.strength(i) * (k - 1.0));
    r.node_values[i] = c;
    sum += c;
    ++defined;
  }
  if (defined > 0) r.extras.push_back({"mean", sum / defined});
  return r;
}

MetricResult onnela(const Topology& t) {
  MetricResult r = result_shell(ClusteringVariant::OnnelaWeighted);
  require_weighted(t, "onnela coefficient");
  double wmax = 0.0;
  for (EdgeId e = 0; e < t.edge_count(); ++e) wmax = std::max(wmax, t.weight(e));
  r.node_values.assign(t.node_count(), std::nullopt);
  std::vector<uint32_t> mark(t.node_count(), 0);
  double sum = 0.0;
  uint32_t defined = 0;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    if (k < 2) continue;
    double acc = 0.0;
    connected_neighbor_pairs(t, i, mark,
                             [&](NodeId, EdgeId eij, NodeId, EdgeId eil, EdgeId ejl) {
                               const double p = (t.weight(eij) / wmax) *
                                                (t.weight(eil) / wmax) *
                                                (t.weight(ejl) / wmax);
                               acc += std::cbrt(p);
                             });
    const double c = 2.0 * acc / (k * (k - 1.0));
    r.node_values[i] = c;
    sum += c;
    ++defined;
  }
  if (defined > 0) r.extras.push_back({"mean", sum / defined});
  return r;
}

MetricResult opsahl(const Topology& t, std::optional<TripletValue> tau) {
  MetricResult r = result_shell(ClusteringVariant::OpsahlTau);
  require_weighted(t, "opsahl coefficient");
  if (!tau) throw TopologyError("opsahl coefficient needs a triplet value definition");
  double total = 0.0;
  double closed = 0.0;
  for (NodeId j = 0; j < t.node_count(); ++j) {
    const auto arcs = t.out(j);
    for (size_t a = 0; a < arcs.size(); ++a) {
      for (size_t b = a + 1; b < arcs.size(); ++b) {
        const double v = triplet_value(*tau, t.weight(arcs[a].edge), t.weight(arcs[b].edge));
        total += v;
        if (t.has_edge(arcs[a].to, arcs[b].to)) closed += v;
      }
    }
  }
  if (total == 0.0) {
    return MetricResult::undefined(r.key, r.kind, "graph has no connected triples");
  }
  r.value = closed / total;
  return r;
}

MetricResult wasserman(const Topology& t, std::optional<TripletValue> tau) {
  MetricResult r = result_shell(ClusteringVariant::WassermanDirected);
  if (!t.directed()) throw TopologyError("wasserman coefficient applies to directed graphs only");
  const bool weighted = t.weighted();
  const TripletValue def = tau.value_or(TripletValue::Arithmetic);
  double total = 0.0;
  double closed = 0.0;
  for (NodeId j = 0; j < t.node_count(); ++j) {
    for (const Arc& in : t.in(j)) {
      for (const Arc& out : t.out(j)) {
        if (in.to == out.to) continue;
        const double v =
            weighted ? triplet_value(def, t.weight(in.edge), t.weight(out.edge)) : 1.0;
        total += v;
        if (t.find_edge(in.to, out.to)) closed += v;
      }
    }
  }
  if (total == 0.0) {
    return MetricResult::undefined(r.key, r.kind, "graph has no directed two-paths");
  }
  r.value = closed / total;
  return r;
}

}  // namespace

SofferOmega soffer_omega(const Topology& t) {
  require_undirected(t, "neighbor capacity bound");
  SofferOmega out;
  out.upper.assign(t.node_count(), 0.0);
  out.refined.assign(t.node_count(), 0.0);
  const std::vector<uint32_t> e = neighborhood_edge_counts(t);
  std::vector<uint32_t> caps;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const uint32_t k = t.degree(i);
    if (k < 2) continue;
    caps.clear();
    uint64_t cap_sum = 0;
    bool saturated = true;  // every neighbor can reach all others
    for (const Arc& a : t.out(i)) {
      const uint32_t c = std::min(t.degree(a.to) - 1, k - 1);
      caps.push_back(c);
      cap_sum += c;
      if (c != k - 1) saturated = false;
    }
    const uint32_t upper = static_cast<uint32_t>(cap_sum / 2);
    uint32_t refined = saturated ? upper : greedy_pack(caps);
    refined = std::max(refined, e[i]);
    out.upper[i] = upper;
    out.refined[i] = refined;
  }
  return out;
}

MetricResult clustering_coefficient(const Topology& t, ClusteringVariant variant,
                                    std::optional<TripletValue> tau) {
  if (variant == ClusteringVariant::WassermanDirected) return wasserman(t, tau);
  require_undirected(t, "clustering coefficient");
  switch (variant) {
    case ClusteringVariant::WattsLocal: return watts_local(t);
    case ClusteringVariant::GlobalAvg: return global_avg(t);
    case ClusteringVariant::GlobalTriangle: return global_triangle(t);
    case ClusteringVariant::SofferLocal:
    case ClusteringVariant::SofferGlobal:
    case ClusteringVariant::SofferGlobalTriangle: return soffer(t, variant);
    case ClusteringVariant::BarratWeighted: return barrat(t);
    case ClusteringVariant::OnnelaWeighted: return onnela(t);
    case ClusteringVariant::OpsahlTau: return opsahl(t, tau);
    case ClusteringVariant::WassermanDirected: break;
  }
  throw TopologyError("unknown clustering variant");
}

MetricResult edge_clustering_coefficient(const Topology& t, uint32_t loop_order) {
  require_undirected(t, "edge clustering coefficient");
  if (loop_order != 3 && loop_order != 4) {
    throw TopologyError("edge clustering supports loop orders 3 and 4");
  }
  MetricResult r;
  r.key = "edge_clustering";
  r.kind = MetricKind::PerEdge;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::range(0.0, 2.0);
  r.extras.push_back({"loop_order", static_cast<double>(loop_order)});
  r.edge_values.assign(t.edge_count(), std::nullopt);
  std::vector<uint32_t> mark(t.node_count(), 0);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge ed = t.edge(e);
    const uint32_t ku = t.degree(ed.u);
    const uint32_t kv = t.degree(ed.v);
    // Common neighbors: both adjacency spans are sorted by target.
    uint32_t triangles = 0;
    {
      const auto au = t.out(ed.u);
      const auto av = t.out(ed.v);
      size_t x = 0;
      size_t y = 0;
      while (x < au.size() && y < av.size()) {
        if (au[x].to < av[y].to) {
          ++x;
        } else if (au[x].to > av[y].to) {
          ++y;
        } else {
          ++triangles;
          ++x;
          ++y;
        }
      }
    }
    if (loop_order == 3) {
      const uint32_t m = std::min(ku, kv);
      if (m < 2) continue;  // a degree-one endpoint leaves no room for loops
      r.edge_values[e] = (triangles + 1.0) / (m - 1.0);
      continue;
    }
    // Quadrilaterals u-a-b-v: mark the neighbors of v, then walk two steps
    // from u. The capacity term discounts neighbor pairs already closing
    // triangles.
    const double capacity = (ku - 1.0) * (kv - 1.0) - triangles;
    if (capacity <= 0.0) continue;
    for (const Arc& bv : t.out(ed.v)) mark[bv.to] = 1;
    uint32_t quads = 0;
    for (const Arc& ua : t.out(ed.u)) {
      const NodeId a = ua.to;
      if (a == ed.v) continue;
      for (const Arc& ab : t.out(a)) {
        const NodeId b = ab.to;
        if (b != ed.u && b != ed.v && b != a && mark[b] != 0) ++quads;
      }
    }
    for (const Arc& bv : t.out(ed.v)) mark[bv.to] = 0;
    r.edge_values[e] = (quads + 1.0) / capacity;
  }
  return r;
}

}  // namespace netrob
