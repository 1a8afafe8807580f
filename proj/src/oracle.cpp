#include "netrob/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

namespace netrob {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// component orders of the subgraph induced by the set bits of mask
std::vector<std::uint32_t> component_orders(const Topology& t, std::uint32_t mask) {
  std::vector<std::uint32_t> sizes;
  std::uint32_t seen = 0;
  const std::uint32_t v = t.node_count();
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < v; ++s) {
    std::uint32_t bit = 1u << s;
    if (!(mask & bit) || (seen & bit)) continue;
    std::uint32_t size = 0;
    stack.push_back(s);
    seen |= bit;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      ++size;
      for (const Arc& a : t.out(x)) {
        std::uint32_t b = 1u << a.to;
        if ((mask & b) && !(seen & b)) {
          seen |= b;
          stack.push_back(a.to);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

// edges crossing between mask and its complement
std::uint32_t boundary_edges(const Topology& t, std::uint32_t mask) {
  std::uint32_t cut = 0;
  for (const Edge& e : t.edges()) {
    bool a = mask & (1u << e.u);
    bool b = mask & (1u << e.v);
    if (a != b) ++cut;
  }
  return cut;
}

struct EdgeDsu {
  std::vector<NodeId> parent;
  explicit EdgeDsu(std::uint32_t v) : parent(v) {
    for (NodeId i = 0; i < v; ++i) parent[i] = i;
  }
  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(NodeId a, NodeId b) { parent[find(a)] = find(b); }
};

// component node/edge orders after deleting the edges in drop_mask
void components_after_edge_drop(const Topology& t, std::uint32_t drop_mask,
                                std::vector<std::uint32_t>& node_sizes,
                                std::vector<std::uint32_t>& edge_sizes) {
  const std::uint32_t v = t.node_count();
  EdgeDsu dsu(v);
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (!(drop_mask & (1u << e))) dsu.unite(t.edge(e).u, t.edge(e).v);
  std::vector<std::uint32_t> node_count(v, 0), edge_count(v, 0);
  for (NodeId i = 0; i < v; ++i) ++node_count[dsu.find(i)];
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (!(drop_mask & (1u << e))) ++edge_count[dsu.find(t.edge(e).u)];
  node_sizes.clear();
  edge_sizes.clear();
  for (NodeId i = 0; i < v; ++i) {
    if (node_count[i]) {
      node_sizes.push_back(node_count[i]);
      edge_sizes.push_back(edge_count[i]);
    }
  }
}

MetricResult scalar_result(const char* key, Codomain cd, double value) {
  MetricResult r;
  r.key = key;
  r.kind = MetricKind::GlobalScalar;
  r.scope = MetricScope::Global;
  r.mode = MetricMode::WorstCase;
  r.codomain = cd;
  r.value = value;
  return r;
}

MetricResult undefined_result(const char* key, std::string why) {
  MetricResult r = MetricResult::undefined(key, MetricKind::GlobalScalar,
                                           std::move(why));
  r.mode = MetricMode::WorstCase;
  return r;
}

}  // namespace

const char* oracle_problem_name(OracleProblem p) {
  switch (p) {
    case OracleProblem::MinVertexCut: return "min_vertex_cut";
    case OracleProblem::MinEdgeCut: return "min_edge_cut";
    case OracleProblem::Toughness: return "toughness";
    case OracleProblem::Integrity: return "integrity";
    case OracleProblem::ScatteringNumber: return "scattering_number";
    case OracleProblem::Tenacity: return "tenacity";
    case OracleProblem::EdgeTenacity: return "edge_tenacity";
    case OracleProblem::MixedTenacity: return "mixed_tenacity";
    case OracleProblem::RatioOfDisruption: return "ratio_of_disruption";
    case OracleProblem::CheegerConstant: return "cheeger_constant";
    case OracleProblem::Sparsity: return "sparsity";
    case OracleProblem::MinMDegree: return "min_m_degree";
    case OracleProblem::ReliabilityAllTerminal: return "reliability_all_terminal";
    case OracleProblem::PartitionResilience: return "partition_resilience";
  }
  return "?";
}

MetricResult brute_force_oracle(const Topology& t, OracleProblem problem,
                                const OracleOptions& options) {
  if (t.directed())
    throw TopologyError("oracle needs an undirected topology");
  const std::uint32_t v = t.node_count();
  const std::uint32_t e = t.edge_count();
  if (v > options.node_cap)
    throw TopologyError("oracle refuses " + std::to_string(v) + " nodes (cap " +
                        std::to_string(options.node_cap) + ")");
  const bool edge_problem = problem == OracleProblem::ReliabilityAllTerminal ||
                            problem == OracleProblem::EdgeTenacity ||
                            problem == OracleProblem::MixedTenacity;
  if (edge_problem && e > options.edge_cap)
    throw TopologyError("oracle refuses " + std::to_string(e) + " edges (cap " +
                        std::to_string(options.edge_cap) + ")");

  const char* key = oracle_problem_name(problem);
  const std::uint32_t full = (v >= 32) ? 0xffffffffu : ((1u << v) - 1);

  switch (problem) {
    case OracleProblem::MinVertexCut: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      if (component_orders(t, full).size() > 1)
        return scalar_result(key, Codomain::nonneg(), 0.0);
      std::uint32_t best = UINT32_MAX;
      for (std::uint32_t removed = 1; removed < full; ++removed) {
        std::uint32_t kept = full & ~removed;
        if (std::popcount(kept) < 2) continue;
        if (component_orders(t, kept).size() > 1)
          best = std::min(best, static_cast<std::uint32_t>(std::popcount(removed)));
      }
      if (best == UINT32_MAX) {
        // complete graph: classical convention v-1, flagged
        MetricResult r = scalar_result(key, Codomain::nonneg(), v - 1.0);
        r.extras.emplace_back("no_disconnecting_set", 1.0);
        return r;
      }
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::MinEdgeCut: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      if (component_orders(t, full).size() > 1)
        return scalar_result(key, Codomain::nonneg(), 0.0);
      // global min edge cut = min boundary over proper node subsets
      std::uint32_t best = UINT32_MAX;
      for (std::uint32_t side = 1; side < full; side += 2) {
        // fix node 0 on the left side; complements covered implicitly
        best = std::min(best, boundary_edges(t, side));
      }
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::Toughness:
    case OracleProblem::ScatteringNumber:
    case OracleProblem::Tenacity: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      double best_tough = kInf, best_scatter = -kInf, best_ten = kInf;
      bool found = false;
      for (std::uint32_t removed = 0; removed < full; ++removed) {
        std::uint32_t kept = full & ~removed;
        auto sizes = component_orders(t, kept);
        if (sizes.size() < 2) continue;
        found = true;
        double s = std::popcount(removed);
        double omega = static_cast<double>(sizes.size());
        double m = *std::max_element(sizes.begin(), sizes.end());
        best_tough = std::min(best_tough, s / omega);
        best_scatter = std::max(best_scatter, omega - s);
        best_ten = std::min(best_ten, (s + m) / omega);
      }
      if (!found)
        return undefined_result(key, "no disconnecting vertex set (complete graph)");
      double out = problem == OracleProblem::Toughness ? best_tough
                   : problem == OracleProblem::ScatteringNumber ? best_scatter
                                                                : best_ten;
      Codomain cd = problem == OracleProblem::ScatteringNumber
                        ? Codomain::any()
                        : Codomain::nonneg();
      return scalar_result(key, cd, out);
    }

    case OracleProblem::Integrity: {
      double best = kInf;
      for (std::uint32_t removed = 0; removed <= full; ++removed) {
        std::uint32_t kept = full & ~removed;
        auto sizes = component_orders(t, kept);
        double m = sizes.empty() ? 0.0
                                 : *std::max_element(sizes.begin(), sizes.end());
        best = std::min(best, std::popcount(removed) + m);
      }
      return scalar_result(key, Codomain::range(1, v), best);
    }

    case OracleProblem::EdgeTenacity:
    case OracleProblem::MixedTenacity: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      double best = kInf;
      bool found = false;
      const std::uint64_t lim = 1ull << e;
      std::vector<std::uint32_t> ns, es;
      for (std::uint64_t drop = 0; drop < lim; ++drop) {
        components_after_edge_drop(t, static_cast<std::uint32_t>(drop), ns, es);
        if (ns.size() < 2) continue;
        found = true;
        double omega = static_cast<double>(ns.size());
        double cost = static_cast<double>(std::popcount(drop));
        if (problem == OracleProblem::EdgeTenacity) {
          std::size_t arg = std::max_element(ns.begin(), ns.end()) - ns.begin();
          best = std::min(best, (cost + es[arg]) / omega);
        } else {
          double m = *std::max_element(ns.begin(), ns.end());
          best = std::min(best, (cost + m) / omega);
        }
      }
      if (!found) return undefined_result(key, "cannot disconnect by edge removal");
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::RatioOfDisruption: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      double best = -kInf;
      for (std::uint32_t side = 1; side < full; ++side) {
        std::uint32_t a = std::popcount(side);
        if (a > v / 2) continue;
        std::uint32_t cut = boundary_edges(t, side);
        if (cut == 0)
          return undefined_result(key, "separable side with empty boundary");
        double q = static_cast<double>(a) /
                   (static_cast<double>(cut) * static_cast<double>(v - a));
        best = std::max(best, q);
      }
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::CheegerConstant: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      double best = kInf;
      for (std::uint32_t side = 1; side < full; ++side) {
        std::uint32_t a = std::popcount(side);
        if (2 * a > v) continue;
        double q = static_cast<double>(boundary_edges(t, side)) / a;
        best = std::min(best, q);
      }
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::Sparsity: {
      if (v < 2) return undefined_result(key, "needs at least two nodes");
      double best = kInf;
      for (std::uint32_t x = 0; x < full; ++x) {
        std::uint32_t kept = full & ~x;
        if (std::popcount(kept) < 2) continue;
        auto sizes = component_orders(t, kept);
        if (sizes.size() < 2) continue;
        // best split of whole components into two sides maximizes |A||A'|
        std::uint32_t total = 0;
        for (std::uint32_t s : sizes) total += s;
        std::vector<std::uint8_t> reach(total + 1, 0);
        reach[0] = 1;
        for (std::uint32_t s : sizes)
          for (std::uint32_t acc = total; acc >= s; --acc)
            if (reach[acc - s]) reach[acc] = 1;
        std::uint32_t prod_best = 0;
        for (std::uint32_t acc = 1; acc < total; ++acc)
          if (reach[acc]) prod_best = std::max(prod_best, acc * (total - acc));
        if (prod_best == 0) continue;
        best = std::min(best, static_cast<double>(std::popcount(x)) / prod_best);
      }
      if (best == kInf)
        return undefined_result(key, "no separator exists (complete graph)");
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::MinMDegree: {
      if (options.m < 1 || options.m >= v)
        return undefined_result(key, "subset size must be in [1, v-1]");
      std::uint32_t best = UINT32_MAX;
      for (std::uint32_t side = 1; side < full; ++side) {
        if (std::popcount(side) != static_cast<int>(options.m)) continue;
        best = std::min(best, boundary_edges(t, side));
      }
      return scalar_result(key, Codomain::nonneg(), best);
    }

    case OracleProblem::ReliabilityAllTerminal: {
      if (options.p < 0.0 || options.p > 1.0)
        return undefined_result(key, "p must be in [0,1]");
      // a_j = number of edge subsets of size j that keep all nodes connected
      std::vector<double> coeff(e + 1, 0.0);
      const std::uint64_t lim = 1ull << e;
      std::vector<std::uint32_t> ns, es;
      for (std::uint64_t up = 0; up < lim; ++up) {
        std::uint32_t drop = static_cast<std::uint32_t>(~up) &
                             ((e >= 32) ? 0xffffffffu : ((1u << e) - 1));
        components_after_edge_drop(t, drop, ns, es);
        if (ns.size() == 1) coeff[std::popcount(up)] += 1.0;
      }
      double value = 0.0;
      for (std::uint32_t j = 0; j <= e; ++j)
        value += coeff[j] * std::pow(options.p, j) *
                 std::pow(1.0 - options.p, static_cast<double>(e - j));
      MetricResult r = scalar_result(key, Codomain::unit(), value);
      r.kind = MetricKind::GlobalScalar;
      for (std::uint32_t j = 0; j <= e; ++j)
        r.curve.emplace_back(static_cast<double>(j), coeff[j]);
      return r;
    }

    case OracleProblem::PartitionResilience: {
      if (v < 3) return undefined_result(key, "needs at least three nodes");
      // k(i): fraction of i-subsets whose removal disconnects; one surviving
      // node counts as connected
      double sum = 0.0;
      std::vector<double> k_of(v, 0.0);
      std::vector<double> total(v, 0.0);
      for (std::uint32_t removed = 1; removed < full; ++removed) {
        std::uint32_t i = std::popcount(removed);
        if (i < 2 || i > v - 2) continue;  // i = v-1 leaves one node: connected
        total[i] += 1.0;
        std::uint32_t kept = full & ~removed;
        if (component_orders(t, kept).size() > 1) k_of[i] += 1.0;
      }
      MetricResult r = scalar_result(key, Codomain::unit(), 0.0);
      for (std::uint32_t i = 2; i + 1 < v; ++i) {
        double frac = total[i] > 0 ? k_of[i] / total[i] : 0.0;
        sum += frac;
        r.curve.emplace_back(static_cast<double>(i), frac);
      }
      r.value = sum / (v - 2.0);
      return r;
    }
  }
  throw TopologyError("unknown oracle problem");
}

}  // namespace netrob
