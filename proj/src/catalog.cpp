#include "netrob/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "netrob/adjacency.hpp"
#include "netrob/clustering.hpp"
#include "netrob/community.hpp"
#include "netrob/components.hpp"
#include "netrob/connectivity.hpp"
#include "netrob/distance.hpp"
#include "netrob/maxflow.hpp"
#include "netrob/oracle.hpp"
#include "netrob/rng.hpp"
#include "netrob/spectral.hpp"
#include "netrob/throughput.hpp"

namespace netrob {
namespace {

std::vector<std::optional<double>> wrap(const std::vector<double>& xs) {
  return {xs.begin(), xs.end()};
}

std::optional<double> mean_defined(const std::vector<std::optional<double>>& xs) {
  double sum = 0.0;
  std::uint64_t n = 0;
  for (const auto& x : xs) {
    if (x) {
      sum += *x;
      ++n;
    }
  }
  if (!n) return std::nullopt;
  return sum / static_cast<double>(n);
}

MetricResult scalar_result(double x) {
  MetricResult r;
  r.value = x;
  return r;
}

MetricResult node_result(std::vector<std::optional<double>> vals) {
  MetricResult r;
  r.kind = MetricKind::PerNode;
  r.value = mean_defined(vals);
  r.node_values = std::move(vals);
  return r;
}

MetricResult edge_result(std::vector<std::optional<double>> vals) {
  MetricResult r;
  r.kind = MetricKind::PerEdge;
  r.value = mean_defined(vals);
  r.edge_values = std::move(vals);
  return r;
}

MetricResult dist_result(std::vector<std::pair<double, double>> curve) {
  MetricResult r;
  r.kind = MetricKind::Distribution;
  r.curve = std::move(curve);
  return r;
}

MetricResult oracle_result(const Topology& t, OracleProblem problem,
                           const MetricOptions& opts) {
  OracleOptions oo;
  oo.m = opts.subset_size;
  oo.p = opts.reliability_p;
  return brute_force_oracle(t, problem, oo);
}

MetricResult clustering_result(const Topology& t, ClusteringVariant variant) {
  return clustering_coefficient(t, variant);
}

CommunityAssignment spectral_division(const Topology& t) {
  return detect_communities_spectral(t);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> es;
  es.reserve(100);
  auto add = [&es](CatalogEntry e) { es.push_back(std::move(e)); };

  add({.key = "degree",
       .name = "Node degree",
       .family = "degree",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, v-1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const DegreeView dv = degree_metrics(t);
         MetricResult r = node_result(wrap(dv.degree));
         r.value = dv.mean_degree;
         r.extras = {{"mean_square", dv.mean_square_degree},
                     {"stdev", dv.degree_stdev}};
         return r;
       }});
  add({.key = "degree_distribution",
       .name = "Degree frequency distribution",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         const DegreeView dv = degree_metrics(t);
         MetricResult r = dist_result(dv.degree_dist);
         r.value = dv.mean_degree;
         return r;
       }});
  add({.key = "strength",
       .name = "Node strength",
       .family = "degree",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .needs_weights = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return node_result(wrap(degree_metrics(t).strength));
       }});
  add({.key = "strength_distribution",
       .name = "Strength distribution",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .needs_weights = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return dist_result(degree_metrics(t).strength_dist);
       }});
  add({.key = "degree_entropy",
       .name = "Degree distribution entropy",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, ln(v-1)]",
       .compute = [](const Topology& t, const MetricOptions&) {
         double h_max = 0.0;
         MetricResult r = scalar_result(degree_entropy(t, &h_max));
         r.extras = {{"h_max", h_max}};
         if (h_max > 0.0) r.extras.push_back({"normalized", *r.value / h_max});
         return r;
       }});
  add({.key = "skewness",
       .name = "Degree skewness",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "(0, 1]",
       .compute = [](const Topology& t, const MetricOptions& o) {
         return scalar_result(skewness(t, o.seed));
       }});
  add({.key = "vulnerability_function",
       .name = "Degree vulnerability function",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(vulnerability_function(t));
       }});
  add({.key = "assortativity",
       .name = "Assortative coefficient",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[-1, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         const std::optional<double> r = assortative_coefficient(t);
         if (!r) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          "endpoint degrees are all equal");
         }
         return scalar_result(*r);
       }});
  add({.key = "neighbor_connectivity",
       .name = "Average neighbor connectivity",
       .family = "degree",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, v-1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const NeighborConnectivity nc = neighbor_connectivity(t, t.weighted());
         MetricResult r = node_result(nc.per_node);
         r.curve = nc.by_degree;
         return r;
       }});
  add({.key = "rich_club",
       .name = "Rich-club connectivity",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions& o) {
         const RichClub rc = rich_club(t, false, o.seed);
         MetricResult r = dist_result(t.weighted() ? rc.phi_weighted : rc.phi);
         return r;
       }});
  add({.key = "rich_club_normalized",
       .name = "Rich-club connectivity against degree-preserving null model",
       .family = "degree",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return dist_result(rich_club(t, true, o.seed).rho);
       }});
  add({.key = "edge_degree",
       .name = "Edge degree",
       .family = "degree",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, v-1]",
       .per_edge = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         MetricResult r = edge_result(wrap(edge_degree_min(t)));
         const std::vector<double> prod = edge_degree_product(t);
         double peak = 0.0;
         for (const double x : prod) peak = std::max(peak, x);
         if (!prod.empty()) r.extras = {{"max_degree_product", peak}};
         return r;
       }});

  add({.key = "clustering_local",
       .name = "Local clustering coefficient",
       .family = "clustering",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::WattsLocal);
       }});
  add({.key = "clustering_global",
       .name = "Mean clustering coefficient",
       .family = "clustering",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::GlobalAvg);
       }});
  add({.key = "clustering_triangle",
       .name = "Triangle-ratio clustering coefficient",
       .family = "clustering",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::GlobalTriangle);
       }});
  add({.key = "soffer_clustering_local",
       .name = "Degree-bias-corrected local clustering",
       .family = "clustering",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::SofferLocal);
       }});
  add({.key = "soffer_clustering_global",
       .name = "Degree-bias-corrected mean clustering",
       .family = "clustering",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::SofferGlobal);
       }});
  add({.key = "weighted_clustering_barrat",
       .name = "Weighted clustering coefficient (strength-shared)",
       .family = "clustering",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .needs_weights = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::BarratWeighted);
       }});
  add({.key = "weighted_clustering_onnela",
       .name = "Weighted clustering coefficient (triangle intensity)",
       .family = "clustering",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .needs_weights = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::OnnelaWeighted);
       }});
  add({.key = "weighted_clustering_opsahl",
       .name = "Weighted clustering coefficient (triplet value)",
       .family = "clustering",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .needs_weights = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_coefficient(t, ClusteringVariant::OpsahlTau,
                                       TripletValue::Arithmetic);
       }});
  add({.key = "directed_clustering",
       .name = "Directed transitivity",
       .family = "clustering",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .directed_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return clustering_result(t, ClusteringVariant::WassermanDirected);
       }});
  add({.key = "edge_clustering",
       .name = "Edge clustering coefficient",
       .family = "clustering",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .per_edge = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return edge_clustering_coefficient(t);
       }});

  add({.key = "modularity",
       .name = "Modularity of the detected division",
       .family = "community",
       .scope = "global",
       .mode = "static",
       .codomain = "[-1, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(spectral_division(t).q);
       }});
  add({.key = "communities_spectral",
       .name = "Modularity-matrix community division",
       .family = "community",
       .scope = "global",
       .mode = "static",
       .codomain = "community ids",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const CommunityAssignment a = spectral_division(t);
         MetricResult r;
         r.kind = MetricKind::PerNode;
         for (const std::uint32_t c : a.community) r.node_values.push_back(c);
         r.value = a.q;
         r.extras = {{"communities", static_cast<double>(a.community_count)}};
         return r;
       }});
  add({.key = "communities_girvan_newman",
       .name = "Edge-betweenness community division",
       .family = "community",
       .scope = "global",
       .mode = "static",
       .codomain = "community ids",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         const CommunityAssignment a =
             detect_communities_edge_betweenness(t, std::nullopt, o.seed);
         MetricResult r;
         r.kind = MetricKind::PerNode;
         for (const std::uint32_t c : a.community) r.node_values.push_back(c);
         r.value = a.q;
         r.extras = {{"communities", static_cast<double>(a.community_count)}};
         return r;
       }});
  add({.key = "module_zscore",
       .name = "Within-module degree z-score",
       .family = "community",
       .scope = "local",
       .mode = "static",
       .codomain = "unbounded",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const CommunityAssignment a = spectral_division(t);
         MetricResult r = node_result(wrap(zscore_within_module(t, a)));
         r.extras = {{"communities", static_cast<double>(a.community_count)}};
         return r;
       }});
  add({.key = "participation",
       .name = "Participation coefficient",
       .family = "community",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const CommunityAssignment a = spectral_division(t);
         MetricResult r = node_result(participation_coefficient(t, a));
         r.extras = {{"communities", static_cast<double>(a.community_count)}};
         return r;
       }});

  add({.key = "vertex_connectivity",
       .name = "Vertex connectivity",
       .family = "connectivity",
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, v-1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(vertex_connectivity(t));
       }});
  add({.key = "edge_connectivity",
       .name = "Edge connectivity",
       .family = "connectivity",
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, v-1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(edge_connectivity(t));
       }});
  add({.key = "cheeger",
       .name = "Cheeger constant (spectral sweep bound)",
       .family = "connectivity",
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return cheeger_approx(t, o.seed);
       }});
  add({.key = "sparsity",
       .name = "Cut sparsity (spectral sweep bound)",
       .family = "connectivity",
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return sparsity_approx(t, o.seed);
       }});
  add({.key = "min_m_degree",
       .name = "Minimum m-degree",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, e]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::MinMDegree, o);
       }});
  add({.key = "fm_partition",
       .name = "Balanced bi-partition (Fiduccia-Mattheyses)",
       .family = "connectivity",
       .scope = "global",
       .mode = "worst-case",
       .codomain = "cut size",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         const std::uint32_t v = t.node_count();
         const auto balance =
             std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::llround(0.05 * v)));
         const PartitionReport p = fm_partition(t, 0.5, balance, o.seed);
         MetricResult r;
         r.kind = MetricKind::PerNode;
         for (const std::uint32_t s : p.side) r.node_values.push_back(s);
         r.value = p.cut_size;
         r.extras = {{"ratio", p.ratio},
                     {"side_a", static_cast<double>(p.side_a_size)},
                     {"slack", static_cast<double>(p.slack)},
                     {"objective", p.objective}};
         return r;
       }});
  add({.key = "ratio_of_disruption",
       .name = "Ratio of disruption",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::RatioOfDisruption, o);
       }});
  add({.key = "local_delay_resilience",
       .name = "Local delay resilience",
       .family = "connectivity",
       .scope = "local",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return local_delay_resilience(t, o.resilience_hops, o.seed);
       }});
  add({.key = "toughness",
       .name = "Toughness",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::Toughness, o);
       }});
  add({.key = "integrity",
       .name = "Integrity",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[1, v]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::Integrity, o);
       }});
  add({.key = "scattering_number",
       .name = "Scattering number",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "unbounded",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::ScatteringNumber, o);
       }});
  add({.key = "tenacity",
       .name = "Tenacity",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::Tenacity, o);
       }});
  add({.key = "edge_tenacity",
       .name = "Edge tenacity",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::EdgeTenacity, o);
       }});
  add({.key = "mixed_tenacity",
       .name = "Mixed tenacity",
       .family = "connectivity",
       .status = MetricStatus::OracleOnly,
       .scope = "global",
       .mode = "worst-case",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return oracle_result(t, OracleProblem::MixedTenacity, o);
       }});
  add({.key = "percolation_threshold",
       .name = "Percolation threshold (Molloy-Reed estimate)",
       .family = "connectivity",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return percolation_threshold(t);
       }});
  add({.key = "reliability",
       .name = "All-terminal reliability",
       .family = "connectivity",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return reliability_polynomial(t, {}, o.reliability_p, o.seed);
       }});
  add({.key = "partition_resilience",
       .name = "Partition resilience factor",
       .family = "connectivity",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return partition_resilience_factor(t, o.seed);
       }});
  add({.key = "component_count",
       .name = "Number of connected components",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, v]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(disconnection_stats(t).component_count);
       }});
  add({.key = "largest_component_fraction",
       .name = "Fraction of nodes in the largest component",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(disconnection_stats(t).largest_fraction);
       }});
  add({.key = "mean_component_size",
       .name = "Mean component size",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, v]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(disconnection_stats(t).mean_component_size);
       }});
  add({.key = "component_class_frequency",
       .name = "Component count share per decimal size class",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         const ComponentReport comp = components(t);
         std::vector<double> per_class;
         for (const std::uint32_t size : comp.sizes) {
           std::uint32_t c = 1;
           std::uint64_t bound = 10;
           while (size > bound) {
             ++c;
             bound *= 10;
           }
           if (per_class.size() < c) per_class.resize(c, 0.0);
           per_class[c - 1] += 1.0;
         }
         std::vector<std::pair<double, double>> curve;
         for (std::size_t c = 0; c < per_class.size(); ++c) {
           if (per_class[c] > 0.0) {
             curve.push_back({static_cast<double>(c + 1), per_class[c] / comp.count});
           }
         }
         return dist_result(std::move(curve));
       }});
  add({.key = "component_class_nodes",
       .name = "Node share per decimal component size class",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return dist_result(disconnection_stats(t).class_frequency);
       }});
  add({.key = "reachability",
       .name = "Reachability",
       .family = "connectivity",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return scalar_result(disconnection_stats(t).reachability);
       }});

  add({.key = "aspl",
       .name = "Average shortest path length",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, v-1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return aspl(t, AsplMode::FiniteOnly);
       }});
  add({.key = "aspl_giant",
       .name = "Average shortest path length on the largest component",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, v-1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return aspl(t, AsplMode::GiantComponent);
       }});
  add({.key = "dik",
       .name = "Diameter-inverse-K",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, inf)",
       .compute = [](const Topology& t, const MetricOptions&) {
         return aspl(t, AsplMode::Dik);
       }});
  add({.key = "diameter",
       .name = "Diameter",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, v-1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return diameter(t);
       }});
  add({.key = "global_efficiency",
       .name = "Global network efficiency",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return global_efficiency(t);
       }});
  add({.key = "harmonic_mean_distance",
       .name = "Harmonic mean of geodesic distances",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, inf]",
       .compute = [](const Topology& t, const MetricOptions&) {
         return harmonic_mean_distance(t);
       }});
  add({.key = "local_efficiency",
       .name = "Local network efficiency",
       .family = "distance",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return local_efficiency(t);
       }});
  add({.key = "cyclic_coefficient",
       .name = "Cyclic coefficient",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1/3]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return cyclic_coefficient(t);
       }});
  add({.key = "characteristic_path_length",
       .name = "Characteristic path length between node classes",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, v-1]",
       .needs_labels = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const CplReport rep = characteristic_path_length(t, t.label_of());
         MetricResult r;
         double sum = 0.0;
         std::uint32_t n = 0;
         for (std::uint32_t i = 0; i < rep.class_count; ++i) {
           for (std::uint32_t j = 0; j < rep.class_count; ++j) {
             const auto m = rep.at(i, j);
             if (!m) continue;
             sum += *m;
             ++n;
             r.extras.push_back({"mean_" + std::to_string(i) + "_" + std::to_string(j), *m});
           }
         }
         if (!n) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          "no class pair is connected");
         }
         r.value = sum / n;
         r.extras.push_back({"classes", static_cast<double>(rep.class_count)});
         return r;
       }});
  add({.key = "expansion",
       .name = "Hop-ball expansion",
       .family = "distance",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return expansion(t, o.expansion_hops, t.directed());
       }});
  add({.key = "expansion_exponent",
       .name = "Hop-ball growth exponent",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .compute = [](const Topology& t, const MetricOptions&) {
         return expansion_exponent(t);
       }});
  add({.key = "effective_eccentricity",
       .name = "Effective eccentricity",
       .family = "distance",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, v-1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return effective_eccentricity(t, o.eccentricity_coverage);
       }});
  add({.key = "effective_diameter",
       .name = "Effective diameter",
       .family = "distance",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, v-1]",
       .compute = [](const Topology& t, const MetricOptions& o) {
         return effective_diameter(t, o.eccentricity_coverage);
       }});

  add({.key = "betweenness",
       .name = "Node betweenness centrality",
       .family = "throughput",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, (v-1)(v-2)/2]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return betweenness_centrality(t, BetweennessTarget::Node);
       }});
  add({.key = "edge_betweenness",
       .name = "Edge betweenness centrality",
       .family = "throughput",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, v(v-1)/2]",
       .per_edge = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return betweenness_centrality(t, BetweennessTarget::Edge);
       }});
  add({.key = "as_hegemony",
       .name = "Trimmed-mean path hegemony",
       .family = "throughput",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         return as_hegemony(t, {}, o.hegemony_trim);
       }});
  add({.key = "central_point_dominance",
       .name = "Central point dominance",
       .family = "throughput",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return central_point_dominance(t);
       }});
  add({.key = "effective_load",
       .name = "Effective load under partial utilization",
       .family = "throughput",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         const EffectiveLoad el =
             effective_load(t, o.load_fraction, o.load_ensembles, o.seed);
         MetricResult r = node_result(wrap(el.node_mean));
         r.edge_values = wrap(el.edge_mean);
         r.extras = {{"ensembles", static_cast<double>(el.ensembles)},
                     {"pairs_per_ensemble", static_cast<double>(el.pairs_per_ensemble)}};
         return r;
       }});
  add({.key = "performance",
       .name = "Throughput performance under node demands",
       .family = "throughput",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .needs_node_weights = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         std::vector<double> w(t.node_count());
         for (NodeId i = 0; i < t.node_count(); ++i) w[i] = t.node_weight(i);
         return performance(t, w, w);
       }});
  add({.key = "elasticity",
       .name = "Elasticity under random node removal",
       .family = "throughput",
       .scope = "global",
       .mode = "dynamic",
       .codomain = "[0, 1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         std::vector<NodeId> order(t.node_count());
         std::iota(order.begin(), order.end(), 0);
         Rng rng(substream(o.seed, 0x5e));
         rng.shuffle(order);
         return elasticity(t, order);
       }});
  add({.key = "vulnerability_impact_factors",
       .name = "Component and service impact factors",
       .family = "throughput",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, 1]",
       .compute = [](const Topology&, const MetricOptions&) {
         return MetricResult::undefined(
             "", MetricKind::GlobalScalar,
             "needs per-agent service measurements; see the library interface");
       }});
  add({.key = "survivability",
       .name = "Delivered-flow survivability under random failures",
       .family = "throughput",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, 1]",
       .compute = [](const Topology& t, const MetricOptions& o) {
         const std::uint32_t v = t.node_count();
         if (v < 2) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          "needs at least two nodes");
         }
         if (v > 64) {
           return MetricResult::undefined(
               "", MetricKind::GlobalScalar,
               "all-pairs demand matrix too large; supply explicit demands via the library interface");
         }
         std::vector<Demand> demands;
         for (NodeId i = 0; i < v; ++i) {
           for (NodeId j = t.directed() ? 0 : i + 1; j < v; ++j) {
             if (i != j) demands.push_back({i, j, 1.0});
           }
         }
         FailureModel fm;
         fm.edge_p.assign(t.edge_count(), o.failure_probability);
         const Survivability s = survivability_failures(t, demands, fm,
                                                        FailureScope::Exhaustive,
                                                        2000, o.seed);
         MetricResult r;
         r.kind = MetricKind::Distribution;
         r.curve = s.distribution;
         r.value = s.expected;
         r.extras = {{"events", static_cast<double>(s.events)},
                     {"exact", s.exact ? 1.0 : 0.0}};
         return r;
       }});

  add({.key = "eigenvector_centrality",
       .name = "Eigenvector centrality",
       .family = "spectral",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, 1]",
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return eigenvector_centrality(t);
       }});
  add({.key = "symmetry_ratio",
       .name = "Symmetry ratio",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return symmetry_ratio(t);
       }});
  add({.key = "spectral_clusters",
       .name = "Spectral cluster identification",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "cluster ids",
       .compute = [](const Topology& t, const MetricOptions&) {
         const SpectralClusterReport rep = spectral_clusters(t);
         MetricResult r;
         r.kind = MetricKind::PerNode;
         for (const std::uint32_t c : rep.assignment.community) r.node_values.push_back(c);
         r.value = rep.assignment.community_count;
         std::uint32_t accepted = 0;
         for (const auto& c : rep.candidates) accepted += c.accepted ? 1 : 0;
         r.extras = {{"modularity", rep.assignment.q},
                     {"accepted_splits", static_cast<double>(accepted)}};
         return r;
       }});
  add({.key = "algebraic_connectivity",
       .name = "Algebraic connectivity",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, v]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return algebraic_connectivity(t);
       }});
  add({.key = "good_expansion",
       .name = "Good-expansion test (odd subgraph centrality)",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "{0, 1}",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const ExpansionTestReport rep = good_expansion_test(t);
         MetricResult r = node_result(wrap(rep.residuals));
         r.value = rep.good_expansion ? 1.0 : 0.0;
         r.extras = {{"slope", rep.slope},
                     {"intercept", rep.intercept},
                     {"target_intercept", rep.target_intercept},
                     {"r2", rep.r2},
                     {"delta", rep.delta},
                     {"flagged", static_cast<double>(rep.flagged.size())}};
         return r;
       }});
  add({.key = "spanning_trees",
       .name = "Spanning tree count (natural log)",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const SpanningTreeReport rep = spanning_tree_count(t);
         if (!std::isfinite(rep.log_count)) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          "disconnected graph has no spanning trees");
         }
         MetricResult r = scalar_result(rep.log_count);
         r.extras = {{"log10_count", rep.log_count / std::log(10.0)},
                     {"exact", rep.exact_available ? 1.0 : 0.0}};
         return r;
       }});
  add({.key = "natural_connectivity",
       .name = "Natural connectivity",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, v-1]",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return natural_connectivity(t);
       }});
  add({.key = "random_walk_aspl",
       .name = "Random-walk average path length",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[1, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return random_walk_aspl(t);
       }});
  add({.key = "current_flow_closeness",
       .name = "Current-flow closeness",
       .family = "spectral",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return current_flow_closeness(t);
       }});
  add({.key = "random_walk_betweenness",
       .name = "Random-walk betweenness",
       .family = "spectral",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return random_walk_betweenness(t);
       }});
  add({.key = "current_flow_betweenness",
       .name = "Current-flow betweenness",
       .family = "spectral",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return current_flow_betweenness(t);
       }});
  add({.key = "network_criticality",
       .name = "Network criticality",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return network_criticality(t);
       }});
  add({.key = "traffic_aware_criticality",
       .name = "Traffic-aware network criticality",
       .family = "spectral",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, inf)",
       .undirected_only = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const std::size_t v = t.node_count();
         std::vector<double> gamma(v * v, 1.0);
         for (std::size_t i = 0; i < v; ++i) gamma[i * v + i] = 0.0;
         return traffic_aware_criticality(t, gamma);
       }});

  add({.key = "distance_strength",
       .name = "Distance strength",
       .family = "geographic",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .needs_coords = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return distance_strength_outreach(t).strength;
       }});
  add({.key = "outreach",
       .name = "Outreach",
       .family = "geographic",
       .scope = "local",
       .mode = "static",
       .codomain = "[0, inf)",
       .needs_coords = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return distance_strength_outreach(t).outreach;
       }});
  add({.key = "geo_survivability",
       .name = "Survivability under geographic events",
       .family = "geographic",
       .scope = "global",
       .mode = "failures",
       .codomain = "[0, 1]",
       .needs_coords = true,
       .compute = [](const Topology&, const MetricOptions&) {
         return MetricResult::undefined(
             "", MetricKind::GlobalScalar,
             "needs failure event definitions; run an attack with geographic events");
       }});
  add({.key = "pointwise_vulnerability",
       .name = "Pointwise vulnerability (efficiency loss per node)",
       .family = "geographic",
       .scope = "local",
       .mode = "dynamic",
       .codomain = "(-inf, 1]",
       .needs_coords = true,
       .per_node = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         return pointwise_vulnerability(t);
       }});
  add({.key = "global_vulnerability",
       .name = "Global vulnerability (largest efficiency loss)",
       .family = "geographic",
       .scope = "global",
       .mode = "dynamic",
       .codomain = "(-inf, 1]",
       .needs_coords = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         MetricResult pv = pointwise_vulnerability(t);
         if (!pv.defined()) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          pv.undefined_reason);
         }
         MetricResult r = scalar_result(*pv.value);
         return r;
       }});
  add({.key = "vulnerability_variance",
       .name = "Relative variance of pointwise vulnerability",
       .family = "geographic",
       .scope = "global",
       .mode = "dynamic",
       .codomain = "[0, inf)",
       .needs_coords = true,
       .compute = [](const Topology& t, const MetricOptions&) {
         const MetricResult pv = pointwise_vulnerability(t);
         if (!pv.defined()) {
           return MetricResult::undefined("", MetricKind::GlobalScalar,
                                          pv.undefined_reason);
         }
         for (const auto& [k, x] : pv.extras) {
           if (k == "relative_variance") return scalar_result(x);
         }
         return MetricResult::undefined("", MetricKind::GlobalScalar,
                                        "vulnerability mean is zero");
       }});
  add({.key = "path_diversity",
       .name = "Total graph geodiversity",
       .family = "geographic",
       .scope = "global",
       .mode = "static",
       .codomain = "[0, 1]",
       .needs_coords = true,
       .compute = [](const Topology& t, const MetricOptions& o) {
         const GeoDiversity gd = tggd(t, o.geo);
         MetricResult r = scalar_result(gd.tggd);
         r.extras = {{"ctggd", gd.ctggd},
                     {"pairs", static_cast<double>(gd.pairs)}};
         return r;
       }});

  add({.key = "multilevel_hierarchies",
       .name = "Layered multilevel graph hierarchies",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});
  add({.key = "generator_fidelity",
       .name = "Topology generator fidelity beyond the bundled ER, BA and WS models",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});
  add({.key = "bgp_measurement",
       .name = "Live BGP data collection and measurement",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});
  add({.key = "network_epidemics",
       .name = "Epidemic spreading processes",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});
  add({.key = "traffic_matrix_clustering",
       .name = "Traffic-matrix SVD link clustering",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});
  add({.key = "interacting_networks",
       .name = "Interacting-network robustness",
       .family = "out-of-scope",
       .status = MetricStatus::OutOfScope,
       .scope = "-",
       .mode = "-",
       .codomain = "-",
       .compute = {}});

  return es;
}

const std::unordered_map<std::string, std::size_t>& catalog_index() {
  static const std::unordered_map<std::string, std::size_t> index = [] {
    std::unordered_map<std::string, std::size_t> m;
    const auto& es = metric_catalog();
    for (std::size_t i = 0; i < es.size(); ++i) m.emplace(es[i].key, i);
    return m;
  }();
  return index;
}

}  // namespace

const std::vector<CatalogEntry>& metric_catalog() {
  static const std::vector<CatalogEntry> es = build_catalog();
  return es;
}

const CatalogEntry* find_metric(const std::string& key) {
  const auto& index = catalog_index();
  const auto it = index.find(key);
  if (it == index.end()) return nullptr;
  return &metric_catalog()[it->second];
}

std::string incompatibility(const CatalogEntry& e, const Topology& t) {
  if (e.status == MetricStatus::OutOfScope) return "out of scope";
  if (e.undirected_only && t.directed()) return "needs an undirected graph";
  if (e.directed_only && !t.directed()) return "needs a directed graph";
  if (e.needs_weights && !t.weighted()) return "needs edge weights";
  if (e.needs_coords && !t.has_coords()) return "needs node coordinates";
  if (e.needs_labels && !t.has_labels()) return "needs node labels";
  if (e.needs_node_weights && !t.has_node_weights()) return "needs node weights";
  return "";
}

MetricResult compute_metric(const std::string& key, const Topology& t,
                            const MetricOptions& opts) {
  const CatalogEntry* e = find_metric(key);
  if (!e) throw TopologyError("unknown metric key: " + key);
  const std::string why = incompatibility(*e, t);
  if (!why.empty()) {
    return MetricResult::undefined(e->key, MetricKind::GlobalScalar, why);
  }
  if (!e->compute) {
    return MetricResult::undefined(e->key, MetricKind::GlobalScalar,
                                   "no direct computation for this entry");
  }
  try {
    MetricResult r = e->compute(t, opts);
    r.key = e->key;
    return r;
  } catch (const TopologyError& err) {
    return MetricResult::undefined(e->key, MetricKind::GlobalScalar, err.what());
  }
}

const char* metric_status_name(MetricStatus s) {
  switch (s) {
    case MetricStatus::Implemented: return "implemented";
    case MetricStatus::OracleOnly: return "oracle-only";
    case MetricStatus::OutOfScope: return "out-of-scope";
  }
  return "unknown";
}

}  // namespace netrob
