#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class AsplMode { FiniteOnly, GiantComponent, Dik };

// Mean shortest-path length over reachable ordered pairs. GiantComponent
// restricts both endpoints to the largest component; Dik divides the finite
// mean by the connected-pair fraction K, so the value keeps growing as the
// graph falls apart instead of shrinking. Weighted distances sum reciprocal
// edge weights along the path.
MetricResult aspl(const Topology& t, AsplMode mode, bool use_weights = false);

// Max distance over reachable pairs; flags the presence of unreachable pairs
// instead of reporting infinity.
MetricResult diameter(const Topology& t, bool use_weights = false);

// E_i = sum_{j != i} 1/d(i,j) / (v-1); unreachable pairs contribute zero.
MetricResult global_efficiency(const Topology& t, bool use_weights = false);
MetricResult harmonic_mean_distance(const Topology& t, bool use_weights = false);

// Efficiency among each node's neighbors measured after the node itself
// fails; undefined below degree 2.
MetricResult local_efficiency(const Topology& t, bool use_weights = false);

// Smallest-loop variant: a neighbor pair at distance d in G - {i} closes a
// loop of size d + 2 through i, scored as 1/(d+2).
MetricResult cyclic_coefficient(const Topology& t);

// Mean distances between label classes; unreachable pairs are excluded and
// the covered fraction reported per class pair.
struct CplReport {
  std::uint32_t class_count = 0;
  std::vector<std::optional<double>> mean;  // row-major class_count x class_count
  std::vector<double> coverage;             // finite-pair fraction, same layout

  std::optional<double> at(std::uint32_t qi, std::uint32_t qj) const {
    return mean[qi * class_count + qj];
  }
  double coverage_at(std::uint32_t qi, std::uint32_t qj) const {
    return coverage[qi * class_count + qj];
  }
};

CplReport characteristic_path_length(const Topology& t,
                                     const std::vector<std::uint32_t>& labels,
                                     bool use_weights = false);

// Fraction of the graph reachable within h hops, E(h)_i = |{j : d(i,j) <= h,
// j != i}| / v. With directed_policy set, reachability follows
// provider/customer compliant paths.
MetricResult expansion(const Topology& t, std::uint32_t h, bool directed_policy = false);

// Log-log least-squares exponent of the E(h) growth curve, per node and for
// the global mean curve; diagnostic companion to expansion().
MetricResult expansion_exponent(const Topology& t);

// Smallest h whose h-hop environment N(i,h) covers fraction r of everything
// node i can reach. N counts the node itself, so N(i,0) = 1.
MetricResult effective_eccentricity(const Topology& t, double r);
MetricResult effective_diameter(const Topology& t, double r);

}  // namespace netrob
