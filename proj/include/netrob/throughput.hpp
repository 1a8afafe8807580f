#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class BetweennessTarget { Node, Edge };

// Shortest-path betweenness over unordered pairs (Brandes); weighted mode
// counts shortest reciprocal-weight paths.
MetricResult betweenness_centrality(const Topology& t, BetweennessTarget target,
                                    bool weighted = false);

// Per-viewpoint path-count centrality BC_(i)(u), trimmed mean over viewpoints
// after dropping the floor(alpha*n) lowest and highest scores per node. An
// empty viewpoint set means every node observes.
MetricResult as_hegemony(const Topology& t, const std::vector<NodeId>& viewpoints,
                         double alpha);

// Mean shortfall of pair-normalized betweenness against the most central
// node; 0 on perfectly decentralized graphs, 1 on a star.
MetricResult central_point_dominance(const Topology& t);

// Expected path-count load when only a sampled fraction of ordered pairs
// communicates. Loads count full shortest-path multiplicity per pair.
struct EffectiveLoad {
  std::vector<double> node_mean;
  std::vector<double> edge_mean;
  std::vector<double> node_stderr;  // over ensembles
  std::vector<double> edge_stderr;
  std::uint32_t ensembles = 0;
  std::uint64_t pairs_per_ensemble = 0;
};

EffectiveLoad effective_load(const Topology& t, double a_fraction, std::uint32_t ensembles,
                             std::uint64_t seed);

// Capacity vector C_u = (1 + alpha) * B_u from intact-network betweenness.
std::vector<double> motter_lai_capacities(const Topology& t, double alpha);

// Gravity-flow throughput: flows x_ij = rho * y_i * y_j on one deterministic
// shortest path per pair, rho maximized under router capacities b. Routers on
// a path carry the flow endpoints included unless transit_only is set.
MetricResult performance(const Topology& t, const std::vector<double>& demands,
                         const std::vector<double>& capacities, bool transit_only = false);

// Link-constrained throughput degradation along a node-removal sequence,
// normalized so T_G(0) = 1; the value is the trapezoid integral of T_G over
// the removed fraction. Stops early when a removal disconnects the graph.
MetricResult elasticity(const Topology& t, const std::vector<NodeId>& removal_sequence);

struct AgentMeasure {
  double normal = 0.0;
  double fault = 0.0;
  double min_operational = 0.0;
};

struct ImpactReport {
  std::vector<double> cif;
  double sif = 0.0;
  std::uint32_t abnormal = 0;
};

// CIF = |M_norm - M_fault| / |M_norm - M_min| per agent; SIF = fraction of
// agents whose CIF strictly exceeds the threshold.
ImpactReport vulnerability_impact_factors(const std::vector<AgentMeasure>& agents,
                                          double threshold);

struct Demand {
  NodeId src = 0;
  NodeId dst = 0;
  double amount = 1.0;
};

struct FailureModel {
  std::vector<double> node_p;  // empty means nodes never fail
  std::vector<double> edge_p;  // empty means links never fail
};

enum class FailureScope {
  Exhaustive,  // every failure combination (exact up to a size cap, then MC)
  SingleOnly,  // condition on exactly one prone entity failing
};

struct Survivability {
  std::vector<std::pair<double, double>> distribution;  // (x, S(x)), ascending x
  double expected = 0.0;                                // E[X]
  bool baseline_overload = false;  // intact network cannot carry all demands
  std::uint64_t events = 0;
  bool exact = true;
};

// Share of delivered data flow under random entity failures. Demands are
// routed one at a time on the min-hop path with free capacity; link weights
// act as capacities. Exact enumeration while the prone-entity count stays
// small, Monte Carlo beyond that.
Survivability survivability_failures(const Topology& t, const std::vector<Demand>& demands,
                                     const FailureModel& fm,
                                     FailureScope scope = FailureScope::Exhaustive,
                                     std::uint32_t samples = 100000, std::uint64_t seed = 0);

}  // namespace netrob
