#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

// Outcome of a bi-partitioning run. Removing the cut edges separates the two
// declared sides; the smaller side stays within `slack` nodes of the
// requested target size.
struct PartitionReport {
  std::vector<uint8_t> side;  // 0 = side A, 1 = side B
  std::vector<EdgeId> cut_edges;
  uint32_t side_a_size = 0;
  double ratio = 0.0;      // smaller side / v
  double cut_size = 0.0;   // xi
  double slack = 0.0;      // c
  double objective = 0.0;  // caller-specific; plain cut size here
};

// Fiduccia-Mattheyses bi-partitioning with gain buckets and 8 seeded
// restarts. `target_ratio` is the requested smaller-side fraction (0, 0.5];
// `balance` the permitted deviation in nodes. With balance 0 the pass may
// wander one node off target but only exactly-sized states are accepted.
PartitionReport fm_partition(const Topology& t, double target_ratio, uint32_t balance,
                             uint64_t seed);

// min over a in {0.05, 0.15, ..., 0.45} of |boundary(A)| / |A| from
// fm_partition runs with slack max(1, 0.05 v). Zero for disconnected graphs.
MetricResult cheeger_approx(const Topology& t, uint64_t seed);

// Heuristic upper bound on min_X |X| / (|A||A'|): evaluates the boundary-node
// quotient of both sides of every fm_partition run on the same ratio grid.
MetricResult sparsity_approx(const Topology& t, uint64_t seed);

// Cut size of an even split of the h-hop environment of node i (undefined for
// environments below two nodes). On directed graphs the environment follows
// policy-compliant reachability. The global variant averages over all nodes
// and reports the mean environment size.
std::optional<double> local_delay_resilience_at(const Topology& t, NodeId i, uint32_t h,
                                                uint64_t seed, double splitting = 0.5);
MetricResult local_delay_resilience(const Topology& t, uint32_t h, uint64_t seed,
                                    double splitting = 0.5);

// p_c with 1 - p_c = (mean k^2 / mean k - 1)^-1, clamped to [0,1]; undefined
// when the degree ratio does not exceed one.
MetricResult percolation_threshold(const Topology& t);

// Probability that all `terminals` end up in one component when every edge
// fails independently with probability 1-p. Exact coefficient enumeration up
// to 20 edges, seeded Monte Carlo with a reported confidence band above.
// An empty terminal list means all nodes.
MetricResult reliability_polynomial(const Topology& t, const std::vector<NodeId>& terminals,
                                    double p, uint64_t seed = 0);

// Per-edge count of edges it dominates in the deletion/contraction
// reliability order (higher count = more important). Exact, so e <= 20.
std::vector<uint32_t> reliability_edge_ranking(const Topology& t,
                                               const std::vector<NodeId>& terminals);

// R_F = sum_{i=2}^{v-1} k(i) / (v-2) where k(i) is the fraction of i-node
// removals that disconnect the remaining graph (a single remaining node
// counts as connected). Exact up to 16 nodes, sampled above.
MetricResult partition_resilience_factor(const Topology& t, uint64_t seed = 0);

// Component census of the graph as it stands.
struct DisconnectionStats {
  uint32_t component_count = 0;
  double largest_fraction = 0.0;
  double mean_component_size = 0.0;
  // (class c, fraction of nodes in components of size <= 10^c), ascending c
  std::vector<std::pair<double, double>> class_frequency;
  double reachability = 0.0;  // fraction of ordered pairs joined by a path
};

DisconnectionStats disconnection_stats(const Topology& t);

}  // namespace netrob
