#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class ClusteringVariant {
  WattsLocal,            // C_i = e(V_i) / (k_i(k_i-1)/2), per node
  GlobalAvg,             // mean C_i over nodes with k_i > 1
  GlobalTriangle,        // C_Delta = 3 * triangles / triplets
  SofferLocal,           // c~_i = e(V_i) / omega_i, per node
  SofferGlobal,          // mean c~_i over nodes with omega_i > 0
  SofferGlobalTriangle,  // sum e(V_i) / sum omega_i
  BarratWeighted,        // weight of triangle-closing neighbor ties at i
  OnnelaWeighted,        // geometric mean of normalized triangle weights
  OpsahlTau,             // global weighted triplet ratio, needs a TripletValue
  WassermanDirected,     // directed triplet ratio (i->j->k closed by i->k)
};

// How a two-edge triplet is valued from its link weights.
enum class TripletValue { Arithmetic, Geometric, Max, Min };

// Per-node capacity bound for neighbor interconnection. `upper` is the
// stub-counting bound Omega_i = floor(1/2 * sum_j min(k_j-1, k_i-1)); `refined`
// tightens it by greedily packing a simple graph within those stub budgets,
// never dropping below the edges e(V_i) actually present.
struct SofferOmega {
  std::vector<double> upper;
  std::vector<double> refined;
};

SofferOmega soffer_omega(const Topology& t);

// Local variants yield per-node results (undefined entries where the
// coefficient does not apply), global variants a scalar. `tau` is required for
// OpsahlTau and optional for WassermanDirected on weighted graphs (defaults to
// the plain triplet count on unweighted ones).
MetricResult clustering_coefficient(const Topology& t, ClusteringVariant variant,
                                    std::optional<TripletValue> tau = std::nullopt);

// Per-edge coefficient (loops of the given order through the edge, plus one,
// over the maximum attainable count). loop_order 3 counts triangles, 4 counts
// quadrilaterals; edges whose denominator vanishes are undefined.
MetricResult edge_clustering_coefficient(const Topology& t, uint32_t loop_order = 3);

}  // namespace netrob
