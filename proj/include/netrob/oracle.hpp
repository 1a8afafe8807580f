#pragma once

#include <cstdint>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class OracleProblem {
  MinVertexCut,
  MinEdgeCut,
  Toughness,
  Integrity,
  ScatteringNumber,
  Tenacity,
  EdgeTenacity,
  MixedTenacity,
  RatioOfDisruption,
  CheegerConstant,
  Sparsity,
  MinMDegree,
  ReliabilityAllTerminal,
  PartitionResilience,
};

struct OracleOptions {
  std::uint32_t m = 1;       // subset size for MinMDegree
  double p = 0.5;            // edge up-probability for ReliabilityAllTerminal
  std::uint32_t node_cap = 12;
  std::uint32_t edge_cap = 20;  // edge-subset enumerations (reliability, *tenacity)
};

// Exhaustive-enumeration reference values on small undirected graphs. Refuses
// inputs above the caps; worst-case metrics that have no witness on the given
// graph (e.g. toughness of a complete graph) come back individually undefined
// rather than as errors.
MetricResult brute_force_oracle(const Topology& t, OracleProblem problem,
                                const OracleOptions& options = {});

const char* oracle_problem_name(OracleProblem p);

}  // namespace netrob
