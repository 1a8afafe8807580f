#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrob/catalog.hpp"
#include "netrob/geo.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class ChallengeKind { RandomFailure, Targeted, Geographic, Cascade };
enum class CascadeLoad { Betweenness, EffectiveLoad };

// Overload cascade parameters. Capacities default to the Motter-Lai rule
// C_u = (1 + alpha) * L_u over intact-network loads; an explicit capacity
// vector overrides alpha.
struct CascadeRule {
  double alpha = 0.5;
  std::vector<double> capacities;
  NodeId trigger = 0;
  CascadeLoad load = CascadeLoad::Betweenness;
  double load_fraction = 0.25;      // communicating pair share for EffectiveLoad
  std::uint32_t load_ensembles = 8;
};

struct ChallengeScenario {
  ChallengeKind kind = ChallengeKind::RandomFailure;

  // random failures: share of nodes to remove, or an absolute count override
  double fraction = 1.0;
  std::optional<std::uint32_t> count;

  // targeted attacks rank entities by a catalog metric; the entity type (node
  // or edge) follows the metric. Adaptive attacks recompute the ranking after
  // every removal, non-adaptive attacks fix the initial descending order.
  std::string metric = "degree";
  bool adaptive = true;

  // geographic events fire independently with their own probabilities, in
  // order; a firing event removes every surviving node inside its region as
  // one batch step
  std::vector<GeoEvent> events;

  CascadeRule cascade;

  // metric keys snapshotted at schedule fractions (every step when the
  // schedule is empty). Tracked values that become undefined mid-run abort
  // the run unless allow_undefined records them with a note instead.
  std::vector<std::string> tracked;
  std::vector<double> schedule;
  bool allow_undefined = false;

  std::uint64_t seed = 0;
  MetricOptions options;  // knobs forwarded to metric computes; seed is overridden
};

struct TrackedValue {
  std::string key;
  std::optional<double> value;
  std::string note;  // reason when the value is missing

  bool operator==(const TrackedValue&) const = default;
};

// One removal step. Ids are original-topology ids; fractions are cumulative
// shares of the original entity count (nodes, or edges for edge-targeted
// attacks). largest_fraction divides by the ORIGINAL node count so curves
// stay comparable across steps.
struct ChallengeStep {
  std::vector<NodeId> removed_nodes;
  std::vector<EdgeId> removed_edges;
  double fraction = 0.0;
  double largest_fraction = 0.0;
  bool snapshotted = false;
  std::vector<TrackedValue> snapshot;

  bool operator==(const ChallengeStep&) const = default;
};

struct ChallengeTrace {
  std::vector<TrackedValue> baseline;  // tracked metrics on the intact graph
  double baseline_largest = 1.0;
  std::vector<ChallengeStep> steps;
  double final_fraction = 0.0;
  double final_largest = 0.0;
  std::uint32_t remaining_nodes = 0;
  std::uint32_t remaining_edges = 0;
  std::uint32_t avalanche_size = 0;  // overload failures beyond the trigger
  std::uint32_t waves = 0;           // synchronous overload rounds

  bool operator==(const ChallengeTrace&) const = default;
};

// Runs one removal scenario to completion. Deterministic for a fixed
// (topology, scenario, seed); targeted ranking ties break toward the lowest
// original id. Fraction-denominated tracked metrics (largest component
// fraction, reachability, global efficiency) are rescaled to the original
// node count so they stay monotone under removals.
ChallengeTrace run_challenge(const Topology& t, const ChallengeScenario& scenario);

// Overload cascade: removes the trigger, then repeatedly drops every node
// whose recomputed load strictly exceeds its capacity, one synchronous wave
// per step, until no node is overloaded. Errors out when the intact network
// already violates a capacity.
ChallengeTrace run_cascade(const Topology& t, const ChallengeScenario& scenario);

}  // namespace netrob
