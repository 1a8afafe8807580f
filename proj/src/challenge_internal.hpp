#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "netrob/catalog.hpp"
#include "netrob/challenge.hpp"
#include "netrob/components.hpp"
#include "netrob/topology.hpp"

namespace netrob::detail {

// Removal bookkeeping against the original topology. Metrics run on the
// rebuilt `current` graph; the trace reports original ids and denominates
// fractions in the original entity counts.
struct ChallengeState {
  const Topology* base = nullptr;
  const ChallengeScenario* scenario = nullptr;
  MetricOptions opts;
  bool edge_strategy = false;

  std::vector<std::uint8_t> node_alive;
  std::vector<std::uint8_t> edge_alive;
  std::uint32_t alive_nodes = 0;
  std::uint32_t alive_edges = 0;

  Topology current;
  std::vector<NodeId> old_node;  // current node id -> original node id
  std::vector<EdgeId> old_edge;  // current edge id -> original edge id

  std::vector<double> schedule;  // sorted snapshot fractions
  std::size_t next_mark = 0;

  ChallengeTrace trace;

  void init(const Topology& t, const ChallengeScenario& sc, bool edges) {
    base = &t;
    scenario = &sc;
    opts = sc.options;
    opts.seed = sc.seed;
    edge_strategy = edges;
    node_alive.assign(t.node_count(), 1);
    edge_alive.assign(t.edge_count(), 1);
    alive_nodes = t.node_count();
    alive_edges = t.edge_count();
    current = t;
    old_node.resize(t.node_count());
    for (NodeId i = 0; i < t.node_count(); ++i) old_node[i] = i;
    old_edge.resize(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) old_edge[e] = e;
    schedule = sc.schedule;
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
    trace.baseline = snapshot_tracked();
    trace.baseline_largest = largest_fraction();
  }

  double fraction_removed() const {
    if (edge_strategy) {
      const double total = static_cast<double>(base->edge_count());
      return total == 0.0 ? 0.0 : (total - alive_edges) / total;
    }
    const double total = static_cast<double>(base->node_count());
    return (total - alive_nodes) / total;
  }

  double largest_fraction() const {
    if (alive_nodes == 0) return 0.0;
    return static_cast<double>(components(current).largest_size()) / base->node_count();
  }

  bool due_for_snapshot(double fraction) {
    if (schedule.empty()) return true;
    bool due = false;
    while (next_mark < schedule.size() && fraction >= schedule[next_mark] - 1e-12) {
      due = true;
      ++next_mark;
    }
    return due;
  }

  // Pair-denominated metrics keep the original node count as denominator so
  // their curves are comparable across steps and stay defined down to the
  // empty survivor set.
  std::optional<double> denominated(const std::string& key) const {
    const double ov = static_cast<double>(base->node_count());
    const double cv = static_cast<double>(alive_nodes);
    if (key == "largest_component_fraction") return largest_fraction();
    if (key != "reachability" && key != "global_efficiency") return std::nullopt;
    if (ov < 2.0) return alive_nodes == base->node_count() ? 1.0 : 0.0;
    if (alive_nodes < 2) return 0.0;
    const double ratio = (cv * (cv - 1.0)) / (ov * (ov - 1.0));
    const MetricResult r = compute_metric(key, current, opts);
    return *r.value * ratio;
  }

  std::vector<TrackedValue> snapshot_tracked() {
    std::vector<TrackedValue> out;
    out.reserve(scenario->tracked.size());
    for (const std::string& key : scenario->tracked) {
      TrackedValue tv;
      tv.key = key;
      std::string reason;
      if (const std::optional<double> x = denominated(key)) {
        tv.value = x;
      } else if (alive_nodes == 0) {
        if (!find_metric(key)) throw TopologyError("unknown metric key: " + key);
        reason = "all nodes removed";
      } else {
        const MetricResult r = compute_metric(key, current, opts);
        if (r.defined() && r.value) {
          tv.value = r.value;
        } else if (r.defined()) {
          reason = "metric has no scalar summary";
        } else {
          reason = r.undefined_reason;
        }
      }
      if (!tv.value) {
        if (!scenario->allow_undefined && alive_nodes != base->node_count()) {
          throw TopologyError("tracked metric '" + key +
                              "' became undefined during the run (" + reason +
                              "); set allow_undefined to record it");
        }
        if (!scenario->allow_undefined && alive_nodes == base->node_count()) {
          throw TopologyError("tracked metric '" + key +
                              "' is undefined on the input (" + reason +
                              "); set allow_undefined to record it");
        }
        tv.note = reason;
      }
      out.push_back(std::move(tv));
    }
    return out;
  }

  void rebuild() {
    if (edge_strategy) {
      std::vector<bool> drop(base->edge_count());
      old_edge.clear();
      for (EdgeId e = 0; e < base->edge_count(); ++e) {
        drop[e] = !edge_alive[e];
        if (edge_alive[e]) old_edge.push_back(e);
      }
      current = base->without_edges(drop);
      return;
    }
    if (alive_nodes == 0) return;  // guards skip the unusable graph
    std::vector<bool> keep(base->node_count());
    for (NodeId i = 0; i < base->node_count(); ++i) keep[i] = node_alive[i] != 0;
    current = base->induced(keep, &old_node);
  }

  void record(std::vector<NodeId> removed_nodes, std::vector<EdgeId> removed_edges) {
    for (const NodeId i : removed_nodes) {
      node_alive[i] = 0;
      --alive_nodes;
    }
    for (const EdgeId e : removed_edges) {
      edge_alive[e] = 0;
      --alive_edges;
    }
    rebuild();
    if (!edge_strategy) alive_edges = alive_nodes == 0 ? 0 : current.edge_count();

    ChallengeStep step;
    step.removed_nodes = std::move(removed_nodes);
    step.removed_edges = std::move(removed_edges);
    step.fraction = fraction_removed();
    step.largest_fraction = largest_fraction();
    if (due_for_snapshot(step.fraction)) {
      step.snapshotted = true;
      step.snapshot = snapshot_tracked();
    }
    trace.steps.push_back(std::move(step));
  }

  ChallengeTrace finish() {
    trace.final_fraction = trace.steps.empty() ? 0.0 : trace.steps.back().fraction;
    trace.final_largest =
        trace.steps.empty() ? trace.baseline_largest : trace.steps.back().largest_fraction;
    trace.remaining_nodes = alive_nodes;
    trace.remaining_edges = alive_edges;
    return std::move(trace);
  }
};

}  // namespace netrob::detail
