#include "netrob/challenge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "netrob/rng.hpp"
#include "challenge_internal.hpp"

namespace netrob {
namespace {

constexpr std::uint64_t kRandomStream = 11;
constexpr std::uint64_t kGeoStream = 13;

std::uint32_t removal_budget(const ChallengeScenario& sc, std::uint32_t entities) {
  if (sc.count) return std::min(*sc.count, entities);
  if (sc.fraction < 0.0 || sc.fraction > 1.0) {
    throw TopologyError("removal fraction must lie in [0, 1]");
  }
  const auto n = static_cast<std::uint32_t>(std::llround(sc.fraction * entities));
  return std::min(n, entities);
}

// value-descending order with original-id tie-break; undefined values go last
bool ranks_before(const std::optional<double>& a, NodeId ida,
                  const std::optional<double>& b, NodeId idb) {
  if (a.has_value() != b.has_value()) return a.has_value();
  if (a && b && *a != *b) return *a > *b;
  return ida < idb;
}

ChallengeTrace run_random(const Topology& t, const ChallengeScenario& sc) {
  detail::ChallengeState st;
  st.init(t, sc, false);
  const std::uint32_t budget = removal_budget(sc, t.node_count());
  std::vector<NodeId> order(t.node_count());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(substream(sc.seed, kRandomStream));
  rng.shuffle(order);
  for (std::uint32_t i = 0; i < budget; ++i) {
    st.record({order[i]}, {});
  }
  return st.finish();
}

ChallengeTrace run_targeted(const Topology& t, const ChallengeScenario& sc) {
  const CatalogEntry* entry = find_metric(sc.metric);
  if (!entry) throw TopologyError("unknown metric key: " + sc.metric);
  const bool edges = entry->per_edge;
  if (!entry->per_node && !entry->per_edge) {
    throw TopologyError("metric '" + sc.metric + "' has no per-entity values to rank by");
  }

  detail::ChallengeState st;
  st.init(t, sc, edges);
  const std::uint32_t entities = edges ? t.edge_count() : t.node_count();
  const std::uint32_t budget = removal_budget(sc, entities);

  auto ranking_values = [&](const Topology& g) {
    MetricResult r = compute_metric(sc.metric, g, st.opts);
    if (!r.defined()) {
      throw TopologyError("ranking metric '" + sc.metric + "' is undefined here (" +
                          r.undefined_reason + ")");
    }
    return edges ? std::move(r.edge_values) : std::move(r.node_values);
  };

  if (!sc.adaptive) {
    const std::vector<std::optional<double>> vals = ranking_values(t);
    std::vector<std::uint32_t> order(entities);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return ranks_before(vals[a], a, vals[b], b);
    });
    for (std::uint32_t i = 0; i < budget; ++i) {
      if (edges) {
        st.record({}, {order[i]});
      } else {
        st.record({order[i]}, {});
      }
    }
    return st.finish();
  }

  for (std::uint32_t removed = 0; removed < budget; ++removed) {
    const std::uint32_t left = edges ? st.alive_edges : st.alive_nodes;
    if (left == 0) break;
    const std::vector<std::optional<double>> vals = ranking_values(st.current);
    std::uint32_t best = 0;
    std::uint32_t best_orig = edges ? st.old_edge[0] : st.old_node[0];
    for (std::uint32_t i = 1; i < vals.size(); ++i) {
      const std::uint32_t orig = edges ? st.old_edge[i] : st.old_node[i];
      if (ranks_before(vals[i], orig, vals[best], best_orig)) {
        best = i;
        best_orig = orig;
      }
    }
    if (edges) {
      st.record({}, {best_orig});
    } else {
      st.record({best_orig}, {});
    }
  }
  return st.finish();
}

ChallengeTrace run_geographic(const Topology& t, const ChallengeScenario& sc) {
  if (!t.has_coords()) {
    throw TopologyError("geographic challenge needs node coordinates");
  }
  for (const GeoEvent& ev : sc.events) {
    if (ev.probability < 0.0 || ev.probability > 1.0) {
      throw TopologyError("event probability must lie in [0, 1]");
    }
  }
  detail::ChallengeState st;
  st.init(t, sc, false);
  Rng rng(substream(sc.seed, kGeoStream));
  for (const GeoEvent& ev : sc.events) {
    const bool fires = rng.chance(ev.probability);
    if (!fires) continue;
    std::vector<NodeId> batch;
    for (NodeId i = 0; i < t.node_count(); ++i) {
      if (st.node_alive[i] && region_contains(ev.region, t.coords()[i], t.geographic())) {
        batch.push_back(i);
      }
    }
    if (batch.empty()) continue;
    st.record(std::move(batch), {});
  }
  return st.finish();
}

}  // namespace

ChallengeTrace run_challenge(const Topology& t, const ChallengeScenario& scenario) {
  switch (scenario.kind) {
    case ChallengeKind::RandomFailure: return run_random(t, scenario);
    case ChallengeKind::Targeted: return run_targeted(t, scenario);
    case ChallengeKind::Geographic: return run_geographic(t, scenario);
    case ChallengeKind::Cascade: return run_cascade(t, scenario);
  }
  throw TopologyError("unknown challenge kind");
}

}  // namespace netrob
