#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "netrob/betweenness.hpp"
#include "netrob/challenge.hpp"
#include "netrob/rng.hpp"
#include "netrob/throughput.hpp"
#include "challenge_internal.hpp"

namespace netrob {
namespace {

constexpr std::uint64_t kLoadStream = 17;

std::vector<double> load_vector(const Topology& g, const CascadeRule& rule,
                                std::uint64_t seed, std::uint32_t wave) {
  if (rule.load == CascadeLoad::Betweenness) {
    return brandes_betweenness(g).node;
  }
  const EffectiveLoad el = effective_load(g, rule.load_fraction, rule.load_ensembles,
                                          substream(seed, kLoadStream + wave));
  return el.node_mean;
}

// strict exceedance with a small relative guard against summation jitter
bool overloaded(double load, double capacity) {
  return load > capacity + 1e-9 * std::max(1.0, std::abs(capacity));
}

}  // namespace

ChallengeTrace run_cascade(const Topology& t, const ChallengeScenario& scenario) {
  const CascadeRule& rule = scenario.cascade;
  const std::uint32_t v = t.node_count();
  if (rule.trigger >= v) throw TopologyError("cascade trigger out of range");

  const std::vector<double> base_load = load_vector(t, rule, scenario.seed, 0);
  std::vector<double> caps;
  if (!rule.capacities.empty()) {
    if (rule.capacities.size() != v) {
      throw TopologyError("capacity vector must cover every node");
    }
    caps = rule.capacities;
  } else {
    if (rule.alpha < 0.0) throw TopologyError("alpha must be nonnegative");
    caps.resize(v);
    for (NodeId i = 0; i < v; ++i) caps[i] = (1.0 + rule.alpha) * base_load[i];
  }
  for (NodeId i = 0; i < v; ++i) {
    if (overloaded(base_load[i], caps[i])) {
      throw TopologyError("baseline overload: node " + std::to_string(i) +
                          " already exceeds its capacity");
    }
  }

  detail::ChallengeState st;
  st.init(t, scenario, false);
  st.record({rule.trigger}, {});

  std::uint32_t wave = 0;
  while (st.alive_nodes > 0) {
    const std::vector<double> loads =
        load_vector(st.current, rule, scenario.seed, wave + 1);
    std::vector<NodeId> failing;
    for (std::uint32_t i = 0; i < loads.size(); ++i) {
      if (overloaded(loads[i], caps[st.old_node[i]])) {
        failing.push_back(st.old_node[i]);
      }
    }
    if (failing.empty()) break;
    ++wave;
    st.trace.avalanche_size += static_cast<std::uint32_t>(failing.size());
    st.record(std::move(failing), {});
  }
  st.trace.waves = wave;
  return st.finish();
}

}  // namespace netrob
