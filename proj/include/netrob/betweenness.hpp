#pragma once

#include <vector>

#include "netrob/topology.hpp"

namespace netrob {

// Shortest-path betweenness accumulated over all (or a subset of) source
// nodes. On undirected graphs totals are halved so that every unordered pair
// counts once; on directed graphs ordered pairs count once each. Path
// endpoints do not contribute to node scores.
struct Betweenness {
  std::vector<double> node;
  std::vector<double> edge;
};

// use_weights routes along minimum total 1/w length instead of hop count.
// `sources` restricts the accumulation to the given source nodes (partial
// betweenness); null means all nodes.
Betweenness brandes_betweenness(const Topology& t, bool use_weights = false,
                                const std::vector<NodeId>* sources = nullptr);

}  // namespace netrob
