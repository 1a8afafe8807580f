#pragma once

#include <cstdint>
#include <vector>

#include "netrob/topology.hpp"

namespace netrob {

// Single-source distances. Unreachable nodes are flagged, never encoded as a
// large in-band value. For weighted graphs the length of an edge is 1/w (heavy
// edges are short); for unweighted graphs distances equal hop counts exactly.
struct DistanceView {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<std::uint8_t> reach;
  std::vector<std::uint32_t> hops;

  bool reachable(NodeId i) const { return reach[i] != 0; }
  double distance(NodeId i) const { return dist[i]; }
};

// follows arc direction on directed graphs
DistanceView shortest_paths(const Topology& t, NodeId source, bool use_weights = true);

// hop-limited BFS ball around source (includes the source at hop 0)
std::vector<NodeId> ball(const Topology& t, NodeId source, std::uint32_t max_hops);

// reverse-direction BFS hop counts on directed graphs
DistanceView shortest_paths_reverse_hops(const Topology& t, NodeId source);

// provider/customer compliant distance: min over common destinations c of
// directed-hops(i->c) + directed-hops(j->c); undirected graphs fall back to
// plain hops. Row for a fixed i against all j. O(v * (v+e)) per call site that
// precomputes all rows; intended for desk-scale policy graphs.
std::vector<std::vector<double>> policy_distance_matrix(const Topology& t);

// deterministic min-hop path (lowest-id predecessor tie-break), empty if
// unreachable; includes both endpoints
std::vector<NodeId> min_hop_path(const Topology& t, NodeId from, NodeId to);

}  // namespace netrob
