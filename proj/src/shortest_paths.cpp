#include "netrob/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace netrob {

DistanceView shortest_paths(const Topology& t, NodeId source, bool use_weights) {
  const std::uint32_t v = t.node_count();
  if (source >= v) throw TopologyError("source node out of range");

  DistanceView d;
  d.source = source;
  d.dist.assign(v, 0.0);
  d.reach.assign(v, 0);
  d.hops.assign(v, 0);

  if (!t.weighted() || !use_weights) {
    std::deque<NodeId> q;
    d.reach[source] = 1;
    q.push_back(source);
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop_front();
      for (const Arc& a : t.out(x)) {
        if (!d.reach[a.to]) {
          d.reach[a.to] = 1;
          d.hops[a.to] = d.hops[x] + 1;
          d.dist[a.to] = static_cast<double>(d.hops[a.to]);
          q.push_back(a.to);
        }
      }
    }
    return d;
  }

  // Dijkstra; edge length is the reciprocal weight, so heavier links are
  // shorter. Ties resolve identically regardless of heap order because we
  // settle each node once at its final distance.
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<std::uint8_t> done(v, 0);
  d.dist[source] = 0.0;
  d.reach[source] = 1;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [dist, x] = pq.top();
    pq.pop();
    if (done[x]) continue;
    done[x] = 1;
    for (const Arc& a : t.out(x)) {
      double nd = dist + 1.0 / t.weight(a.edge);
      if (!d.reach[a.to] || nd < d.dist[a.to]) {
        d.dist[a.to] = nd;
        d.reach[a.to] = 1;
        d.hops[a.to] = d.hops[x] + 1;
        pq.push({nd, a.to});
      }
    }
  }
  return d;
}

std::vector<NodeId> ball(const Topology& t, NodeId source, std::uint32_t max_hops) {
  std::vector<std::uint8_t> seen(t.node_count(), 0);
  std::vector<NodeId> out{source};
  seen[source] = 1;
  std::deque<std::pair<NodeId, std::uint32_t>> q{{source, 0}};
  while (!q.empty()) {
    auto [x, h] = q.front();
    q.pop_front();
    if (h == max_hops) continue;
    for (const Arc& a : t.out(x)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        out.push_back(a.to);
        q.push_back({a.to, h + 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistanceView shortest_paths_reverse_hops(const Topology& t, NodeId source) {
  const std::uint32_t v = t.node_count();
  DistanceView d;
  d.source = source;
  d.dist.assign(v, 0.0);
  d.reach.assign(v, 0);
  d.hops.assign(v, 0);
  std::deque<NodeId> q;
  d.reach[source] = 1;
  q.push_back(source);
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop_front();
    auto arcs = t.directed() ? t.in(x) : t.out(x);
    for (const Arc& a : arcs) {
      if (!d.reach[a.to]) {
        d.reach[a.to] = 1;
        d.hops[a.to] = d.hops[x] + 1;
        d.dist[a.to] = static_cast<double>(d.hops[a.to]);
        q.push_back(a.to);
      }
    }
  }
  return d;
}

std::vector<std::vector<double>> policy_distance_matrix(const Topology& t) {
  const std::uint32_t v = t.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> up(v);
  for (NodeId i = 0; i < v; ++i) {
    DistanceView d = shortest_paths(t, i, false);
    up[i].assign(v, inf);
    for (NodeId c = 0; c < v; ++c)
      if (d.reachable(c)) up[i][c] = static_cast<double>(d.hops[c]);
  }
  std::vector<std::vector<double>> out(v, std::vector<double>(v, inf));
  for (NodeId i = 0; i < v; ++i) {
    for (NodeId j = 0; j < v; ++j) {
      if (i == j) {
        out[i][j] = 0;
        continue;
      }
      double best = inf;
      for (NodeId c = 0; c < v; ++c) {
        double s = up[i][c] + up[j][c];
        if (s < best) best = s;
      }
      out[i][j] = best;
    }
  }
  return out;
}

std::vector<NodeId> min_hop_path(const Topology& t, NodeId from, NodeId to) {
  if (from == to) return {from};
  DistanceView d = shortest_paths(t, from, false);
  if (!d.reachable(to)) return {};
  // walk back picking the lowest-id predecessor on a shortest path; arcs are
  // sorted by target id so the first hit is the lowest
  std::vector<NodeId> rpath{to};
  NodeId x = to;
  while (x != from) {
    auto preds = t.directed() ? t.in(x) : t.out(x);
    NodeId best = UINT32_MAX;
    for (const Arc& a : preds) {
      if (d.reachable(a.to) && d.hops[a.to] + 1 == d.hops[x]) {
        best = a.to;
        break;
      }
    }
    x = best;
    rpath.push_back(x);
  }
  std::reverse(rpath.begin(), rpath.end());
  return rpath;
}

}  // namespace netrob
