#include "netrob/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

#include "netrob/components.hpp"

namespace netrob {

namespace {

constexpr std::uint32_t kInfCap = 0x3fffffff;

// small adjacency-list max-flow (Edmonds-Karp)
struct FlowNet {
  struct E {
    std::uint32_t to, cap, rev;
  };
  std::vector<std::vector<E>> g;

  explicit FlowNet(std::uint32_t n) : g(n) {}

  void add(std::uint32_t a, std::uint32_t b, std::uint32_t cap,
           std::uint32_t rcap = 0) {
    g[a].push_back({b, cap, static_cast<std::uint32_t>(g[b].size())});
    g[b].push_back({a, rcap, static_cast<std::uint32_t>(g[a].size() - 1)});
  }

  std::uint32_t run(std::uint32_t s, std::uint32_t t, std::uint32_t stop_at) {
    std::uint32_t flow = 0;
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    std::vector<std::int32_t> pv(n), pe(n);
    while (flow < stop_at) {
      std::fill(pv.begin(), pv.end(), -1);
      std::deque<std::uint32_t> q{s};
      pv[s] = static_cast<std::int32_t>(s);
      while (!q.empty() && pv[t] < 0) {
        std::uint32_t x = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < g[x].size(); ++i) {
          const E& e = g[x][i];
          if (e.cap > 0 && pv[e.to] < 0) {
            pv[e.to] = static_cast<std::int32_t>(x);
            pe[e.to] = static_cast<std::int32_t>(i);
            q.push_back(e.to);
          }
        }
      }
      if (pv[t] < 0) break;
      std::uint32_t push = kInfCap;
      for (std::uint32_t x = t; x != s; x = static_cast<std::uint32_t>(pv[x]))
        push = std::min(push, g[pv[x]][pe[x]].cap);
      for (std::uint32_t x = t; x != s; x = static_cast<std::uint32_t>(pv[x])) {
        E& e = g[pv[x]][pe[x]];
        e.cap -= push;
        g[x][e.rev].cap += push;
      }
      flow += push;
    }
    return flow;
  }
};

std::uint32_t vertex_flow(const Topology& t, NodeId s, NodeId d,
                          std::uint32_t stop_at) {
  const std::uint32_t v = t.node_count();
  // i_in = i, i_out = i + v; interior nodes have unit capacity
  FlowNet net(2 * v);
  for (NodeId i = 0; i < v; ++i)
    net.add(i, i + v, (i == s || i == d) ? kInfCap : 1);
  for (const Edge& e : t.edges()) {
    net.add(e.u + v, e.v, kInfCap);
    net.add(e.v + v, e.u, kInfCap);
  }
  return net.run(s + v, d, stop_at);
}

}  // namespace

std::uint32_t vertex_connectivity(const Topology& t) {
  const Topology u = t.directed() ? t.undirected_view() : t;
  const std::uint32_t v = u.node_count();
  if (v < 2) throw TopologyError("vertex connectivity needs at least two nodes");
  if (!is_connected(u)) return 0;

  std::uint32_t delta = UINT32_MAX;
  NodeId min_node = 0;
  for (NodeId i = 0; i < v; ++i) {
    if (u.degree(i) < delta) {
      delta = u.degree(i);
      min_node = i;
    }
  }
  (void)min_node;
  std::uint32_t best = v - 1;  // complete-graph convention
  // a minimum separator misses at least one of any delta+1 sources
  std::uint32_t sources = std::min(v, delta + 1);
  for (NodeId s = 0; s < sources; ++s) {
    for (NodeId d = 0; d < v; ++d) {
      if (d == s || u.has_edge(std::min(s, d), std::max(s, d))) continue;
      best = std::min(best, vertex_flow(u, s, d, best));
    }
  }
  return best;
}

std::uint32_t edge_connectivity(const Topology& t) {
  const Topology u = t.directed() ? t.undirected_view() : t;
  const std::uint32_t v = u.node_count();
  if (v < 2) throw TopologyError("edge connectivity needs at least two nodes");
  if (!is_connected(u)) return 0;

  std::uint32_t best = UINT32_MAX;
  for (NodeId d = 1; d < v; ++d) {
    FlowNet net(v);
    for (const Edge& e : u.edges()) net.add(e.u, e.v, 1, 1);
    best = std::min(best, net.run(0, d, best));
  }
  return best;
}

}  // namespace netrob
