#include "netrob/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <vector>

namespace netrob {
namespace {

struct Pred {
  NodeId node;
  EdgeId edge;
};

// Equality of path lengths up to accumulated rounding; exact for hop counts
// and rational weights alike in practice.
bool same_length(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Betweenness brandes_betweenness(const Topology& t, bool use_weights,
                                const std::vector<NodeId>* sources) {
  const uint32_t v = t.node_count();
  Betweenness out;
  out.node.assign(v, 0.0);
  out.edge.assign(t.edge_count(), 0.0);
  if (v == 0) return out;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(v);
  std::vector<double> sigma(v);
  std::vector<double> delta(v);
  std::vector<std::vector<Pred>> preds(v);
  std::vector<NodeId> order;
  order.reserve(v);

  std::vector<NodeId> all;
  if (sources == nullptr) {
    all.resize(v);
    for (NodeId i = 0; i < v; ++i) all[i] = i;
  }
  const std::vector<NodeId>& src = sources ? *sources : all;

  for (const NodeId s : src) {
    dist.assign(v, inf);
    sigma.assign(v, 0.0);
    delta.assign(v, 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    dist[s] = 0.0;
    sigma[s] = 1.0;

    if (!use_weights) {
      std::deque<NodeId> queue{s};
      while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (const Arc& a : t.out(u)) {
          if (dist[a.to] == inf) {
            dist[a.to] = dist[u] + 1.0;
            queue.push_back(a.to);
          }
          if (same_length(dist[a.to], dist[u] + 1.0)) {
            sigma[a.to] += sigma[u];
            preds[a.to].push_back({u, a.edge});
          }
        }
      }
    } else {
      using Item = std::pair<double, NodeId>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
      std::vector<uint8_t> done(v, 0);
      heap.push({0.0, s});
      while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = 1;
        order.push_back(u);
        for (const Arc& a : t.out(u)) {
          const double nd = d + 1.0 / t.weight(a.edge);
          if (nd < dist[a.to] && !same_length(nd, dist[a.to])) {
            dist[a.to] = nd;
            sigma[a.to] = sigma[u];
            preds[a.to].assign(1, {u, a.edge});
            heap.push({nd, a.to});
          } else if (same_length(nd, dist[a.to])) {
            sigma[a.to] += sigma[u];
            preds[a.to].push_back({u, a.edge});
          }
        }
      }
    }

    for (size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      for (const Pred& p : preds[w]) {
        const double c = sigma[p.node] / sigma[w] * (1.0 + delta[w]);
        delta[p.node] += c;
        out.edge[p.edge] += c;
      }
      out.node[w] += delta[w];
    }
  }

  if (!t.directed()) {
    for (double& x : out.node) x *= 0.5;
    for (double& x : out.edge) x *= 0.5;
  }
  return out;
}

}  // namespace netrob
