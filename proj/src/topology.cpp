#include "netrob/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

namespace netrob {

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  // FNV-1a over 8-byte words
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t hash_double(std::uint64_t h, double d) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(d));
  std::memcpy(&bits, &d, sizeof(bits));
  return hash_mix(h, bits);
}

}  // namespace

Topology Topology::build(std::uint32_t node_count, bool directed,
                         std::vector<Edge> edges, std::vector<double> weights) {
  if (node_count == 0) throw TopologyError("topology needs at least one node");
  if (!weights.empty() && weights.size() != edges.size())
    throw TopologyError("weight count does not match edge count");

  Topology t;
  t.v_ = node_count;
  t.directed_ = directed;
  t.weighted_ = !weights.empty();

  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (e.u >= node_count || e.v >= node_count)
      throw TopologyError("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                          " out of range for " + std::to_string(node_count) +
                          " nodes");
    if (e.u == e.v)
      throw TopologyError("self-loop at node " + std::to_string(e.u));
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    if (t.weighted_) {
      double w = weights[i];
      if (!(w > 0.0) || !std::isfinite(w))
        throw TopologyError("edge weight must be finite and > 0, got " +
                            std::to_string(w));
    }
  }

  // reject duplicates; keep the caller's edge order as the canonical edge ids
  {
    std::vector<std::uint64_t> keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      keys[i] = (static_cast<std::uint64_t>(edges[i].u) << 32) | edges[i].v;
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      Edge e{static_cast<NodeId>(*dup >> 32),
             static_cast<NodeId>(*dup & 0xffffffffu)};
      throw TopologyError("duplicate edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v));
    }
  }

  t.edges_ = std::move(edges);
  t.weights_ = std::move(weights);
  t.rebuild_adjacency();
  return t;
}

void Topology::rebuild_adjacency() {
  out_off_.assign(v_ + 1, 0);
  if (directed_) in_off_.assign(v_ + 1, 0);

  for (const Edge& e : edges_) {
    ++out_off_[e.u + 1];
    if (directed_)
      ++in_off_[e.v + 1];
    else
      ++out_off_[e.v + 1];
  }
  std::partial_sum(out_off_.begin(), out_off_.end(), out_off_.begin());
  if (directed_) std::partial_sum(in_off_.begin(), in_off_.end(), in_off_.begin());

  arcs_.resize(out_off_[v_]);
  if (directed_) in_arcs_.resize(in_off_[v_]);

  std::vector<std::size_t> pos(out_off_.begin(), out_off_.end() - 1);
  std::vector<std::size_t> ipos;
  if (directed_) ipos.assign(in_off_.begin(), in_off_.end() - 1);

  for (EdgeId i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    arcs_[pos[e.u]++] = {e.v, i};
    if (directed_)
      in_arcs_[ipos[e.v]++] = {e.u, i};
    else
      arcs_[pos[e.v]++] = {e.u, i};
  }

  auto by_target = [](const Arc& a, const Arc& b) {
    return a.to < b.to || (a.to == b.to && a.edge < b.edge);
  };
  for (NodeId i = 0; i < v_; ++i) {
    std::sort(arcs_.begin() + out_off_[i], arcs_.begin() + out_off_[i + 1], by_target);
    if (directed_)
      std::sort(in_arcs_.begin() + in_off_[i], in_arcs_.begin() + in_off_[i + 1],
                by_target);
  }
}

double Topology::strength(NodeId i) const {
  double s = 0;
  for (const Arc& a : out(i)) s += weight(a.edge);
  if (directed_)
    for (const Arc& a : in(i)) s += weight(a.edge);
  return s;
}

double Topology::out_strength(NodeId i) const {
  double s = 0;
  for (const Arc& a : out(i)) s += weight(a.edge);
  return s;
}

double Topology::in_strength(NodeId i) const {
  if (!directed_) return out_strength(i);
  double s = 0;
  for (const Arc& a : in(i)) s += weight(a.edge);
  return s;
}

std::optional<EdgeId> Topology::find_edge(NodeId u, NodeId v) const {
  auto span = out(u);
  auto it = std::lower_bound(span.begin(), span.end(), v,
                             [](const Arc& a, NodeId x) { return a.to < x; });
  if (it != span.end() && it->to == v) return it->edge;
  return std::nullopt;
}

void Topology::set_coords(std::vector<Coord> coords, bool geographic) {
  if (coords.size() != v_)
    throw TopologyError("coordinate count does not match node count");
  if (geographic) {
    for (const Coord& c : coords)
      if (c.y < -90.0 || c.y > 90.0 || c.x < -180.0 || c.x > 180.0)
        throw TopologyError("lat/lon out of range");
  }
  coords_ = std::move(coords);
  geographic_ = geographic;
}

void Topology::set_labels(std::vector<std::uint32_t> label_of,
                          std::vector<std::string> label_names) {
  if (label_of.size() != v_)
    throw TopologyError("label count does not match node count");
  for (std::uint32_t l : label_of)
    if (l >= label_names.size()) throw TopologyError("label id out of range");
  label_of_ = std::move(label_of);
  label_names_ = std::move(label_names);
}

void Topology::set_node_weights(std::vector<double> w) {
  if (w.size() != v_)
    throw TopologyError("node weight count does not match node count");
  for (double x : w)
    if (!(x > 0.0) || !std::isfinite(x))
      throw TopologyError("node weight must be finite and > 0");
  node_weights_ = std::move(w);
}

void Topology::set_node_names(std::vector<std::string> names) {
  if (names.size() != v_)
    throw TopologyError("node name count does not match node count");
  node_names_ = std::move(names);
}

Topology Topology::induced(const std::vector<bool>& keep,
                           std::vector<NodeId>* old_ids) const {
  if (keep.size() != v_) throw TopologyError("keep mask size mismatch");
  std::vector<NodeId> map(v_, UINT32_MAX);
  std::vector<NodeId> olds;
  for (NodeId i = 0; i < v_; ++i) {
    if (keep[i]) {
      map[i] = static_cast<NodeId>(olds.size());
      olds.push_back(i);
    }
  }
  if (olds.empty()) throw TopologyError("induced subgraph would be empty");

  std::vector<Edge> es;
  std::vector<double> ws;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (keep[ed.u] && keep[ed.v]) {
      es.push_back({map[ed.u], map[ed.v]});
      if (weighted_) ws.push_back(weights_[e]);
    }
  }
  Topology s = build(static_cast<std::uint32_t>(olds.size()), directed_,
                     std::move(es), std::move(ws));
  if (!coords_.empty()) {
    std::vector<Coord> c(olds.size());
    for (std::size_t i = 0; i < olds.size(); ++i) c[i] = coords_[olds[i]];
    s.set_coords(std::move(c), geographic_);
  }
  if (!label_of_.empty()) {
    std::vector<std::uint32_t> l(olds.size());
    for (std::size_t i = 0; i < olds.size(); ++i) l[i] = label_of_[olds[i]];
    s.set_labels(std::move(l), label_names_);
  }
  if (!node_weights_.empty()) {
    std::vector<double> w(olds.size());
    for (std::size_t i = 0; i < olds.size(); ++i) w[i] = node_weights_[olds[i]];
    s.set_node_weights(std::move(w));
  }
  if (!node_names_.empty()) {
    std::vector<std::string> n(olds.size());
    for (std::size_t i = 0; i < olds.size(); ++i) n[i] = node_names_[olds[i]];
    s.set_node_names(std::move(n));
  }
  if (old_ids) *old_ids = std::move(olds);
  return s;
}

Topology Topology::without_edges(const std::vector<bool>& drop) const {
  if (drop.size() != edges_.size()) throw TopologyError("drop mask size mismatch");
  std::vector<Edge> es;
  std::vector<double> ws;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!drop[e]) {
      es.push_back(edges_[e]);
      if (weighted_) ws.push_back(weights_[e]);
    }
  }
  Topology s = build(v_, directed_, std::move(es), std::move(ws));
  if (!coords_.empty()) s.set_coords(coords_, geographic_);
  if (!label_of_.empty()) s.set_labels(label_of_, label_names_);
  if (!node_weights_.empty()) s.set_node_weights(node_weights_);
  if (!node_names_.empty()) s.set_node_names(node_names_);
  return s;
}

Topology Topology::undirected_view() const {
  if (!directed_) return *this;
  std::vector<Edge> es;
  std::vector<double> ws;
  // merge duplicate orientations, keep the first weight seen
  std::vector<std::uint64_t> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    NodeId a = std::min(edges_[e].u, edges_[e].v);
    NodeId b = std::max(edges_[e].u, edges_[e].v);
    seen.push_back((static_cast<std::uint64_t>(a) << 32) | b);
  }
  std::vector<EdgeId> order(edges_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](EdgeId x, EdgeId y) { return seen[x] < seen[y]; });
  std::uint64_t prev = UINT64_MAX;
  std::vector<EdgeId> kept;
  for (EdgeId e : order) {
    if (seen[e] != prev) {
      kept.push_back(e);
      prev = seen[e];
    }
  }
  std::sort(kept.begin(), kept.end());
  for (EdgeId e : kept) {
    NodeId a = std::min(edges_[e].u, edges_[e].v);
    NodeId b = std::max(edges_[e].u, edges_[e].v);
    es.push_back({a, b});
    if (weighted_) ws.push_back(weights_[e]);
  }
  Topology s = build(v_, false, std::move(es), std::move(ws));
  if (!coords_.empty()) s.set_coords(coords_, geographic_);
  if (!label_of_.empty()) s.set_labels(label_of_, label_names_);
  if (!node_weights_.empty()) s.set_node_weights(node_weights_);
  if (!node_names_.empty()) s.set_node_names(node_names_);
  return s;
}

std::uint64_t Topology::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = hash_mix(h, v_);
  h = hash_mix(h, directed_ ? 1 : 0);
  h = hash_mix(h, weighted_ ? 1 : 0);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    h = hash_mix(h, (static_cast<std::uint64_t>(edges_[e].u) << 32) | edges_[e].v);
    if (weighted_) h = hash_double(h, weights_[e]);
  }
  for (const Coord& c : coords_) {
    h = hash_double(h, c.x);
    h = hash_double(h, c.y);
  }
  for (std::uint32_t l : label_of_) h = hash_mix(h, l);
  for (double w : node_weights_) h = hash_double(h, w);
  return h;
}

}  // namespace netrob
