#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace netrob {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
};

struct Coord {
  double x = 0;  // lon when geographic
  double y = 0;  // lat when geographic
};

struct Arc {
  NodeId to = 0;
  EdgeId edge = 0;
};

// Immutable simple graph with dense node ids. Undirected edges are stored once
// with u < v; directed edges keep their orientation. Self-loops and duplicate
// edges are rejected at build time, weights must be strictly positive.
class Topology {
 public:
  static Topology build(std::uint32_t node_count, bool directed,
                        std::vector<Edge> edges,
                        std::vector<double> weights = {});

  std::uint32_t node_count() const { return v_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  double weight(EdgeId e) const { return weighted_ ? weights_[e] : 1.0; }
  const std::vector<double>& weights() const { return weights_; }

  // undirected: all incident arcs; directed: outgoing arcs
  std::span<const Arc> out(NodeId i) const {
    return {arcs_.data() + out_off_[i], out_off_[i + 1] - out_off_[i]};
  }
  // directed only (empty span on undirected graphs)
  std::span<const Arc> in(NodeId i) const {
    if (!directed_) return {};
    return {in_arcs_.data() + in_off_[i], in_off_[i + 1] - in_off_[i]};
  }

  std::uint32_t degree(NodeId i) const {
    return static_cast<std::uint32_t>(out_off_[i + 1] - out_off_[i]) +
           (directed_ ? static_cast<std::uint32_t>(in_off_[i + 1] - in_off_[i]) : 0u);
  }
  std::uint32_t out_degree(NodeId i) const {
    return static_cast<std::uint32_t>(out_off_[i + 1] - out_off_[i]);
  }
  std::uint32_t in_degree(NodeId i) const {
    return directed_ ? static_cast<std::uint32_t>(in_off_[i + 1] - in_off_[i])
                     : out_degree(i);
  }
  double strength(NodeId i) const;      // sum of incident weights (in+out)
  double out_strength(NodeId i) const;
  double in_strength(NodeId i) const;

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;  // directed: u->v
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  // optional attachments
  void set_coords(std::vector<Coord> coords, bool geographic);
  void set_labels(std::vector<std::uint32_t> label_of,
                  std::vector<std::string> label_names);
  void set_node_weights(std::vector<double> w);
  void set_node_names(std::vector<std::string> names);

  bool has_coords() const { return !coords_.empty(); }
  bool geographic() const { return geographic_; }
  const std::vector<Coord>& coords() const { return coords_; }
  bool has_labels() const { return !label_of_.empty(); }
  const std::vector<std::uint32_t>& label_of() const { return label_of_; }
  const std::vector<std::string>& label_names() const { return label_names_; }
  bool has_node_weights() const { return !node_weights_.empty(); }
  double node_weight(NodeId i) const {
    return node_weights_.empty() ? 1.0 : node_weights_[i];
  }
  bool has_node_names() const { return !node_names_.empty(); }
  const std::string& node_name(NodeId i) const { return node_names_[i]; }

  // subgraph on kept nodes; attachments carried over, ids remapped densely in
  // ascending old-id order (old_ids receives the mapping when non-null)
  Topology induced(const std::vector<bool>& keep,
                   std::vector<NodeId>* old_ids = nullptr) const;
  Topology without_edges(const std::vector<bool>& drop) const;
  Topology undirected_view() const;  // collapse orientation, merge duplicates

  std::uint64_t content_hash() const;

 private:
  std::uint32_t v_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  bool geographic_ = false;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> out_off_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> in_off_;
  std::vector<Arc> in_arcs_;
  std::vector<Coord> coords_;
  std::vector<std::uint32_t> label_of_;
  std::vector<std::string> label_names_;
  std::vector<double> node_weights_;
  std::vector<std::string> node_names_;

  void rebuild_adjacency();
};

}  // namespace netrob
