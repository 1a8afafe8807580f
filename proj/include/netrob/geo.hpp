#pragma once

#include <cstdint>
#include <vector>

#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class GeoDistanceModel { Auto, Planar, GreatCircle };

// Auto follows the topology's coordinate flag: great-circle kilometres for
// geographic lon/lat, plain Euclidean for planar layouts.
struct GeoParams {
  double lambda = 1.0;  // path-diversity impact scale, must be positive
  double omega = 0.5;   // weight of squared separation vs enclosed area
  std::uint32_t k = 3;  // alternative paths probed per pair
  double rho = 0.05;    // edge-density compensation exponent for cTGGD
  GeoDistanceModel model = GeoDistanceModel::Auto;
};

// Pairwise node distance under the topology's coordinate model.
double geo_distance(const Topology& t, NodeId a, NodeId b);

struct DistanceStrengthOutreach {
  MetricResult strength;  // D_i: summed distance to neighbors
  MetricResult outreach;  // O_i: weight-scaled distance sum
};

DistanceStrengthOutreach distance_strength_outreach(const Topology& t);

struct GeoRegion {
  enum class Shape { Disk, Polygon };
  Shape shape = Shape::Disk;
  Coord center{};           // disk center
  double radius = 0.0;      // disk radius, km when geographic
  std::vector<Coord> ring;  // polygon vertices, implicitly closed
};

struct GeoEvent {
  GeoRegion region;
  double probability = 0.0;
};

// True when the node's coordinate falls inside the region (disk boundaries
// inclusive, polygons by even-odd rule on the raw coordinate plane).
bool region_contains(const GeoRegion& region, const Coord& c, bool geographic);

struct GeoSurvivability {
  std::vector<std::pair<double, double>> distribution;  // (|V_L|/v, P), ascending
  double expected = 0.0;
  double worst_case = 0.0;  // smallest outcome with positive probability
  double residual = 0.0;    // probability mass of the no-event outcome
};

// Distribution of the largest-component fraction over geographically extended
// failure events. Probabilities must sum to at most 1; the remainder keeps the
// intact graph.
GeoSurvivability geo_survivability(const Topology& t, const std::vector<GeoEvent>& events);

// Per-node relative drop of Euclidean efficiency when the node's links are cut.
// value carries the maximum drop, extras the relative variance across nodes and
// the baseline efficiency.
MetricResult pointwise_vulnerability(const Topology& t);

struct PathDiversity {
  double egpd = 0.0;
  double k_sd = 0.0;  // summed geographic separation of the alternatives
  std::vector<std::vector<NodeId>> paths;  // base path first, then alternatives
};

// Geographic diversity of up to params.k alternative routes between s and d.
// Alternatives come from successive shortest-path runs that penalize interior
// nodes and links of earlier paths; generation stops once a run retraces a
// known path.
PathDiversity egpd(const Topology& t, NodeId s, NodeId d, const GeoParams& params = {});

struct GeoDiversity {
  double tggd = 0.0;
  double ctggd = 0.0;
  std::uint64_t pairs = 0;      // node pairs averaged (unreachable count as 0)
  bool ctggd_in_range = true;   // declared codomain [0,1] holds for this graph
};

GeoDiversity tggd(const Topology& t, const GeoParams& params = {});

// Lambda such that a pair whose k_sd equals the median positive per-alternative
// separation over the corpus scores EGPD = 0.63. Falls back to 1 when no
// alternative anywhere separates from its base path.
double calibrate_lambda(const std::vector<Topology>& corpus, GeoParams params = {});

}  // namespace netrob
