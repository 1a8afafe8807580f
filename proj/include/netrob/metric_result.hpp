#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netrob {

enum class MetricKind { GlobalScalar, PerNode, PerEdge, Distribution };
enum class MetricScope { Local, Global };
enum class MetricMode { Static, WorstCase, Failures, Dynamic };

// Declared value range; emitted values are checked against it in tests.
struct Codomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Codomain unit() { return {0.0, 1.0}; }
  static Codomain nonneg() { return {0.0, std::numeric_limits<double>::infinity()}; }
  static Codomain any() { return {}; }
  static Codomain range(double lo, double hi) { return {lo, hi}; }

  bool contains(double x, double tol = 1e-9) const {
    return x >= lo - tol && x <= hi + tol;
  }

  bool operator==(const Codomain&) const = default;
};

// One computed metric. Undefined values carry a reason instead of NaN; per-node
// and per-edge vectors always cover the full entity set of the analyzed graph,
// with entries individually undefined where the metric does not apply.
struct MetricResult {
  std::string key;
  MetricKind kind = MetricKind::GlobalScalar;
  MetricScope scope = MetricScope::Global;
  MetricMode mode = MetricMode::Static;
  Codomain codomain;

  std::optional<double> value;
  std::vector<std::optional<double>> node_values;
  std::vector<std::optional<double>> edge_values;
  std::vector<std::pair<double, double>> curve;  // distribution, ascending x

  std::string undefined_reason;
  std::vector<std::pair<std::string, double>> extras;

  bool defined() const {
    switch (kind) {
      case MetricKind::GlobalScalar: return value.has_value();
      case MetricKind::PerNode: return !node_values.empty();
      case MetricKind::PerEdge: return true;  // edge set may legitimately be empty
      case MetricKind::Distribution: return undefined_reason.empty();
    }
    return false;
  }

  static MetricResult undefined(std::string key, MetricKind kind, std::string why) {
    MetricResult r;
    r.key = std::move(key);
    r.kind = kind;
    r.undefined_reason = std::move(why);
    return r;
  }

  bool operator==(const MetricResult&) const = default;
};

}  // namespace netrob
