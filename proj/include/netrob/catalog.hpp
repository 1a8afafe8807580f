#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netrob/geo.hpp"
#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

enum class MetricStatus { Implemented, OracleOnly, OutOfScope };

// Knobs for parameterized metrics. One bag keeps every compute binding on the
// same signature; callers override the few fields a metric reads.
struct MetricOptions {
  std::uint64_t seed = 0;
  double reliability_p = 0.9;        // per-edge operational probability
  std::uint32_t expansion_hops = 2;  // h for hop-ball expansion
  double eccentricity_coverage = 0.9;
  std::uint32_t resilience_hops = 2;  // neighborhood radius for delay resilience
  double hegemony_trim = 0.1;         // trimmed-mean share per side
  double load_fraction = 0.25;        // communicating pair share for effective load
  std::uint32_t load_ensembles = 32;
  std::uint32_t subset_size = 2;      // m for the minimum m-degree oracle
  double failure_probability = 0.1;   // per-link failure rate for survivability
  GeoParams geo;
};

struct CatalogEntry {
  std::string key;
  std::string name;    // display name for listings
  std::string family;  // degree, clustering, community, connectivity, distance,
                       // throughput, spectral, geographic
  MetricStatus status = MetricStatus::Implemented;
  std::string scope;     // "local", "global", "local/global", "-"
  std::string mode;      // "static", "worst-case", "failures", "dynamic"
  std::string codomain;  // display form, e.g. "[0, 1]" or "unbounded"
  bool undirected_only = false;
  bool directed_only = false;
  bool needs_weights = false;
  bool needs_coords = false;
  bool needs_labels = false;
  bool needs_node_weights = false;
  bool per_node = false;  // yields node values usable for attack rankings
  bool per_edge = false;  // yields edge values usable for attack rankings
  // Null for out-of-scope entries and for measures that need external inputs.
  std::function<MetricResult(const Topology&, const MetricOptions&)> compute;
};

// Every metric key the toolkit exposes, plus explicit entries for the topic
// families it deliberately does not cover. Order is stable and drives
// listings and reports.
const std::vector<CatalogEntry>& metric_catalog();

const CatalogEntry* find_metric(const std::string& key);

// Empty string when the metric applies to this graph, otherwise the reason
// it does not (missing attachments, wrong orientation, no compute).
std::string incompatibility(const CatalogEntry& e, const Topology& t);

// Runs one metric with precondition mapping: unknown keys throw, structural
// mismatches and computation failures come back as undefined results.
MetricResult compute_metric(const std::string& key, const Topology& t,
                            const MetricOptions& opts);

const char* metric_status_name(MetricStatus s);

}  // namespace netrob
