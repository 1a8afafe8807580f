#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netrob/catalog.hpp"
#include "netrob/challenge.hpp"
#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

inline constexpr const char* kToolName = "netrob";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint32_t kReportSchemaVersion = 1;

struct TopologyDigest {
  std::uint32_t nodes = 0;
  std::uint32_t edges = 0;
  bool directed = false;
  bool weighted = false;
  bool geo = false;
  bool labeled = false;

  bool operator==(const TopologyDigest&) const = default;
};

// One analyzed metric: the catalog's descriptive columns plus the computed
// result. Undefined results keep their reason; nothing serializes as NaN.
struct ReportMetric {
  std::string key;
  std::string name;
  std::string family;
  std::string status;  // implemented | oracle-only | out-of-scope
  std::string scope;
  std::string mode;
  std::string codomain;
  MetricResult result;

  bool operator==(const ReportMetric&) const = default;
};

struct InputHash {
  std::string path;
  std::string fnv1a64;  // hex of 64-bit FNV-1a over the file bytes

  bool operator==(const InputHash&) const = default;
};

struct NamedTrace {
  std::string name;
  ChallengeTrace trace;

  bool operator==(const NamedTrace&) const = default;
};

struct ReportDocument {
  std::uint32_t schema_version = kReportSchemaVersion;
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  std::vector<InputHash> inputs;
  TopologyDigest digest;
  std::vector<ReportMetric> metrics;
  std::vector<NamedTrace> traces;

  bool operator==(const ReportDocument&) const = default;
};

TopologyDigest digest_of(const Topology& t);

std::string fnv1a_hex(const std::string& bytes);

// Runs the requested metrics (catalog order, duplicates dropped) and collects
// results into a document. Empty key list means every implemented metric.
// Unknown keys throw; incompatible or failed computations come back as
// undefined entries with reasons. Fan-out is parallel across metrics.
ReportDocument analyze(const Topology& t, const std::vector<std::string>& keys,
                       const MetricOptions& opts);

// JSON layout is versioned; serialize/parse round-trip exactly, including
// undefined values (tagged objects, never null) and codomain infinities.
std::string serialize_report(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

// Flat per-metric table: key,status,scope,mode,codomain,value,note.
std::string report_to_csv(const ReportDocument& doc);

// One degradation curve per tracked metric, columns fraction_removed,value.
// Rows cover the baseline plus every snapshotted step; undefined samples
// leave the value cell empty. Keys follow the baseline snapshot order.
std::vector<std::pair<std::string, std::string>> trace_csvs(const ChallengeTrace& trace);

std::string csv_escape(const std::string& field);

}  // namespace netrob
