#include "netrob/report.hpp"

#include <charconv>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "netrob/io.hpp"
#include "netrob/parallel.hpp"

namespace netrob {
namespace {

using json = nlohmann::ordered_json;

const char* kind_name(MetricKind k) {
  switch (k) {
    case MetricKind::GlobalScalar: return "global_scalar";
    case MetricKind::PerNode: return "per_node";
    case MetricKind::PerEdge: return "per_edge";
    case MetricKind::Distribution: return "distribution";
  }
  return "global_scalar";
}

const char* scope_name(MetricScope s) {
  return s == MetricScope::Local ? "local" : "global";
}

const char* mode_name(MetricMode m) {
  switch (m) {
    case MetricMode::Static: return "static";
    case MetricMode::WorstCase: return "worst_case";
    case MetricMode::Failures: return "failures";
    case MetricMode::Dynamic: return "dynamic";
  }
  return "static";
}

MetricKind kind_from(const std::string& s) {
  if (s == "global_scalar") return MetricKind::GlobalScalar;
  if (s == "per_node") return MetricKind::PerNode;
  if (s == "per_edge") return MetricKind::PerEdge;
  if (s == "distribution") return MetricKind::Distribution;
  throw ParseError("report: unknown result kind '" + s + "'");
}

MetricScope scope_from(const std::string& s) {
  if (s == "local") return MetricScope::Local;
  if (s == "global") return MetricScope::Global;
  throw ParseError("report: unknown result scope '" + s + "'");
}

MetricMode mode_from(const std::string& s) {
  if (s == "static") return MetricMode::Static;
  if (s == "worst_case") return MetricMode::WorstCase;
  if (s == "failures") return MetricMode::Failures;
  if (s == "dynamic") return MetricMode::Dynamic;
  throw ParseError("report: unknown result mode '" + s + "'");
}

double bound_from(const std::string& s) {
  double x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("report: bad codomain bound '" + s + "'");
  }
  return x;
}

json optional_array(const std::vector<std::optional<double>>& xs) {
  json a = json::array();
  for (const auto& x : xs) {
    if (x) {
      a.push_back(*x);
    } else {
      a.push_back(json{{"undefined", true}});
    }
  }
  return a;
}

std::vector<std::optional<double>> optional_array_from(const json& a) {
  std::vector<std::optional<double>> out;
  out.reserve(a.size());
  for (const json& x : a) {
    if (x.is_object()) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(x.get<double>());
    }
  }
  return out;
}

json result_to_json(const MetricResult& r) {
  json j = json::object();
  j["kind"] = kind_name(r.kind);
  j["scope"] = scope_name(r.scope);
  j["mode"] = mode_name(r.mode);
  j["codomain"] = {{"lo", format_double(r.codomain.lo)},
                   {"hi", format_double(r.codomain.hi)}};
  if (!r.undefined_reason.empty()) {
    j["value"] = json{{"undefined", r.undefined_reason}};
  } else if (r.value) {
    j["value"] = *r.value;
  }
  if (!r.node_values.empty()) j["node_values"] = optional_array(r.node_values);
  if (!r.edge_values.empty()) j["edge_values"] = optional_array(r.edge_values);
  if (!r.curve.empty()) {
    json c = json::array();
    for (const auto& [x, y] : r.curve) c.push_back(json::array({x, y}));
    j["curve"] = std::move(c);
  }
  if (!r.extras.empty()) {
    json e = json::object();
    for (const auto& [k, v] : r.extras) e[k] = v;
    j["extras"] = std::move(e);
  }
  return j;
}

MetricResult result_from_json(const std::string& key, const json& j) {
  MetricResult r;
  r.key = key;
  r.kind = kind_from(j.at("kind").get<std::string>());
  r.scope = scope_from(j.at("scope").get<std::string>());
  r.mode = mode_from(j.at("mode").get<std::string>());
  r.codomain.lo = bound_from(j.at("codomain").at("lo").get<std::string>());
  r.codomain.hi = bound_from(j.at("codomain").at("hi").get<std::string>());
  if (j.contains("value")) {
    const json& v = j.at("value");
    if (v.is_object()) {
      r.undefined_reason = v.at("undefined").get<std::string>();
    } else {
      r.value = v.get<double>();
    }
  }
  if (j.contains("node_values")) r.node_values = optional_array_from(j.at("node_values"));
  if (j.contains("edge_values")) r.edge_values = optional_array_from(j.at("edge_values"));
  if (j.contains("curve")) {
    for (const json& p : j.at("curve")) {
      r.curve.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
  }
  if (j.contains("extras")) {
    for (const auto& [k, v] : j.at("extras").items()) {
      r.extras.emplace_back(k, v.get<double>());
    }
  }
  return r;
}

json tracked_to_json(const TrackedValue& tv) {
  json j = json::object();
  j["key"] = tv.key;
  if (tv.value) {
    j["value"] = *tv.value;
    if (!tv.note.empty()) j["note"] = tv.note;
  } else {
    j["value"] = json{{"undefined", tv.note}};
  }
  return j;
}

TrackedValue tracked_from_json(const json& j) {
  TrackedValue tv;
  tv.key = j.at("key").get<std::string>();
  const json& v = j.at("value");
  if (v.is_object()) {
    tv.note = v.at("undefined").get<std::string>();
  } else {
    tv.value = v.get<double>();
    if (j.contains("note")) tv.note = j.at("note").get<std::string>();
  }
  return tv;
}

json trace_to_json(const ChallengeTrace& t) {
  json j = json::object();
  json baseline = json::array();
  for (const TrackedValue& tv : t.baseline) baseline.push_back(tracked_to_json(tv));
  j["baseline"] = std::move(baseline);
  j["baseline_largest"] = t.baseline_largest;
  json steps = json::array();
  for (const ChallengeStep& s : t.steps) {
    json js = json::object();
    js["removed_nodes"] = s.removed_nodes;
    js["removed_edges"] = s.removed_edges;
    js["fraction"] = s.fraction;
    js["largest_fraction"] = s.largest_fraction;
    js["snapshotted"] = s.snapshotted;
    json snap = json::array();
    for (const TrackedValue& tv : s.snapshot) snap.push_back(tracked_to_json(tv));
    js["snapshot"] = std::move(snap);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  j["final_fraction"] = t.final_fraction;
  j["final_largest"] = t.final_largest;
  j["remaining_nodes"] = t.remaining_nodes;
  j["remaining_edges"] = t.remaining_edges;
  j["avalanche_size"] = t.avalanche_size;
  j["waves"] = t.waves;
  return j;
}

ChallengeTrace trace_from_json(const json& j) {
  ChallengeTrace t;
  for (const json& tv : j.at("baseline")) t.baseline.push_back(tracked_from_json(tv));
  t.baseline_largest = j.at("baseline_largest").get<double>();
  for (const json& js : j.at("steps")) {
    ChallengeStep s;
    s.removed_nodes = js.at("removed_nodes").get<std::vector<NodeId>>();
    s.removed_edges = js.at("removed_edges").get<std::vector<EdgeId>>();
    s.fraction = js.at("fraction").get<double>();
    s.largest_fraction = js.at("largest_fraction").get<double>();
    s.snapshotted = js.at("snapshotted").get<bool>();
    for (const json& tv : js.at("snapshot")) s.snapshot.push_back(tracked_from_json(tv));
    t.steps.push_back(std::move(s));
  }
  t.final_fraction = j.at("final_fraction").get<double>();
  t.final_largest = j.at("final_largest").get<double>();
  t.remaining_nodes = j.at("remaining_nodes").get<std::uint32_t>();
  t.remaining_edges = j.at("remaining_edges").get<std::uint32_t>();
  t.avalanche_size = j.at("avalanche_size").get<std::uint32_t>();
  t.waves = j.at("waves").get<std::uint32_t>();
  return t;
}

}  // namespace

TopologyDigest digest_of(const Topology& t) {
  TopologyDigest d;
  d.nodes = t.node_count();
  d.edges = t.edge_count();
  d.directed = t.directed();
  d.weighted = t.weighted();
  d.geo = t.has_coords();
  d.labeled = t.has_labels();
  return d;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

ReportDocument analyze(const Topology& t, const std::vector<std::string>& keys,
                       const MetricOptions& opts) {
  const std::vector<CatalogEntry>& cat = metric_catalog();
  std::vector<const CatalogEntry*> picked;
  if (keys.empty()) {
    for (const CatalogEntry& e : cat) {
      if (e.status == MetricStatus::Implemented) picked.push_back(&e);
    }
  } else {
    std::set<std::string> want;
    for (const std::string& k : keys) {
      if (!find_metric(k)) throw TopologyError("unknown metric key: " + k);
      want.insert(k);
    }
    for (const CatalogEntry& e : cat) {
      if (want.count(e.key)) picked.push_back(&e);
    }
  }

  ReportDocument doc;
  doc.seed = opts.seed;
  doc.digest = digest_of(t);
  doc.metrics.resize(picked.size());
  parallel_for(static_cast<std::uint32_t>(picked.size()), [&](std::uint32_t i) {
    const CatalogEntry& e = *picked[i];
    ReportMetric& m = doc.metrics[i];
    m.key = e.key;
    m.name = e.name;
    m.family = e.family;
    m.status = metric_status_name(e.status);
    m.scope = e.scope;
    m.mode = e.mode;
    m.codomain = e.codomain;
    m.result = compute_metric(e.key, t, opts);
  });
  return doc;
}

std::string serialize_report(const ReportDocument& doc) {
  json j = json::object();
  j["schema_version"] = doc.schema_version;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  j["seed"] = doc.seed;
  json inputs = json::array();
  for (const InputHash& in : doc.inputs) {
    inputs.push_back(json{{"path", in.path}, {"fnv1a64", in.fnv1a64}});
  }
  j["inputs"] = std::move(inputs);
  j["topology"] = {{"nodes", doc.digest.nodes},       {"edges", doc.digest.edges},
                   {"directed", doc.digest.directed}, {"weighted", doc.digest.weighted},
                   {"geo", doc.digest.geo},           {"labeled", doc.digest.labeled}};
  json metrics = json::array();
  for (const ReportMetric& m : doc.metrics) {
    json jm = json::object();
    jm["key"] = m.key;
    jm["name"] = m.name;
    jm["family"] = m.family;
    jm["status"] = m.status;
    jm["scope"] = m.scope;
    jm["mode"] = m.mode;
    jm["codomain"] = m.codomain;
    jm["result"] = result_to_json(m.result);
    metrics.push_back(std::move(jm));
  }
  j["metrics"] = std::move(metrics);
  json traces = json::array();
  for (const NamedTrace& nt : doc.traces) {
    traces.push_back(json{{"name", nt.name}, {"trace", trace_to_json(nt.trace)}});
  }
  j["traces"] = std::move(traces);
  return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::uint32_t>();
    if (doc.schema_version != kReportSchemaVersion) {
      throw ParseError("report: unsupported schema version " +
                       std::to_string(doc.schema_version));
    }
    doc.tool = j.at("tool").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    for (const json& in : j.at("inputs")) {
      doc.inputs.push_back(
          {in.at("path").get<std::string>(), in.at("fnv1a64").get<std::string>()});
    }
    const json& top = j.at("topology");
    doc.digest.nodes = top.at("nodes").get<std::uint32_t>();
    doc.digest.edges = top.at("edges").get<std::uint32_t>();
    doc.digest.directed = top.at("directed").get<bool>();
    doc.digest.weighted = top.at("weighted").get<bool>();
    doc.digest.geo = top.at("geo").get<bool>();
    doc.digest.labeled = top.at("labeled").get<bool>();
    for (const json& jm : j.at("metrics")) {
      ReportMetric m;
      m.key = jm.at("key").get<std::string>();
      m.name = jm.at("name").get<std::string>();
      m.family = jm.at("family").get<std::string>();
      m.status = jm.at("status").get<std::string>();
      m.scope = jm.at("scope").get<std::string>();
      m.mode = jm.at("mode").get<std::string>();
      m.codomain = jm.at("codomain").get<std::string>();
      m.result = result_from_json(m.key, jm.at("result"));
      doc.metrics.push_back(std::move(m));
    }
    for (const json& nt : j.at("traces")) {
      doc.traces.push_back(
          {nt.at("name").get<std::string>(), trace_from_json(nt.at("trace"))});
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const ReportDocument& doc) {
  std::string out = "key,status,scope,mode,codomain,value,note\n";
  for (const ReportMetric& m : doc.metrics) {
    out += csv_escape(m.key);
    out += ',';
    out += csv_escape(m.status);
    out += ',';
    out += csv_escape(m.scope);
    out += ',';
    out += csv_escape(m.mode);
    out += ',';
    out += csv_escape(m.codomain);
    out += ',';
    if (m.result.value) out += format_double(*m.result.value);
    out += ',';
    out += csv_escape(m.result.undefined_reason);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> trace_csvs(const ChallengeTrace& trace) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < trace.baseline.size(); ++k) {
    const std::string& key = trace.baseline[k].key;
    std::string csv = "fraction_removed,value\n";
    csv += '0';
    csv += ',';
    if (trace.baseline[k].value) csv += format_double(*trace.baseline[k].value);
    csv += '\n';
    for (const ChallengeStep& s : trace.steps) {
      if (!s.snapshotted) continue;
      csv += format_double(s.fraction);
      csv += ',';
      if (k < s.snapshot.size() && s.snapshot[k].value) {
        csv += format_double(*s.snapshot[k].value);
      }
      csv += '\n';
    }
    out.emplace_back(key, std::move(csv));
  }
  return out;
}

}  // namespace netrob
