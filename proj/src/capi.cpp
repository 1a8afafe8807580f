#include "netrob.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "netrob/community.hpp"
#include "netrob/generators.hpp"
#include "netrob/io.hpp"
#include "netrob/report.hpp"
#include "netrob/scenario.hpp"

using json = nlohmann::ordered_json;

struct nr_topology {
  netrob::Topology t;
  std::vector<netrob::InputHash> inputs;

  explicit nr_topology(netrob::Topology g) : t(std::move(g)) {}
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

nr_status give(const std::string& s, char** out) {
  *out = copy_out(s);
  if (!*out) {
    set_error("out of memory");
    return NR_ERROR_INTERNAL;
  }
  return NR_OK;
}

template <typename Fn>
nr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const netrob::ParseError& e) {
    set_error(e.what());
    return NR_ERROR_PARSE;
  } catch (const netrob::TopologyError& e) {
    set_error(e.what());
    return NR_ERROR_USAGE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return NR_ERROR_INTERNAL;
  }
}

nr_status need(bool ok, const char* what) {
  if (ok) return NR_OK;
  set_error(std::string(what) + " must not be null");
  return NR_ERROR_USAGE;
}

std::vector<std::string> split_keys(const char* keys) {
  std::vector<std::string> out;
  if (!keys) return out;
  std::string cur;
  for (const char* p = keys;; ++p) {
    if (*p == ',' || *p == '\0') {
      std::size_t a = 0, b = cur.size();
      while (a < b && (cur[a] == ' ' || cur[a] == '\t')) ++a;
      while (b > a && (cur[b - 1] == ' ' || cur[b - 1] == '\t')) --b;
      if (b > a) out.push_back(cur.substr(a, b - a));
      cur.clear();
      if (*p == '\0') break;
    } else {
      cur += *p;
    }
  }
  return out;
}

// strict mode refuses documents that carry any undefined metric value
nr_status check_strict(const netrob::ReportDocument& doc, int strict) {
  if (!strict) return NR_OK;
  for (const netrob::ReportMetric& m : doc.metrics) {
    if (!m.result.undefined_reason.empty()) {
      set_error("metric '" + m.key + "' is undefined: " + m.result.undefined_reason);
      return NR_ERROR_UNDEFINED;
    }
  }
  return NR_OK;
}

netrob::ChallengeTrace run_scenario_text(const nr_topology* t, const char* scenario,
                                         std::string* kind_name) {
  const netrob::ChallengeScenario sc = netrob::parse_scenario(scenario, "scenario");
  switch (sc.kind) {
    case netrob::ChallengeKind::RandomFailure: *kind_name = "random"; break;
    case netrob::ChallengeKind::Targeted: *kind_name = "targeted"; break;
    case netrob::ChallengeKind::Geographic: *kind_name = "geographic"; break;
    case netrob::ChallengeKind::Cascade: *kind_name = "cascade"; break;
  }
  return netrob::run_challenge(t->t, sc);
}

}  // namespace

extern "C" {

const char* nr_version(void) { return netrob::kToolVersion; }

const char* nr_last_error(void) { return g_last_error.c_str(); }

void nr_string_free(char* s) { std::free(s); }

nr_status nr_topology_read(const char* path, const char* format, nr_topology** out) {
  if (nr_status s = need(path, "path"); s != NR_OK) return s;
  if (nr_status s = need(format, "format"); s != NR_OK) return s;
  if (nr_status s = need(out, "out"); s != NR_OK) return s;
  return guarded([&] {
    const std::string text = netrob::read_file(path);
    auto* h = new nr_topology(
        netrob::parse_topology(text, netrob::ingest_format(format), path));
    h->inputs.push_back({path, netrob::fnv1a_hex(text)});
    *out = h;
    return NR_OK;
  });
}

nr_status nr_topology_parse(const char* text, const char* format, nr_topology** out) {
  if (nr_status s = need(text, "text"); s != NR_OK) return s;
  if (nr_status s = need(format, "format"); s != NR_OK) return s;
  if (nr_status s = need(out, "out"); s != NR_OK) return s;
  return guarded([&] {
    auto* h =
        new nr_topology(netrob::parse_topology(text, netrob::ingest_format(format)));
    h->inputs.push_back({"<inline>", netrob::fnv1a_hex(text)});
    *out = h;
    return NR_OK;
  });
}

nr_status nr_topology_generate(const char* spec, uint64_t seed, nr_topology** out) {
  if (nr_status s = need(spec, "spec"); s != NR_OK) return s;
  if (nr_status s = need(out, "out"); s != NR_OK) return s;
  return guarded([&] {
    auto* h = new nr_topology(netrob::generate_from_spec(spec, seed));
    h->inputs.push_back({std::string("generate:") + spec + ":" + std::to_string(seed),
                         netrob::fnv1a_hex(netrob::serialize_topology(
                             h->t, netrob::IngestFormat::EdgeList))});
    *out = h;
    return NR_OK;
  });
}

nr_status nr_topology_attach_coords(nr_topology* t, const char* path, int geographic) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(path, "path"); s != NR_OK) return s;
  return guarded([&] {
    const std::string text = netrob::read_file(path);
    netrob::parse_coords(t->t, text, geographic != 0, path);
    t->inputs.push_back({path, netrob::fnv1a_hex(text)});
    return NR_OK;
  });
}

nr_status nr_topology_attach_labels(nr_topology* t, const char* path) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(path, "path"); s != NR_OK) return s;
  return guarded([&] {
    const std::string text = netrob::read_file(path);
    netrob::parse_labels(t->t, text, path);
    t->inputs.push_back({path, netrob::fnv1a_hex(text)});
    return NR_OK;
  });
}

nr_status nr_topology_info(const nr_topology* t, uint32_t* nodes, uint32_t* edges,
                           int* directed, int* weighted, int* geo, int* labeled) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nodes) *nodes = t->t.node_count();
  if (edges) *edges = t->t.edge_count();
  if (directed) *directed = t->t.directed() ? 1 : 0;
  if (weighted) *weighted = t->t.weighted() ? 1 : 0;
  if (geo) *geo = t->t.has_coords() ? 1 : 0;
  if (labeled) *labeled = t->t.has_labels() ? 1 : 0;
  return NR_OK;
}

nr_status nr_topology_write(const nr_topology* t, const char* format, char** out_text) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(format, "format"); s != NR_OK) return s;
  if (nr_status s = need(out_text, "out_text"); s != NR_OK) return s;
  return guarded([&] {
    return give(netrob::serialize_topology(t->t, netrob::ingest_format(format)),
                out_text);
  });
}

void nr_topology_free(nr_topology* t) { delete t; }

nr_status nr_analyze(const nr_topology* t, const char* keys, uint64_t seed, int strict,
                     char** out_json) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    netrob::MetricOptions opts;
    opts.seed = seed;
    netrob::ReportDocument doc = netrob::analyze(t->t, split_keys(keys), opts);
    doc.inputs = t->inputs;
    if (nr_status s = check_strict(doc, strict); s != NR_OK) return s;
    return give(netrob::serialize_report(doc), out_json);
  });
}

nr_status nr_attack(const nr_topology* t, const char* scenario, char** out_json) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(scenario, "scenario"); s != NR_OK) return s;
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    std::string kind;
    netrob::ChallengeTrace trace = run_scenario_text(t, scenario, &kind);
    netrob::ReportDocument doc;
    doc.seed = netrob::parse_scenario(scenario, "scenario").seed;
    doc.inputs = t->inputs;
    doc.digest = netrob::digest_of(t->t);
    doc.traces.push_back({std::move(kind), std::move(trace)});
    return give(netrob::serialize_report(doc), out_json);
  });
}

nr_status nr_report(const nr_topology* t, const char* keys, const char* scenario,
                    uint64_t seed, int strict, char** out_json) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    netrob::MetricOptions opts;
    opts.seed = seed;
    netrob::ReportDocument doc = netrob::analyze(t->t, split_keys(keys), opts);
    doc.inputs = t->inputs;
    if (nr_status s = check_strict(doc, strict); s != NR_OK) return s;
    if (scenario && *scenario) {
      std::string kind;
      netrob::ChallengeTrace trace = run_scenario_text(t, scenario, &kind);
      doc.traces.push_back({std::move(kind), std::move(trace)});
    }
    return give(netrob::serialize_report(doc), out_json);
  });
}

nr_status nr_communities(const nr_topology* t, const char* method, uint64_t seed,
                         char** out_json) {
  if (nr_status s = need(t, "topology"); s != NR_OK) return s;
  if (nr_status s = need(method, "method"); s != NR_OK) return s;
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    const std::string m = method;
    netrob::CommunityAssignment a;
    if (m == "spectral") {
      a = netrob::detect_communities_spectral(t->t);
    } else if (m == "girvan_newman" || m == "edge_betweenness") {
      a = netrob::detect_communities_edge_betweenness(t->t, std::nullopt, seed);
    } else {
      set_error("unknown community method '" + m + "'");
      return NR_ERROR_USAGE;
    }
    json j = json::object();
    j["method"] = m;
    j["communities"] = a.community_count;
    j["modularity"] = a.q;
    j["assignment"] = a.community;
    json members = json::array();
    for (uint32_t c = 0; c < a.community_count; ++c) {
      json group = json::array();
      for (uint32_t i = 0; i < a.community.size(); ++i) {
        if (a.community[i] == c) group.push_back(i);
      }
      members.push_back(std::move(group));
    }
    j["members"] = std::move(members);
    return give(j.dump(2) + "\n", out_json);
  });
}

nr_status nr_list_metrics(char** out_json) {
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    json rows = json::array();
    for (const netrob::CatalogEntry& e : netrob::metric_catalog()) {
      json row = json::object();
      row["key"] = e.key;
      row["name"] = e.name;
      row["family"] = e.family;
      row["status"] = netrob::metric_status_name(e.status);
      row["scope"] = e.scope;
      row["mode"] = e.mode;
      row["codomain"] = e.codomain;
      rows.push_back(std::move(row));
    }
    return give(rows.dump(2) + "\n", out_json);
  });
}

nr_status nr_report_csv(const char* report_json, char** out_csv) {
  if (nr_status s = need(report_json, "report_json"); s != NR_OK) return s;
  if (nr_status s = need(out_csv, "out_csv"); s != NR_OK) return s;
  return guarded([&] {
    return give(netrob::report_to_csv(netrob::parse_report(report_json)), out_csv);
  });
}

nr_status nr_trace_csvs(const char* report_json, char** out_json) {
  if (nr_status s = need(report_json, "report_json"); s != NR_OK) return s;
  if (nr_status s = need(out_json, "out_json"); s != NR_OK) return s;
  return guarded([&] {
    const netrob::ReportDocument doc = netrob::parse_report(report_json);
    if (doc.traces.empty()) {
      set_error("report carries no challenge trace");
      return NR_ERROR_USAGE;
    }
    json j = json::object();
    for (const auto& [key, csv] : netrob::trace_csvs(doc.traces.front().trace)) {
      j[key] = csv;
    }
    return give(j.dump(2) + "\n", out_json);
  });
}

}  // extern "C"
