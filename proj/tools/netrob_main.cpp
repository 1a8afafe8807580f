#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netrob.h"

namespace {

int fail(nr_status s) {
  std::fprintf(stderr, "netrob: %s\n", nr_last_error());
  return static_cast<int>(s);
}

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "netrob: %s\n", msg.c_str());
  return static_cast<int>(NR_ERROR_USAGE);
}

bool read_text(const std::string& path, std::string* out, std::string* err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *err = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = std::move(ss).str();
  return true;
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) return usage_error("cannot write '" + output + "'");
  return 0;
}

// key = value defaults, applied wherever the matching flag was not given
struct Config {
  std::map<std::string, std::string> kv;

  bool load(const std::string& path, std::string* err) {
    std::string text;
    if (!read_text(path, &text, err)) return false;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      const std::size_t eq = line.find('=');
      std::string key = line.substr(0, eq == std::string::npos ? line.size() : eq);
      const auto trim = [](std::string s) {
        const std::size_t a = s.find_first_not_of(" \t\r");
        const std::size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      key = trim(key);
      if (key.empty()) continue;
      if (eq == std::string::npos) {
        *err = path + ":" + std::to_string(n) + ": expected 'key = value'";
        return false;
      }
      kv[key] = trim(line.substr(eq + 1));
    }
    return true;
  }

  void apply(const CLI::App& cmd, const std::string& key, std::string* target) const {
    const auto it = kv.find(key);
    if (it != kv.end() && cmd.count("--" + key) == 0) *target = it->second;
  }
  void apply(const CLI::App& cmd, const std::string& key, std::uint64_t* target) const {
    const auto it = kv.find(key);
    if (it != kv.end() && cmd.count("--" + key) == 0) {
      *target = std::strtoull(it->second.c_str(), nullptr, 10);
    }
  }
  void apply(const CLI::App& cmd, const std::string& key, bool* target) const {
    const auto it = kv.find(key);
    if (it != kv.end() && cmd.count("--" + key) == 0) {
      *target = it->second == "true" || it->second == "yes" || it->second == "1" ||
                it->second == "on";
    }
  }
};

struct InputArgs {
  std::string input;
  std::string input_format = "edgelist";
  std::string coords;
  std::string labels;
  bool planar = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "topology file")->required();
    cmd->add_option("--input-format", input_format,
                    "edgelist | weighted_edgelist | as_rel");
    cmd->add_option("--coords", coords, "node,lat,lon attachment file");
    cmd->add_flag("--planar", planar, "treat coordinates as planar x,y");
    cmd->add_option("--labels", labels, "node,label attachment file");
  }

  nr_status load(nr_topology** out) const {
    nr_status s = nr_topology_read(input.c_str(), input_format.c_str(), out);
    if (s != NR_OK) return s;
    if (!coords.empty()) {
      s = nr_topology_attach_coords(*out, coords.c_str(), planar ? 0 : 1);
      if (s != NR_OK) {
        nr_topology_free(*out);
        return s;
      }
    }
    if (!labels.empty()) {
      s = nr_topology_attach_labels(*out, labels.c_str());
      if (s != NR_OK) {
        nr_topology_free(*out);
        return s;
      }
    }
    return NR_OK;
  }
};

struct Owned {
  char* p = nullptr;
  ~Owned() { nr_string_free(p); }
};

int list_metrics() {
  Owned rows;
  if (nr_status s = nr_list_metrics(&rows.p); s != NR_OK) return fail(s);
  const auto table = nlohmann::json::parse(rows.p);
  std::printf("%-28s %-12s %-12s %s\n", "key", "status", "family", "name");
  for (const auto& row : table) {
    std::printf("%-28s %-12s %-12s %s\n", row.at("key").get<std::string>().c_str(),
                row.at("status").get<std::string>().c_str(),
                row.at("family").get<std::string>().c_str(),
                row.at("name").get<std::string>().c_str());
  }
  return 0;
}

int render_report(const char* report_json, const std::string& format,
                  const std::string& output) {
  if (format == "json") return emit(report_json, output);
  if (format == "csv") {
    Owned csv;
    if (nr_status s = nr_report_csv(report_json, &csv.p); s != NR_OK) return fail(s);
    return emit(csv.p, output);
  }
  return usage_error("unknown output format '" + format + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph robustness toolkit"};
  app.require_subcommand(0, 1);
  app.footer("Environment: NETROB_THREADS caps worker threads.");

  bool want_list = false;
  app.add_flag("--list-metrics", want_list, "print the metric catalog and exit");
  std::string config_path;
  const auto with_config = [&config_path](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key = value defaults for flags");
  };
  with_config(&app);

  // generate
  auto* gen = app.add_subcommand("generate", "make a model topology");
  with_config(gen);
  std::string gen_model;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  gen->add_option("--model", gen_model,
                  "model spec, e.g. ba:v=2000,m=2 or er:v=100,p=0.05")
      ->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", gen_output, "output file (default stdout)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "compute metrics on a topology");
  with_config(ana);
  InputArgs ana_in;
  ana_in.attach(ana);
  std::string ana_metrics;
  std::uint64_t ana_seed = 0;
  std::string ana_format = "json";
  std::string ana_output;
  bool ana_strict = false;
  ana->add_option("--metrics", ana_metrics, "comma-separated keys (default: all)");
  ana->add_option("--seed", ana_seed, "seed for sampled metrics");
  ana->add_option("--format", ana_format, "json | csv");
  ana->add_option("-o,--output", ana_output, "output file (default stdout)");
  ana->add_flag("--strict", ana_strict, "fail when any metric is undefined");

  // attack
  auto* atk = app.add_subcommand("attack", "run a challenge scenario");
  with_config(atk);
  InputArgs atk_in;
  atk_in.attach(atk);
  std::string atk_scenario;
  std::string atk_format = "json";
  std::string atk_output;
  std::string atk_csv_prefix;
  std::uint64_t atk_seed = 0;
  atk->add_option("--scenario", atk_scenario, "scenario file")->required();
  atk->add_option("--seed", atk_seed, "override the scenario seed");
  atk->add_option("--format", atk_format, "json | csv");
  atk->add_option("-o,--output", atk_output, "output file (default stdout)");
  atk->add_option("--csv-prefix", atk_csv_prefix,
                  "also write <prefix><metric>.csv degradation curves");

  // communities
  auto* com = app.add_subcommand("communities", "divide the node set");
  with_config(com);
  InputArgs com_in;
  com_in.attach(com);
  std::string com_method = "spectral";
  std::uint64_t com_seed = 0;
  std::string com_output;
  com->add_option("--method", com_method, "spectral | girvan_newman");
  com->add_option("--seed", com_seed, "sampling seed for girvan_newman");
  com->add_option("-o,--output", com_output, "output file (default stdout)");

  // report
  auto* rep = app.add_subcommand("report", "metrics plus an optional scenario trace");
  with_config(rep);
  InputArgs rep_in;
  rep_in.attach(rep);
  std::string rep_metrics;
  std::string rep_scenario;
  std::uint64_t rep_seed = 0;
  std::string rep_format = "json";
  std::string rep_output;
  bool rep_strict = false;
  rep->add_option("--metrics", rep_metrics, "comma-separated keys (default: all)");
  rep->add_option("--scenario", rep_scenario, "scenario file to run and embed");
  rep->add_option("--seed", rep_seed, "seed for sampled metrics and the scenario");
  rep->add_option("--format", rep_format, "json | csv");
  rep->add_option("-o,--output", rep_output, "output file (default stdout)");
  rep->add_flag("--strict", rep_strict, "fail when any metric is undefined");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(NR_ERROR_USAGE);
  }

  Config cfg;
  if (!config_path.empty()) {
    std::string err;
    if (!cfg.load(config_path, &err)) {
      std::fprintf(stderr, "netrob: %s\n", err.c_str());
      return static_cast<int>(NR_ERROR_PARSE);
    }
  }

  if (want_list) return list_metrics();

  if (gen->parsed()) {
    cfg.apply(*gen, "seed", &gen_seed);
    cfg.apply(*gen, "output", &gen_output);
    nr_topology* t = nullptr;
    if (nr_status s = nr_topology_generate(gen_model.c_str(), gen_seed, &t); s != NR_OK) {
      return fail(s);
    }
    Owned text;
    const nr_status s = nr_topology_write(t, "edgelist", &text.p);
    nr_topology_free(t);
    if (s != NR_OK) return fail(s);
    return emit(text.p, gen_output);
  }

  if (ana->parsed()) {
    cfg.apply(*ana, "metrics", &ana_metrics);
    cfg.apply(*ana, "seed", &ana_seed);
    cfg.apply(*ana, "format", &ana_format);
    cfg.apply(*ana, "strict", &ana_strict);
    nr_topology* t = nullptr;
    if (nr_status s = ana_in.load(&t); s != NR_OK) return fail(s);
    Owned json;
    const nr_status s =
        nr_analyze(t, ana_metrics.c_str(), ana_seed, ana_strict ? 1 : 0, &json.p);
    nr_topology_free(t);
    if (s != NR_OK) return fail(s);
    return render_report(json.p, ana_format, ana_output);
  }

  if (atk->parsed()) {
    cfg.apply(*atk, "seed", &atk_seed);
    cfg.apply(*atk, "format", &atk_format);
    std::string scenario, err;
    if (!read_text(atk_scenario, &scenario, &err)) {
      std::fprintf(stderr, "netrob: %s\n", err.c_str());
      return static_cast<int>(NR_ERROR_USAGE);
    }
    if (atk->count("--seed") || cfg.kv.count("seed")) {
      scenario += "\nseed = " + std::to_string(atk_seed) + "\n";
    }
    nr_topology* t = nullptr;
    if (nr_status s = atk_in.load(&t); s != NR_OK) return fail(s);
    Owned json;
    const nr_status s = nr_attack(t, scenario.c_str(), &json.p);
    nr_topology_free(t);
    if (s != NR_OK) return fail(s);

    if (!atk_csv_prefix.empty() || atk_format == "csv") {
      Owned csvs;
      if (nr_status cs = nr_trace_csvs(json.p, &csvs.p); cs != NR_OK) return fail(cs);
      const auto map = nlohmann::json::parse(csvs.p);
      if (atk_format == "csv" && atk_csv_prefix.empty()) {
        // single concatenated stream, one header block per tracked metric
        std::string out;
        for (const auto& [key, csv] : map.items()) {
          out += "# " + key + "\n" + csv.get<std::string>();
        }
        return emit(out, atk_output);
      }
      for (const auto& [key, csv] : map.items()) {
        const std::string path = atk_csv_prefix + key + ".csv";
        if (const int rc = emit(csv.get<std::string>(), path); rc != 0) return rc;
      }
      if (atk_format == "csv") return 0;
    }
    return emit(json.p, atk_output);
  }

  if (com->parsed()) {
    cfg.apply(*com, "method", &com_method);
    cfg.apply(*com, "seed", &com_seed);
    nr_topology* t = nullptr;
    if (nr_status s = com_in.load(&t); s != NR_OK) return fail(s);
    Owned json;
    const nr_status s = nr_communities(t, com_method.c_str(), com_seed, &json.p);
    nr_topology_free(t);
    if (s != NR_OK) return fail(s);
    return emit(json.p, com_output);
  }

  if (rep->parsed()) {
    cfg.apply(*rep, "metrics", &rep_metrics);
    cfg.apply(*rep, "seed", &rep_seed);
    cfg.apply(*rep, "format", &rep_format);
    cfg.apply(*rep, "strict", &rep_strict);
    std::string scenario;
    if (!rep_scenario.empty()) {
      std::string err;
      if (!read_text(rep_scenario, &scenario, &err)) {
        std::fprintf(stderr, "netrob: %s\n", err.c_str());
        return static_cast<int>(NR_ERROR_USAGE);
      }
      if (rep->count("--seed") || cfg.kv.count("seed")) {
        scenario += "\nseed = " + std::to_string(rep_seed) + "\n";
      }
    }
    nr_topology* t = nullptr;
    if (nr_status s = rep_in.load(&t); s != NR_OK) return fail(s);
    Owned json;
    const nr_status s = nr_report(t, rep_metrics.c_str(), scenario.c_str(), rep_seed,
                                  rep_strict ? 1 : 0, &json.p);
    nr_topology_free(t);
    if (s != NR_OK) return fail(s);
    return render_report(json.p, rep_format, rep_output);
  }

  std::fprintf(stderr, "%s", app.help().c_str());
  return static_cast<int>(NR_ERROR_USAGE);
}
