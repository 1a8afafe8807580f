#include "netrob/scenario.hpp"

#include <charconv>
#include <string_view>

#include "netrob/io.hpp"

namespace netrob {
namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const std::size_t c = s.find(',');
    out.emplace_back(trim(s.substr(0, c)));
    if (c == std::string_view::npos) break;
    s = s.substr(c + 1);
  }
  return out;
}

double number(const std::string& tok, const std::string& name, std::size_t line,
              const std::string& key) {
  double x = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(name, line, key + ": expected a number, got '" + tok + "'");
  }
  return x;
}

std::uint64_t unsigned_number(const std::string& tok, const std::string& name,
                              std::size_t line, const std::string& key) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(name, line, key + ": expected a nonnegative integer, got '" + tok + "'");
  }
  return x;
}

bool boolean(const std::string& tok, const std::string& name, std::size_t line,
             const std::string& key) {
  if (tok == "true" || tok == "yes" || tok == "on" || tok == "1") return true;
  if (tok == "false" || tok == "no" || tok == "off" || tok == "0") return false;
  fail(name, line, key + ": expected a boolean, got '" + tok + "'");
}

GeoEvent parse_event(const std::string& value, const std::string& name, std::size_t line) {
  const std::vector<std::string> f = split_list(value);
  if (f.empty()) fail(name, line, "event: missing shape");
  GeoEvent ev;
  if (f[0] == "disk") {
    if (f.size() != 5) {
      fail(name, line, "event: disk takes x, y, radius, probability");
    }
    ev.region.shape = GeoRegion::Shape::Disk;
    ev.region.center.x = number(f[1], name, line, "event");
    ev.region.center.y = number(f[2], name, line, "event");
    ev.region.radius = number(f[3], name, line, "event");
    ev.probability = number(f[4], name, line, "event");
  } else if (f[0] == "polygon") {
    if (f.size() < 8 || f.size() % 2 != 0) {
      fail(name, line, "event: polygon takes probability then at least three x, y pairs");
    }
    ev.region.shape = GeoRegion::Shape::Polygon;
    ev.probability = number(f[1], name, line, "event");
    for (std::size_t i = 2; i + 1 < f.size(); i += 2) {
      ev.region.ring.push_back(
          {number(f[i], name, line, "event"), number(f[i + 1], name, line, "event")});
    }
  } else {
    fail(name, line, "event: unknown shape '" + f[0] + "'");
  }
  if (ev.probability < 0.0 || ev.probability > 1.0) {
    fail(name, line, "event: probability must lie in [0, 1]");
  }
  if (ev.region.radius < 0.0) fail(name, line, "event: radius must be nonnegative");
  return ev;
}

}  // namespace

std::vector<KvEntry> parse_kv(const std::string& text, const std::string& name) {
  std::vector<KvEntry> out;
  std::string_view rest = text;
  std::size_t line = 0;
  while (!rest.empty()) {
    ++line;
    const std::size_t nl = rest.find('\n');
    std::string_view raw = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos) {
      fail(name, line, "expected 'key = value', got '" + std::string(raw) + "'");
    }
    const std::string_view key = trim(raw.substr(0, eq));
    const std::string_view value = trim(raw.substr(eq + 1));
    if (key.empty()) fail(name, line, "missing key before '='");
    if (value.empty()) fail(name, line, "missing value for '" + std::string(key) + "'");
    out.push_back({line, std::string(key), std::string(value)});
  }
  return out;
}

ChallengeScenario parse_scenario(const std::string& text, const std::string& name) {
  ChallengeScenario sc;
  for (const KvEntry& kv : parse_kv(text, name)) {
    const std::string& k = kv.key;
    const std::string& v = kv.value;
    const std::size_t ln = kv.line;
    if (k == "kind") {
      if (v == "random") {
        sc.kind = ChallengeKind::RandomFailure;
      } else if (v == "targeted") {
        sc.kind = ChallengeKind::Targeted;
      } else if (v == "geographic") {
        sc.kind = ChallengeKind::Geographic;
      } else if (v == "cascade") {
        sc.kind = ChallengeKind::Cascade;
      } else {
        fail(name, ln, "kind: unknown scenario kind '" + v + "'");
      }
    } else if (k == "seed") {
      sc.seed = unsigned_number(v, name, ln, k);
    } else if (k == "fraction") {
      sc.fraction = number(v, name, ln, k);
    } else if (k == "count") {
      sc.count = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
    } else if (k == "metric") {
      sc.metric = v;
    } else if (k == "adaptive") {
      sc.adaptive = boolean(v, name, ln, k);
    } else if (k == "allow_undefined") {
      sc.allow_undefined = boolean(v, name, ln, k);
    } else if (k == "tracked") {
      sc.tracked = split_list(v);
    } else if (k == "schedule") {
      sc.schedule.clear();
      for (const std::string& s : split_list(v)) {
        sc.schedule.push_back(number(s, name, ln, k));
      }
    } else if (k == "event") {
      sc.events.push_back(parse_event(v, name, ln));
    } else if (k == "alpha") {
      sc.cascade.alpha = number(v, name, ln, k);
    } else if (k == "trigger") {
      sc.cascade.trigger = static_cast<NodeId>(unsigned_number(v, name, ln, k));
    } else if (k == "load") {
      if (v == "betweenness") {
        sc.cascade.load = CascadeLoad::Betweenness;
      } else if (v == "effective_load") {
        sc.cascade.load = CascadeLoad::EffectiveLoad;
      } else {
        fail(name, ln, "load: unknown load model '" + v + "'");
      }
    } else if (k == "capacities") {
      sc.cascade.capacities.clear();
      for (const std::string& s : split_list(v)) {
        sc.cascade.capacities.push_back(number(s, name, ln, k));
      }
    } else if (k == "load_fraction") {
      const double x = number(v, name, ln, k);
      sc.cascade.load_fraction = x;
      sc.options.load_fraction = x;
    } else if (k == "load_ensembles") {
      const auto x = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
      sc.cascade.load_ensembles = x;
      sc.options.load_ensembles = x;
    } else if (k == "reliability_p") {
      sc.options.reliability_p = number(v, name, ln, k);
    } else if (k == "expansion_hops") {
      sc.options.expansion_hops = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
    } else if (k == "eccentricity_coverage") {
      sc.options.eccentricity_coverage = number(v, name, ln, k);
    } else if (k == "resilience_hops") {
      sc.options.resilience_hops = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
    } else if (k == "hegemony_trim") {
      sc.options.hegemony_trim = number(v, name, ln, k);
    } else if (k == "subset_size") {
      sc.options.subset_size = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
    } else if (k == "failure_probability") {
      sc.options.failure_probability = number(v, name, ln, k);
    } else if (k == "geo_lambda") {
      sc.options.geo.lambda = number(v, name, ln, k);
    } else if (k == "geo_omega") {
      sc.options.geo.omega = number(v, name, ln, k);
    } else if (k == "geo_k") {
      sc.options.geo.k = static_cast<std::uint32_t>(unsigned_number(v, name, ln, k));
    } else if (k == "geo_rho") {
      sc.options.geo.rho = number(v, name, ln, k);
    } else {
      fail(name, ln, "unknown scenario key '" + k + "'");
    }
  }
  return sc;
}

ChallengeScenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path), path);
}

}  // namespace netrob
