#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netrob/challenge.hpp"

namespace netrob {

struct KvEntry {
  std::size_t line = 0;
  std::string key;
  std::string value;
};

// "key = value" lines with '#' comments. Shared by scenario files and the
// CLI config file; malformed lines raise ParseError with line numbers.
std::vector<KvEntry> parse_kv(const std::string& text, const std::string& name = "input");

// Scenario grammar, one key per line, later scalar keys override earlier ones:
//   kind = random | targeted | geographic | cascade
//   seed, fraction, count, metric, adaptive, allow_undefined
//   tracked = key, key, ...      schedule = 0.1, 0.2, ...
//   event = disk, x, y, radius, probability        (x is lon, y is lat
//   event = polygon, probability, x1, y1, x2, ...   on geographic layouts)
//   alpha, trigger, load = betweenness | effective_load, capacities = c0, c1, ...
//   load_fraction, load_ensembles
// plus metric knobs forwarded to computes: reliability_p, expansion_hops,
// eccentricity_coverage, resilience_hops, hegemony_trim, subset_size,
// failure_probability, geo_lambda, geo_omega, geo_k, geo_rho.
ChallengeScenario parse_scenario(const std::string& text,
                                 const std::string& name = "scenario");
ChallengeScenario load_scenario(const std::string& path);

}  // namespace netrob
