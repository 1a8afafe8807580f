#include "netrob/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "netrob/rng.hpp"

namespace netrob {

std::vector<std::uint32_t> Rng::sample(std::uint32_t n, std::uint32_t k) {
  // Floyd's algorithm
  std::set<std::uint32_t> picked;
  for (std::uint32_t j = n - k; j < n; ++j) {
    std::uint32_t x = static_cast<std::uint32_t>(below(j + 1));
    if (!picked.insert(x).second) picked.insert(j);
  }
  return {picked.begin(), picked.end()};
}

Topology make_complete(std::uint32_t v) {
  std::vector<Edge> es;
  for (NodeId i = 0; i < v; ++i)
    for (NodeId j = i + 1; j < v; ++j) es.push_back({i, j});
  return Topology::build(v, false, std::move(es));
}

Topology make_path(std::uint32_t v) {
  std::vector<Edge> es;
  for (NodeId i = 0; i + 1 < v; ++i) es.push_back({i, static_cast<NodeId>(i + 1)});
  return Topology::build(v, false, std::move(es));
}

Topology make_cycle(std::uint32_t v) {
  if (v < 3) throw TopologyError("cycle needs at least 3 nodes");
  std::vector<Edge> es;
  for (NodeId i = 0; i + 1 < v; ++i) es.push_back({i, static_cast<NodeId>(i + 1)});
  es.push_back({0, static_cast<NodeId>(v - 1)});
  return Topology::build(v, false, std::move(es));
}

Topology make_star(std::uint32_t v) {
  if (v < 2) throw TopologyError("star needs at least 2 nodes");
  std::vector<Edge> es;
  for (NodeId i = 1; i < v; ++i) es.push_back({0, i});
  return Topology::build(v, false, std::move(es));
}

Topology make_grid(std::uint32_t rows, std::uint32_t cols) {
  std::vector<Edge> es;
  auto id = [cols](std::uint32_t r, std::uint32_t c) {
    return static_cast<NodeId>(r * cols + c);
  };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Topology::build(rows * cols, false, std::move(es));
}

Topology make_complete_bipartite(std::uint32_t a, std::uint32_t b) {
  std::vector<Edge> es;
  for (NodeId i = 0; i < a; ++i)
    for (NodeId j = 0; j < b; ++j) es.push_back({i, static_cast<NodeId>(a + j)});
  return Topology::build(a + b, false, std::move(es));
}

Topology make_er(std::uint32_t v, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw TopologyError("er probability must be in [0,1]");
  Rng rng(seed);
  std::vector<Edge> es;
  for (NodeId i = 0; i < v; ++i)
    for (NodeId j = i + 1; j < v; ++j)
      if (rng.chance(p)) es.push_back({i, j});
  return Topology::build(v, false, std::move(es));
}

Topology make_ba(std::uint32_t v, std::uint32_t m, std::uint64_t seed) {
  if (m == 0) throw TopologyError("ba needs m >= 1");
  if (v < m + 1) throw TopologyError("ba needs v >= m+1");
  Rng rng(seed);
  std::vector<Edge> es;
  std::vector<NodeId> pool;  // every edge endpoint twice -> degree-proportional
  const std::uint32_t n0 = m + 1;
  for (NodeId i = 0; i < n0; ++i) {
    for (NodeId j = i + 1; j < n0; ++j) {
      es.push_back({i, j});
      pool.push_back(i);
      pool.push_back(j);
    }
  }
  std::vector<NodeId> chosen;
  for (NodeId u = n0; u < v; ++u) {
    chosen.clear();
    while (chosen.size() < m) {
      NodeId tgt = pool[rng.index(pool.size())];
      if (tgt != u && std::find(chosen.begin(), chosen.end(), tgt) == chosen.end())
        chosen.push_back(tgt);
    }
    std::sort(chosen.begin(), chosen.end());
    for (NodeId tgt : chosen) {
      es.push_back({tgt, u});
      pool.push_back(tgt);
      pool.push_back(u);
    }
  }
  return Topology::build(v, false, std::move(es));
}

Topology make_ws(std::uint32_t v, std::uint32_t k, double beta, std::uint64_t seed) {
  if (k == 0 || k % 2 != 0) throw TopologyError("ws needs even k >= 2");
  if (v <= k) throw TopologyError("ws needs v > k");
  if (beta < 0.0 || beta > 1.0) throw TopologyError("ws beta must be in [0,1]");
  Rng rng(seed);
  std::set<std::pair<NodeId, NodeId>> present;
  auto norm = [](NodeId a, NodeId b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  for (NodeId i = 0; i < v; ++i)
    for (std::uint32_t d = 1; d <= k / 2; ++d)
      present.insert(norm(i, (i + d) % v));

  for (NodeId i = 0; i < v; ++i) {
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
      NodeId j = (i + d) % v;
      if (!rng.chance(beta)) continue;
      if (!present.count(norm(i, j))) continue;  // already rewired away
      // pick a fresh endpoint for the i side
      NodeId w = i;
      bool found = false;
      for (int tries = 0; tries < 64; ++tries) {
        w = static_cast<NodeId>(rng.index(v));
        if (w != i && !present.count(norm(i, w))) {
          found = true;
          break;
        }
      }
      if (!found) continue;  // node nearly saturated, keep the ring edge
      present.erase(norm(i, j));
      present.insert(norm(i, w));
    }
  }
  std::vector<Edge> es;
  for (auto [a, b] : present) es.push_back({a, b});
  return Topology::build(v, false, std::move(es));
}

Topology make_random_tree(std::uint32_t v, std::uint64_t seed) {
  if (v == 1) return Topology::build(1, false, {});
  if (v == 2) return Topology::build(2, false, {{0, 1}});
  Rng rng(seed);
  std::vector<NodeId> pruefer(v - 2);
  for (auto& x : pruefer) x = static_cast<NodeId>(rng.index(v));
  std::vector<std::uint32_t> deg(v, 1);
  for (NodeId x : pruefer) ++deg[x];
  std::set<NodeId> leaves;
  for (NodeId i = 0; i < v; ++i)
    if (deg[i] == 1) leaves.insert(i);
  std::vector<Edge> es;
  for (NodeId x : pruefer) {
    NodeId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--deg[x] == 1) leaves.insert(x);
  }
  NodeId a = *leaves.begin();
  NodeId b = *std::next(leaves.begin());
  es.push_back({std::min(a, b), std::max(a, b)});
  return Topology::build(v, false, std::move(es));
}

Topology make_two_cliques_bridge(std::uint32_t a, std::uint32_t b) {
  if (a < 2 || b < 2) throw TopologyError("two_cliques needs sizes >= 2");
  std::vector<Edge> es;
  for (NodeId i = 0; i < a; ++i)
    for (NodeId j = i + 1; j < a; ++j) es.push_back({i, j});
  for (NodeId i = 0; i < b; ++i)
    for (NodeId j = i + 1; j < b; ++j)
      es.push_back({static_cast<NodeId>(a + i), static_cast<NodeId>(a + j)});
  es.push_back({0, a});
  return Topology::build(a + b, false, std::move(es));
}

Topology generate_from_spec(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::string model = spec.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw TopologyError("bad generator parameter '" + part + "'");
      try {
        kv[part.substr(0, eq)] = std::stod(part.substr(eq + 1));
      } catch (const std::exception&) {
        throw TopologyError("bad generator parameter value in '" + part + "'");
      }
    }
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end())
      throw TopologyError("generator '" + model + "' needs parameter " + k);
    return it->second;
  };
  auto as_u32 = [&](const std::string& k) {
    double x = need(k);
    if (x < 0 || x != std::floor(x) || x > 4e9)
      throw TopologyError("parameter " + k + " must be a non-negative integer");
    return static_cast<std::uint32_t>(x);
  };

  if (model == "complete") return make_complete(as_u32("v"));
  if (model == "path") return make_path(as_u32("v"));
  if (model == "cycle") return make_cycle(as_u32("v"));
  if (model == "star") return make_star(as_u32("v"));
  if (model == "grid") return make_grid(as_u32("rows"), as_u32("cols"));
  if (model == "bipartite") return make_complete_bipartite(as_u32("a"), as_u32("b"));
  if (model == "two_cliques") return make_two_cliques_bridge(as_u32("a"), as_u32("b"));
  if (model == "tree") return make_random_tree(as_u32("v"), seed);
  if (model == "er") return make_er(as_u32("v"), need("p"), seed);
  if (model == "ba") return make_ba(as_u32("v"), as_u32("m"), seed);
  if (model == "ws") return make_ws(as_u32("v"), as_u32("k"), need("beta"), seed);
  throw TopologyError("unknown generator model '" + model + "'");
}

}  // namespace netrob
