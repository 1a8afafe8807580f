#include "netrob/adjacency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "netrob/rng.hpp"

namespace netrob {

DegreeView degree_metrics(const Topology& t) {
  const std::uint32_t v = t.node_count();
  DegreeView d;
  d.degree.resize(v);
  d.strength.resize(v);
  if (t.directed()) {
    d.in_degree.resize(v);
    d.out_degree.resize(v);
  }
  double sum = 0, sum_sq = 0;
  std::map<double, double> pk, ps;
  for (NodeId i = 0; i < v; ++i) {
    double k = t.degree(i);
    d.degree[i] = k;
    d.strength[i] = t.strength(i);
    if (t.directed()) {
      d.in_degree[i] = t.in_degree(i);
      d.out_degree[i] = t.out_degree(i);
    }
    sum += k;
    sum_sq += k * k;
    pk[k] += 1.0;
    ps[d.strength[i]] += 1.0;
  }
  d.mean_degree = sum / v;
  d.mean_square_degree = sum_sq / v;
  double var = 0;
  for (NodeId i = 0; i < v; ++i) {
    double dx = d.degree[i] - d.mean_degree;
    var += dx * dx;
  }
  d.degree_stdev = std::sqrt(var / v);
  for (auto& [k, c] : pk) d.degree_dist.emplace_back(k, c / v);
  for (auto& [s, c] : ps) d.strength_dist.emplace_back(s, c / v);
  return d;
}

double degree_entropy(const Topology& t, double* h_max) {
  DegreeView d = degree_metrics(t);
  double h = 0;
  for (auto& [k, p] : d.degree_dist)
    if (p > 0) h -= p * std::log(p);
  if (h_max) {
    std::uint32_t v = t.node_count();
    *h_max = v > 1 ? std::log(static_cast<double>(v - 1)) : 0.0;
  }
  return h;
}

double skewness(const Topology& t, std::uint64_t seed, std::uint32_t shuffles) {
  const std::uint32_t v = t.node_count();
  std::vector<double> k(v);
  double kbar = 0;
  bool ties = false;
  for (NodeId i = 0; i < v; ++i) {
    k[i] = t.degree(i);
    kbar += k[i];
  }
  kbar /= v;
  if (kbar == 0) return 1.0;  // edgeless: every ranking gives the regular value

  std::vector<NodeId> order(v);
  for (NodeId i = 0; i < v; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return k[a] > k[b]; });
  for (std::uint32_t i = 0; i + 1 < v; ++i)
    if (k[order[i]] == k[order[i + 1]]) ties = true;

  const double denom = kbar * (static_cast<double>(v) * (v + 1.0) / 2.0);
  auto eval = [&](const std::vector<NodeId>& ord) {
    double s = 0;
    for (std::uint32_t r = 0; r < v; ++r) s += (r + 1.0) * k[ord[r]];
    return s / denom;
  };
  if (!ties || shuffles <= 1) return eval(order);

  // shuffle within equal-degree groups only, keeping ranks valid
  double acc = 0;
  for (std::uint32_t rep = 0; rep < shuffles; ++rep) {
    Rng rng(substream(seed, rep));
    std::vector<NodeId> ord = order;
    std::uint32_t lo = 0;
    while (lo < v) {
      std::uint32_t hi = lo + 1;
      while (hi < v && k[ord[hi]] == k[ord[lo]]) ++hi;
      for (std::uint32_t i = hi - lo; i > 1; --i)
        std::swap(ord[lo + i - 1], ord[lo + rng.index(i)]);
      lo = hi;
    }
    acc += eval(ord);
  }
  return acc / shuffles;
}

double vulnerability_function(const Topology& t) {
  DegreeView d = degree_metrics(t);
  const double v = t.node_count();
  const double e = t.edge_count();
  return std::exp(d.degree_stdev / v + v - e - 2.0 + 2.0 / v);
}

std::optional<double> assortative_coefficient(const Topology& t) {
  if (t.edge_count() == 0) return std::nullopt;
  double sx = 0, sxx = 0, sxy = 0;
  const double n = 2.0 * t.edge_count();
  for (const Edge& e : t.edges()) {
    double ku = t.degree(e.u), kv = t.degree(e.v);
    sx += ku + kv;
    sxx += ku * ku + kv * kv;
    sxy += 2.0 * ku * kv;
  }
  double mean = sx / n;
  double var = sxx / n - mean * mean;
  if (var <= 1e-15) return std::nullopt;  // regular endpoint degrees
  double cov = sxy / n - mean * mean;
  return cov / var;
}

NeighborConnectivity neighbor_connectivity(const Topology& t, bool weighted) {
  const std::uint32_t v = t.node_count();
  NeighborConnectivity out;
  out.per_node.resize(v);
  std::map<double, std::pair<double, double>> acc;  // k -> (sum, count)
  for (NodeId i = 0; i < v; ++i) {
    double k = t.degree(i);
    if (k == 0) continue;
    double val = 0;
    if (weighted) {
      double s = t.strength(i);
      for (const Arc& a : t.out(i)) val += t.weight(a.edge) * t.degree(a.to);
      if (t.directed())
        for (const Arc& a : t.in(i)) val += t.weight(a.edge) * t.degree(a.to);
      val /= s;
    } else {
      for (const Arc& a : t.out(i)) val += t.degree(a.to);
      if (t.directed())
        for (const Arc& a : t.in(i)) val += t.degree(a.to);
      val /= k;
    }
    out.per_node[i] = val;
    auto& [sum, cnt] = acc[k];
    sum += val;
    cnt += 1;
  }
  for (auto& [k, sc] : acc) out.by_degree.emplace_back(k, sc.first / sc.second);
  return out;
}

Topology degree_preserving_shuffle(const Topology& t, std::uint64_t seed,
                                   std::uint32_t attempts_per_edge) {
  if (t.directed())
    throw TopologyError("degree-preserving shuffle needs an undirected topology");
  std::vector<Edge> es = t.edges();
  if (es.size() < 2) return t;
  Rng rng(seed);
  std::set<std::pair<NodeId, NodeId>> present;
  for (const Edge& e : es) present.insert({e.u, e.v});
  auto norm = [](NodeId a, NodeId b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  const std::uint64_t attempts =
      static_cast<std::uint64_t>(attempts_per_edge) * es.size();
  for (std::uint64_t it = 0; it < attempts; ++it) {
    std::size_t i = rng.index(es.size());
    std::size_t j = rng.index(es.size());
    if (i == j) continue;
    NodeId a = es[i].u, b = es[i].v, c = es[j].u, d = es[j].v;
    // swap to (a,d), (c,b)
    if (a == d || c == b || a == c || b == d) continue;
    auto e1 = norm(a, d), e2 = norm(c, b);
    if (present.count(e1) || present.count(e2)) continue;
    present.erase(norm(a, b));
    present.erase(norm(c, d));
    present.insert(e1);
    present.insert(e2);
    es[i] = {e1.first, e1.second};
    es[j] = {e2.first, e2.second};
  }
  std::vector<double> ws;
  if (t.weighted()) ws = t.weights();  // weights stay attached to edge slots
  return Topology::build(t.node_count(), false, std::move(es), std::move(ws));
}

RichClub rich_club(const Topology& t, bool normalized, std::uint64_t seed,
                   std::uint32_t randomizations) {
  const Topology& g = t;  // rich club reads the undirected structure
  const std::uint32_t v = g.node_count();
  RichClub out;

  std::vector<double> deg(v), str(v);
  for (NodeId i = 0; i < v; ++i) {
    deg[i] = g.degree(i);
    str[i] = g.strength(i);
  }
  std::set<double> degree_levels(deg.begin(), deg.end());

  auto phi_at = [](const Topology& gg, const std::vector<double>& score,
                   double level) -> std::optional<double> {
    std::vector<NodeId> club;
    for (NodeId i = 0; i < gg.node_count(); ++i)
      if (score[i] > level) club.push_back(i);
    if (club.size() < 2) return std::nullopt;
    std::vector<std::uint8_t> in_club(gg.node_count(), 0);
    for (NodeId i : club) in_club[i] = 1;
    double internal = 0;
    for (const Edge& e : gg.edges())
      if (in_club[e.u] && in_club[e.v]) internal += 1;
    double n = static_cast<double>(club.size());
    return 2.0 * internal / (n * (n - 1.0));
  };

  for (double k : degree_levels) {
    auto p = phi_at(g, deg, k);
    if (p) out.phi.emplace_back(k, *p);
  }

  if (normalized && !out.phi.empty()) {
    std::map<double, std::pair<double, double>> ran;  // k -> (sum, n)
    for (std::uint32_t r = 0; r < randomizations; ++r) {
      Topology shuffled = degree_preserving_shuffle(g, substream(seed, r));
      std::vector<double> sdeg(v);
      for (NodeId i = 0; i < v; ++i) sdeg[i] = shuffled.degree(i);
      for (auto& [k, phi] : out.phi) {
        auto p = phi_at(shuffled, sdeg, k);
        if (p) {
          ran[k].first += *p;
          ran[k].second += 1;
        }
      }
    }
    for (auto& [k, phi] : out.phi) {
      auto it = ran.find(k);
      if (it != ran.end() && it->second.second > 0 && it->second.first > 0) {
        double mean_ran = it->second.first / it->second.second;
        out.rho.emplace_back(k, phi / mean_ran);
      }
    }
  }

  if (g.weighted()) {
    std::set<double> strength_levels(str.begin(), str.end());
    for (double s : strength_levels) {
      std::vector<NodeId> club;
      for (NodeId i = 0; i < v; ++i)
        if (str[i] > s) club.push_back(i);
      if (club.size() < 2) continue;
      std::vector<std::uint8_t> in_club(v, 0);
      for (NodeId i : club) in_club[i] = 1;
      double internal = 0, total = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in_club[ed.u] && in_club[ed.v]) internal += 2.0 * g.weight(e);
      }
      for (NodeId i : club) total += str[i];
      if (total > 0) out.phi_weighted.emplace_back(s, internal / total);
    }
  }
  return out;
}

std::vector<double> edge_degree_min(const Topology& t) {
  std::vector<double> out(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    out[e] = std::min(t.degree(t.edge(e).u), t.degree(t.edge(e).v));
  return out;
}

std::vector<double> edge_degree_product(const Topology& t) {
  std::vector<double> out(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    out[e] = static_cast<double>(t.degree(t.edge(e).u)) *
             static_cast<double>(t.degree(t.edge(e).v));
  return out;
}

}  // namespace netrob
