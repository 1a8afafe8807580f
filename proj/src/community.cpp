#include "netrob/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "netrob/betweenness.hpp"
#include "netrob/components.hpp"
#include "netrob/rng.hpp"

namespace netrob {
namespace {

std::vector<uint32_t> densify(std::vector<uint32_t> labels, uint32_t* count) {
  std::vector<uint32_t> remap;
  std::vector<uint32_t> seen_at;  // dense id per raw label, lazily grown
  uint32_t next = 0;
  for (uint32_t& l : labels) {
    if (l >= seen_at.size()) seen_at.resize(l + 1, UINT32_MAX);
    if (seen_at[l] == UINT32_MAX) seen_at[l] = next++;
    l = seen_at[l];
  }
  *count = next;
  return labels;
}

void check_assignment(const Topology& t, const CommunityAssignment& a) {
  if (a.community.size() != t.node_count()) {
    throw TopologyError("community assignment does not cover the node set");
  }
  for (const uint32_t c : a.community) {
    if (c >= a.community_count) throw TopologyError("community id out of range");
  }
}

// One bisection attempt on `group` using the group modularity matrix
// B_ij = a_ij - k_i k_j / 2e - delta_ij d_i with d_i = deg_in_group(i) -
// k_i K_g / 2e. The leading eigenvector is found by shifted power iteration;
// splits are accepted only for a positive eigenvalue and a positive Q gain.
bool split_group(const Topology& t, const std::vector<double>& k, double two_e,
                 const std::vector<NodeId>& group, std::vector<uint32_t>& pos,
                 std::vector<uint8_t>& in_group, std::vector<NodeId>& side_a,
                 std::vector<NodeId>& side_b) {
  const size_t n = group.size();
  if (n < 2) return false;
  for (size_t i = 0; i < n; ++i) {
    pos[group[i]] = static_cast<uint32_t>(i);
    in_group[group[i]] = 1;
  }
  double kg = 0.0;
  for (const NodeId u : group) kg += k[u];
  std::vector<double> d(n);
  std::vector<double> deg_in(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (const Arc& a : t.out(group[i])) {
      if (in_group[a.to]) deg_in[i] += 1.0;
    }
    d[i] = deg_in[i] - k[group[i]] * kg / two_e;
  }
  double shift = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double ki = k[group[i]];
    shift = std::max(shift, deg_in[i] + ki * kg / two_e + std::abs(d[i]) + ki * ki / two_e);
  }

  const auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
    double kx = 0.0;
    for (size_t i = 0; i < n; ++i) kx += k[group[i]] * x[i];
    for (size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (const Arc& a : t.out(group[i])) {
        if (in_group[a.to]) acc += x[pos[a.to]];
      }
      y[i] = acc - k[group[i]] * kx / two_e - d[i] * x[i];
    }
  };

  std::vector<double> x(n);
  std::vector<double> y(n);
  double norm = 0.0;
  for (size_t i = 0; i < n; ++i) {
    // Deterministic jitter so the start vector is not an eigenvector itself.
    x[i] = 1.0 + 1e-3 * static_cast<double>((group[i] * 2654435761u) & 0xFFFFu) / 65536.0;
    norm += x[i] * x[i];
  }
  norm = std::sqrt(norm);
  for (double& xi : x) xi /= norm;

  double lambda = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (uint32_t iter = 0; iter < 10000; ++iter) {
    multiply(x, y);
    double xy = 0.0;
    double yy = 0.0;
    for (size_t i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      xy += x[i] * y[i];
      yy += y[i] * y[i];
    }
    lambda = xy - shift;  // Rayleigh quotient, x is unit length
    if (yy == 0.0) break;
    const double inv = 1.0 / std::sqrt(yy);
    for (size_t i = 0; i < n; ++i) x[i] = y[i] * inv;
    if (std::abs(lambda - prev) <= 1e-10) break;
    prev = lambda;
  }

  bool accept = lambda > 1e-9 * std::max(1.0, shift);
  if (accept) {
    std::vector<double> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = x[i] >= 0.0 ? 1.0 : -1.0;
    multiply(s, y);
    double gain = 0.0;
    for (size_t i = 0; i < n; ++i) gain += s[i] * y[i];
    gain /= 2.0 * two_e;
    if (gain <= 1e-12) {
      accept = false;
    } else {
      side_a.clear();
      side_b.clear();
      for (size_t i = 0; i < n; ++i) (s[i] > 0.0 ? side_a : side_b).push_back(group[i]);
      if (side_a.empty() || side_b.empty()) accept = false;
    }
  }
  for (const NodeId u : group) in_group[u] = 0;
  return accept;
}

}  // namespace

CommunityAssignment make_assignment(const Topology& t, std::vector<uint32_t> labels) {
  if (labels.size() != t.node_count()) {
    throw TopologyError("community labels must cover every node");
  }
  if (t.edge_count() == 0) throw TopologyError("modularity needs at least one edge");
  CommunityAssignment a;
  a.community = densify(std::move(labels), &a.community_count);
  const uint32_t c = a.community_count;
  a.mixing.assign(static_cast<size_t>(c) * c, 0.0);
  double total = 0.0;
  for (EdgeId e = 0; e < t.edge_count(); ++e) total += t.weight(e);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge ed = t.edge(e);
    const uint32_t cu = a.community[ed.u];
    const uint32_t cv = a.community[ed.v];
    const double frac = t.weight(e) / total;
    if (t.directed()) {
      a.mixing[static_cast<size_t>(cu) * c + cv] += frac;
    } else if (cu == cv) {
      a.mixing[static_cast<size_t>(cu) * c + cu] += frac;
    } else {
      a.mixing[static_cast<size_t>(cu) * c + cv] += 0.5 * frac;
      a.mixing[static_cast<size_t>(cv) * c + cu] += 0.5 * frac;
    }
  }
  double q = 0.0;
  for (uint32_t i = 0; i < c; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (uint32_t j = 0; j < c; ++j) {
      row += a.mixing[static_cast<size_t>(i) * c + j];
      col += a.mixing[static_cast<size_t>(j) * c + i];
    }
    q += a.mixing_at(i, i) - row * col;
  }
  a.q = q;
  return a;
}

double modularity_of(const Topology& t, const std::vector<uint32_t>& labels) {
  return make_assignment(t, labels).q;
}

CommunityAssignment detect_communities_spectral(const Topology& t) {
  if (t.directed()) throw TopologyError("spectral division applies to undirected graphs only");
  if (t.edge_count() == 0) throw TopologyError("spectral division needs at least one edge");
  const uint32_t v = t.node_count();
  std::vector<double> k(v);
  double two_e = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    k[i] = t.degree(i);
    two_e += k[i];
  }

  const ComponentReport comp = components(t);
  std::vector<std::vector<NodeId>> pending(comp.count);
  for (NodeId i = 0; i < v; ++i) pending[comp.comp[i]].push_back(i);

  std::vector<uint32_t> labels(v, 0);
  uint32_t next_label = 0;
  std::vector<uint32_t> pos(v, 0);
  std::vector<uint8_t> in_group(v, 0);
  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;
  while (!pending.empty()) {
    std::vector<NodeId> group = std::move(pending.back());
    pending.pop_back();
    if (split_group(t, k, two_e, group, pos, in_group, side_a, side_b)) {
      pending.push_back(side_a);
      pending.push_back(side_b);
    } else {
      for (const NodeId u : group) labels[u] = next_label;
      ++next_label;
    }
  }
  return make_assignment(t, std::move(labels));
}

CommunityAssignment detect_communities_edge_betweenness(const Topology& t,
                                                        std::optional<double> sample_fraction,
                                                        uint64_t seed) {
  if (t.directed()) {
    throw TopologyError("edge betweenness partitioning applies to undirected graphs only");
  }
  if (t.edge_count() == 0) {
    throw TopologyError("edge betweenness partitioning needs at least one edge");
  }
  const double f = sample_fraction.value_or(1.0);
  if (!(f > 0.0 && f <= 1.0)) throw TopologyError("sample fraction must lie in (0, 1]");
  const uint32_t v = t.node_count();

  std::vector<bool> drop(t.edge_count(), false);
  std::vector<uint32_t> best = components(t).comp;
  double best_q = modularity_of(t, best);
  const uint32_t want =
      f >= 1.0 ? v : std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(f * v)));

  std::vector<NodeId> src(v);
  for (NodeId i = 0; i < v; ++i) src[i] = i;

  uint32_t removed = 0;
  for (uint64_t round = 0; removed < t.edge_count(); ++round) {
    const Topology current = t.without_edges(drop);
    if (removed > 0) {
      const std::vector<uint32_t> comp = components(current).comp;
      const double q = modularity_of(t, comp);
      if (q > best_q + 1e-12) {
        best_q = q;
        best = comp;
      }
    }
    if (want < v) {
      Rng rng(substream(seed, round));
      src = rng.sample(v, want);
    }
    const Betweenness bw = brandes_betweenness(current, t.weighted(), &src);
    // Kept edges appear in ascending original order, so a strict comparison
    // breaks ties towards the lowest original edge id.
    size_t pick = 0;
    for (size_t e = 1; e < bw.edge.size(); ++e) {
      if (bw.edge[e] > bw.edge[pick]) pick = e;
    }
    uint32_t orig = 0;
    for (EdgeId e = 0, kept = 0; e < t.edge_count(); ++e) {
      if (drop[e]) continue;
      if (kept++ == pick) {
        orig = e;
        break;
      }
    }
    drop[orig] = true;
    ++removed;
  }
  // Fully disassembled state: every component is a single node.
  {
    const Topology current = t.without_edges(drop);
    const std::vector<uint32_t> comp = components(current).comp;
    const double q = modularity_of(t, comp);
    if (q > best_q + 1e-12) {
      best_q = q;
      best = comp;
    }
  }
  return make_assignment(t, std::move(best));
}

std::vector<double> zscore_within_module(const Topology& t, const CommunityAssignment& a) {
  check_assignment(t, a);
  const uint32_t v = t.node_count();
  std::vector<double> within(v, 0.0);
  for (NodeId i = 0; i < v; ++i) {
    for (const Arc& arc : t.out(i)) {
      if (a.community[arc.to] == a.community[i]) within[i] += 1.0;
    }
    if (t.directed()) {
      for (const Arc& arc : t.in(i)) {
        if (a.community[arc.to] == a.community[i]) within[i] += 1.0;
      }
    }
  }
  std::vector<double> sum(a.community_count, 0.0);
  std::vector<double> sum_sq(a.community_count, 0.0);
  std::vector<uint32_t> size(a.community_count, 0);
  for (NodeId i = 0; i < v; ++i) {
    const uint32_t c = a.community[i];
    sum[c] += within[i];
    sum_sq[c] += within[i] * within[i];
    ++size[c];
  }
  std::vector<double> z(v, 0.0);
  for (NodeId i = 0; i < v; ++i) {
    const uint32_t c = a.community[i];
    const double mean = sum[c] / size[c];
    const double var = std::max(0.0, sum_sq[c] / size[c] - mean * mean);
    const double sd = std::sqrt(var);
    z[i] = sd > 0.0 ? (within[i] - mean) / sd : 0.0;
  }
  return z;
}

std::vector<std::optional<double>> participation_coefficient(const Topology& t,
                                                             const CommunityAssignment& a) {
  check_assignment(t, a);
  const uint32_t v = t.node_count();
  std::vector<std::optional<double>> p(v);
  std::vector<double> cnt(a.community_count, 0.0);
  std::vector<uint32_t> touched;
  for (NodeId i = 0; i < v; ++i) {
    const uint32_t k = t.degree(i);
    if (k == 0) continue;  // isolated: no distribution to measure
    touched.clear();
    const auto tally = [&](NodeId to) {
      const uint32_t c = a.community[to];
      if (cnt[c] == 0.0) touched.push_back(c);
      cnt[c] += 1.0;
    };
    for (const Arc& arc : t.out(i)) tally(arc.to);
    if (t.directed()) {
      for (const Arc& arc : t.in(i)) tally(arc.to);
    }
    double acc = 0.0;
    for (const uint32_t c : touched) {
      const double frac = cnt[c] / k;
      acc += frac * frac;
      cnt[c] = 0.0;
    }
    p[i] = 1.0 - acc;
  }
  return p;
}

}  // namespace netrob
