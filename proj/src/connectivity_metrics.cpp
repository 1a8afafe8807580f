#include "netrob/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <vector>

#include "netrob/components.hpp"
#include "netrob/paths.hpp"
#include "netrob/rng.hpp"

namespace netrob {
namespace {

// Doubly linked gain buckets, one band per side, for O(1) best-move lookup.
struct GainBuckets {
  int32_t kmax = 0;
  int32_t width = 0;
  std::vector<int32_t> head;
  std::vector<int32_t> nxt;
  std::vector<int32_t> prv;  // node index, or -(bucket+2) at the list front
  std::vector<int32_t> gain;
  int32_t top[2] = {-1, -1};

  void init(uint32_t v, int32_t km) {
    kmax = km;
    width = 2 * km + 1;
    head.assign(static_cast<size_t>(2) * width, -1);
    nxt.assign(v, -1);
    prv.assign(v, -1);
    gain.assign(v, 0);
    top[0] = top[1] = -1;
  }
  int32_t slot(int side, int32_t g) const { return side * width + g + kmax; }
  void insert(uint32_t u, int side, int32_t g) {
    gain[u] = g;
    const int32_t b = slot(side, g);
    nxt[u] = head[b];
    prv[u] = -b - 2;
    if (head[b] >= 0) prv[head[b]] = static_cast<int32_t>(u);
    head[b] = static_cast<int32_t>(u);
    if (g + kmax > top[side]) top[side] = g + kmax;
  }
  void erase(uint32_t u) {
    const int32_t p = prv[u];
    const int32_t n = nxt[u];
    if (p <= -2) {
      head[-(p + 2)] = n;
    } else {
      nxt[p] = n;
    }
    if (n >= 0) prv[n] = p;
    nxt[u] = prv[u] = -1;
  }
  void adjust(uint32_t u, int side, int32_t delta) {
    const int32_t g = gain[u] + delta;
    erase(u);
    insert(u, side, g);
  }
  // Best unlocked node on `side`, or -1.
  int32_t best(int side) {
    for (int32_t gi = top[side]; gi >= 0; --gi) {
      if (head[side * width + gi] >= 0) {
        top[side] = gi;
        return head[side * width + gi];
      }
    }
    top[side] = -1;
    return -1;
  }
};

uint32_t cut_of(const Topology& t, const std::vector<uint8_t>& side) {
  uint32_t c = 0;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge ed = t.edge(e);
    c += side[ed.u] != side[ed.v];
  }
  return c;
}

struct FmState {
  std::vector<uint8_t> side;
  uint32_t size_a = 0;
  uint32_t cut = 0;
  double value = 0.0;  // objective at this state
};

// The pass accepts the state optimizing the caller's quantity, not always the
// raw cut: Ratio is cut over the smaller side, Quotient the boundary-node
// count over interior times far side.
enum class FmGoal { Cut, Ratio, Quotient };

uint32_t dist_to(uint32_t a, uint32_t m) { return a > m ? a - m : m - a; }

// `cross` counts each node's neighbors across the divide; boundary[s] the
// side-s nodes with at least one such neighbor.
double fm_value(FmGoal goal, const Topology& t, uint32_t cut, uint32_t size_a,
                const uint32_t boundary[2]) {
  const uint32_t v = t.node_count();
  switch (goal) {
    case FmGoal::Cut:
      return cut;
    case FmGoal::Ratio:
      return static_cast<double>(cut) / std::min(size_a, v - size_a);
    case FmGoal::Quotient: {
      double best = std::numeric_limits<double>::infinity();
      const uint32_t size[2] = {size_a, v - size_a};
      for (int s = 0; s < 2; ++s) {
        const uint32_t interior = size[s] - boundary[s];
        if (boundary[s] > 0 && interior > 0 && size[1 - s] > 0) {
          best = std::min(best, static_cast<double>(boundary[s]) /
                                    (static_cast<double>(interior) * size[1 - s]));
        }
      }
      return best;
    }
  }
  return cut;
}

// One seeded restart: random balanced start, then passes of locked max-gain
// moves until a pass stops improving the objective. With an exact size
// requirement (lo == hi) moves may overshoot by one node, but only on-target
// states are eligible as pass results.
FmState fm_run(const Topology& t, FmGoal goal, uint32_t m, uint32_t lo, uint32_t hi, Rng& rng) {
  const uint32_t v = t.node_count();
  const bool exact = lo == hi;
  const uint32_t move_lo = exact && lo > 0 ? lo - 1 : lo;
  const uint32_t move_hi = exact ? std::min(v, hi + 1) : hi;

  FmState st;
  st.side.assign(v, 1);
  st.size_a = std::clamp(m, lo, hi);
  for (const uint32_t u : rng.sample(v, st.size_a)) st.side[u] = 0;
  st.cut = cut_of(t, st.side);

  int32_t kmax = 1;
  std::vector<uint32_t> cross(v, 0);
  uint32_t boundary[2] = {0, 0};
  for (NodeId i = 0; i < v; ++i) {
    kmax = std::max(kmax, static_cast<int32_t>(t.degree(i)));
    for (const Arc& a : t.out(i)) cross[i] += st.side[a.to] != st.side[i];
    if (cross[i] > 0) ++boundary[st.side[i]];
  }
  st.value = fm_value(goal, t, st.cut, st.size_a, boundary);

  GainBuckets bk;
  std::vector<uint8_t> locked(v);
  std::vector<uint32_t> moves;
  moves.reserve(v);

  bool improved = true;
  while (improved) {
    improved = false;
    bk.init(v, kmax);
    for (NodeId u = 0; u < v; ++u) {
      int32_t g = 0;
      for (const Arc& a : t.out(u)) g += st.side[a.to] != st.side[u] ? 1 : -1;
      bk.insert(u, st.side[u], g);
    }
    locked.assign(v, 0);
    moves.clear();

    uint32_t cur_cut = st.cut;
    uint32_t cur_a = st.size_a;
    double best_value = st.value;
    uint32_t best_dist = dist_to(st.size_a, m);
    size_t best_prefix = 0;

    while (true) {
      const bool may_shrink = cur_a > move_lo;
      const bool may_grow = cur_a < move_hi;
      const int32_t from_a = may_shrink ? bk.best(0) : -1;
      const int32_t from_b = may_grow ? bk.best(1) : -1;
      int side = -1;
      if (from_a >= 0 && (from_b < 0 || bk.gain[from_a] >= bk.gain[from_b])) {
        side = 0;
      } else if (from_b >= 0) {
        side = 1;
      }
      if (side < 0) break;
      const uint32_t u = static_cast<uint32_t>(side == 0 ? from_a : from_b);
      const int32_t g = bk.gain[u];
      bk.erase(u);
      locked[u] = 1;
      const uint8_t old_side = st.side[u];
      st.side[u] ^= 1;
      cur_a += side == 0 ? -1u : 1u;
      cur_cut = static_cast<uint32_t>(static_cast<int64_t>(cur_cut) - g);
      moves.push_back(u);
      uint32_t now_internal = 0;
      for (const Arc& a : t.out(u)) {
        const NodeId w = a.to;
        const bool becomes_cross = st.side[w] == old_side;  // w stayed on u's old side
        if (becomes_cross) {
          if (cross[w] == 0) ++boundary[st.side[w]];
          ++cross[w];
        } else {
          --cross[w];
          if (cross[w] == 0) --boundary[st.side[w]];
          ++now_internal;
        }
        if (!locked[w]) bk.adjust(w, st.side[w], becomes_cross ? 2 : -2);
      }
      const uint32_t own_cross = t.degree(u) - now_internal;
      if (cross[u] > 0) --boundary[old_side];
      cross[u] = own_cross;
      if (cross[u] > 0) ++boundary[st.side[u]];
      if (cur_a >= lo && cur_a <= hi) {
        const double val = fm_value(goal, t, cur_cut, cur_a, boundary);
        const uint32_t d = dist_to(cur_a, m);
        if (val < best_value || (val == best_value && d < best_dist)) {
          best_value = val;
          best_dist = d;
          best_prefix = moves.size();
        }
      }
    }

    for (size_t j = moves.size(); j-- > best_prefix;) st.side[moves[j]] ^= 1;
    improved = best_value < st.value;
    st.value = best_value;
    st.size_a = 0;
    for (NodeId u = 0; u < v; ++u) st.size_a += st.side[u] == 0;
    st.cut = cut_of(t, st.side);
    // Cross counts must match the rolled-back sides before the next pass.
    boundary[0] = boundary[1] = 0;
    for (NodeId i = 0; i < v; ++i) {
      cross[i] = 0;
      for (const Arc& a : t.out(i)) cross[i] += st.side[a.to] != st.side[i];
      if (cross[i] > 0) ++boundary[st.side[i]];
    }
  }
  return st;
}

FmState fm_best_of_restarts(const Topology& t, FmGoal goal, uint32_t m, uint32_t lo, uint32_t hi,
                            uint64_t seed) {
  FmState best;
  bool have = false;
  for (uint64_t r = 0; r < 8; ++r) {
    Rng rng(substream(seed, r));
    FmState st = fm_run(t, goal, m, lo, hi, rng);
    if (!have || st.value < best.value ||
        (st.value == best.value && dist_to(st.size_a, m) < dist_to(best.size_a, m))) {
      best = std::move(st);
      have = true;
    }
  }
  return best;
}

struct FmBounds {
  uint32_t m;
  uint32_t lo;
  uint32_t hi;
};

FmBounds fm_bounds(const Topology& t, double target_ratio, uint32_t balance) {
  if (t.directed()) throw TopologyError("bi-partitioning applies to undirected graphs only");
  if (!(target_ratio > 0.0 && target_ratio <= 0.5)) {
    throw TopologyError("target ratio must lie in (0, 0.5]");
  }
  if (!is_connected(t)) throw TopologyError("bi-partitioning needs a connected graph");
  const uint32_t v = t.node_count();
  FmBounds b;
  b.m = static_cast<uint32_t>(std::llround(target_ratio * v));
  b.lo = std::max<uint32_t>(1, b.m > balance ? b.m - balance : 1);
  b.hi = std::min(v > 0 ? v - 1 : 0, b.m + balance);
  if (b.lo > b.hi) throw TopologyError("balance slack admits no feasible split");
  return b;
}

constexpr double kRatioGrid[] = {0.05, 0.15, 0.25, 0.35, 0.45};

struct Dsu {
  std::vector<uint32_t> parent;
  explicit Dsu(uint32_t n) : parent(n) {
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

// All-subset reliability coefficients: a[j] = number of j-edge subsets whose
// survival keeps the terminals in one component.
std::vector<double> reliability_coefficients(uint32_t v, const std::vector<Edge>& edges,
                                             const std::vector<NodeId>& terminals) {
  const uint32_t e = static_cast<uint32_t>(edges.size());
  std::vector<double> a(e + 1, 0.0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
    Dsu dsu(v);
    for (uint32_t j = 0; j < e; ++j) {
      if (mask >> j & 1) dsu.unite(edges[j].u, edges[j].v);
    }
    const uint32_t root = dsu.find(terminals[0]);
    bool joined = true;
    for (const NodeId k : terminals) {
      if (dsu.find(k) != root) {
        joined = false;
        break;
      }
    }
    if (joined) a[std::popcount(mask)] += 1.0;
  }
  return a;
}

double reliability_eval(const std::vector<double>& a, uint32_t e, double p) {
  double total = 0.0;
  for (uint32_t j = 0; j <= e; ++j) {
    if (a[j] == 0.0) continue;
    total += a[j] * std::pow(p, j) * std::pow(1.0 - p, e - j);
  }
  return total;
}

std::vector<NodeId> all_nodes(uint32_t v) {
  std::vector<NodeId> k(v);
  for (NodeId i = 0; i < v; ++i) k[i] = i;
  return k;
}

bool residual_connected(const Topology& t, const std::vector<uint8_t>& removed) {
  const uint32_t v = t.node_count();
  NodeId start = v;
  uint32_t kept = 0;
  for (NodeId i = 0; i < v; ++i) {
    if (!removed[i]) {
      if (start == v) start = i;
      ++kept;
    }
  }
  if (kept <= 1) return true;  // a single survivor still counts as connected
  std::vector<uint8_t> seen(v, 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  uint32_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const Arc& a : t.out(u)) {
      if (!removed[a.to] && !seen[a.to]) {
        seen[a.to] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
    if (t.directed()) {
      for (const Arc& a : t.in(u)) {
        if (!removed[a.to] && !seen[a.to]) {
          seen[a.to] = 1;
          ++reached;
          stack.push_back(a.to);
        }
      }
    }
  }
  return reached == kept;
}

}  // namespace

PartitionReport fm_partition(const Topology& t, double target_ratio, uint32_t balance,
                             uint64_t seed) {
  const FmBounds b = fm_bounds(t, target_ratio, balance);
  const uint32_t v = t.node_count();
  FmState best = fm_best_of_restarts(t, FmGoal::Cut, b.m, b.lo, b.hi, seed);

  PartitionReport rep;
  rep.side = std::move(best.side);
  rep.side_a_size = best.size_a;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge ed = t.edge(e);
    if (rep.side[ed.u] != rep.side[ed.v]) rep.cut_edges.push_back(e);
  }
  rep.cut_size = static_cast<double>(rep.cut_edges.size());
  rep.ratio = static_cast<double>(std::min(best.size_a, v - best.size_a)) / v;
  rep.slack = balance;
  rep.objective = rep.cut_size;
  return rep;
}

MetricResult cheeger_approx(const Topology& t, uint64_t seed) {
  MetricResult r;
  r.key = "cheeger_approx";
  r.codomain = Codomain::nonneg();
  const uint32_t v = t.node_count();
  if (v < 2) return MetricResult::undefined(r.key, r.kind, "no admissible side below half the nodes");
  if (!is_connected(t)) {
    r.value = 0.0;
    return r;
  }
  const uint32_t c = std::max<uint32_t>(1, static_cast<uint32_t>(std::llround(0.05 * v)));
  double best = std::numeric_limits<double>::infinity();
  double best_cut = 0.0;
  double best_side = 0.0;
  for (size_t i = 0; i < std::size(kRatioGrid); ++i) {
    const FmBounds b = fm_bounds(t, kRatioGrid[i], c);
    const FmState st = fm_best_of_restarts(t, FmGoal::Ratio, b.m, b.lo, b.hi, substream(seed, i));
    if (st.value < best) {
      best = st.value;
      best_cut = st.cut;
      best_side = std::min(st.size_a, v - st.size_a);
    }
  }
  r.value = best;
  r.extras.push_back({"cut_size", best_cut});
  r.extras.push_back({"side_size", best_side});
  return r;
}

MetricResult sparsity_approx(const Topology& t, uint64_t seed) {
  MetricResult r;
  r.key = "sparsity_approx";
  r.codomain = Codomain::nonneg();
  if (t.directed()) throw TopologyError("sparsity applies to undirected graphs only");
  if (t.node_count() < 3) throw TopologyError("sparsity needs at least three nodes");
  if (!is_connected(t)) throw TopologyError("sparsity needs a connected graph");
  const uint32_t v = t.node_count();
  const uint32_t c = std::max<uint32_t>(1, static_cast<uint32_t>(std::llround(0.05 * v)));
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < std::size(kRatioGrid); ++i) {
    const FmBounds b = fm_bounds(t, kRatioGrid[i], c);
    const FmState st = fm_best_of_restarts(t, FmGoal::Quotient, b.m, b.lo, b.hi, substream(seed, i));
    best = std::min(best, st.value);
  }
  if (!std::isfinite(best)) {
    return MetricResult::undefined(r.key, r.kind, "no separating node set found");
  }
  r.value = best;
  return r;
}

namespace {

std::optional<double> ldr_of_ball(const Topology& t, const std::vector<NodeId>& env,
                                  double splitting, uint64_t seed) {
  if (env.size() < 2) return std::nullopt;
  std::vector<bool> keep(t.node_count(), false);
  for (const NodeId u : env) keep[u] = true;
  Topology sub = t.induced(keep);
  if (sub.directed()) sub = sub.undirected_view();
  const PartitionReport p = fm_partition(sub, splitting, 0, seed);
  return p.cut_size;
}

}  // namespace

std::optional<double> local_delay_resilience_at(const Topology& t, NodeId i, uint32_t h,
                                                uint64_t seed, double splitting) {
  if (h < 1) throw TopologyError("environment radius must be at least one hop");
  if (i >= t.node_count()) throw TopologyError("node out of range");
  std::vector<NodeId> env;
  if (!t.directed()) {
    env = ball(t, i, h);
  } else {
    const auto dist = policy_distance_matrix(t);
    for (NodeId j = 0; j < t.node_count(); ++j) {
      if (dist[i][j] <= h) env.push_back(j);
    }
  }
  return ldr_of_ball(t, env, splitting, seed);
}

MetricResult local_delay_resilience(const Topology& t, uint32_t h, uint64_t seed,
                                    double splitting) {
  if (h < 1) throw TopologyError("environment radius must be at least one hop");
  MetricResult r;
  r.key = "local_delay_resilience";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  const uint32_t v = t.node_count();
  r.node_values.assign(v, std::nullopt);
  std::vector<std::vector<double>> policy;
  if (t.directed()) policy = policy_distance_matrix(t);
  double sum = 0.0;
  uint32_t defined = 0;
  double ball_total = 0.0;
  std::vector<NodeId> env;
  for (NodeId i = 0; i < v; ++i) {
    env.clear();
    if (!t.directed()) {
      env = ball(t, i, h);
    } else {
      for (NodeId j = 0; j < v; ++j) {
        if (policy[i][j] <= h) env.push_back(j);
      }
    }
    ball_total += static_cast<double>(env.size());
    const std::optional<double> ri = ldr_of_ball(t, env, splitting, substream(seed, i));
    if (ri) {
      r.node_values[i] = *ri;
      sum += *ri;
      ++defined;
    }
  }
  if (defined > 0) r.value = sum / defined;
  r.extras.push_back({"mean_environment_size", v > 0 ? ball_total / v : 0.0});
  return r;
}

MetricResult percolation_threshold(const Topology& t) {
  MetricResult r;
  r.key = "percolation_threshold";
  r.codomain = Codomain::unit();
  const uint32_t v = t.node_count();
  double k1 = 0.0;
  double k2 = 0.0;
  for (NodeId i = 0; i < v; ++i) {
    const double k = t.degree(i);
    k1 += k;
    k2 += k * k;
  }
  if (v == 0 || k1 == 0.0) {
    return MetricResult::undefined(r.key, r.kind, "graph has no edges");
  }
  const double kappa = k2 / k1;
  if (kappa <= 1.0) {
    return MetricResult::undefined(r.key, r.kind, "degree ratio below the threshold regime");
  }
  const double survive = std::clamp(1.0 / (kappa - 1.0), 0.0, 1.0);
  r.value = 1.0 - survive;
  r.extras.push_back({"degree_ratio", kappa});
  r.extras.push_back({"critical_fraction", survive});
  return r;
}

MetricResult reliability_polynomial(const Topology& t, const std::vector<NodeId>& terminals,
                                    double p, uint64_t seed) {
  MetricResult r;
  r.key = "reliability";
  r.codomain = Codomain::unit();
  if (!(p >= 0.0 && p <= 1.0)) throw TopologyError("edge reliability must lie in [0, 1]");
  for (const NodeId k : terminals) {
    if (k >= t.node_count()) throw TopologyError("terminal outside the node set");
  }
  std::vector<NodeId> k = terminals.empty() ? all_nodes(t.node_count()) : terminals;
  if (k.empty() || t.node_count() == 0) {
    return MetricResult::undefined(r.key, r.kind, "empty terminal set");
  }
  const uint32_t e = t.edge_count();
  if (e <= 20) {
    const std::vector<double> a = reliability_coefficients(t.node_count(), t.edges(), k);
    r.value = reliability_eval(a, e, p);
    for (int i = 0; i <= 10; ++i) {
      const double pi = i / 10.0;
      r.curve.push_back({pi, reliability_eval(a, e, pi)});
    }
    r.extras.push_back({"exact", 1.0});
    return r;
  }
  const uint32_t samples = 100000;
  Rng rng(substream(seed, 0));
  uint32_t hits = 0;
  for (uint32_t s = 0; s < samples; ++s) {
    Dsu dsu(t.node_count());
    for (EdgeId j = 0; j < e; ++j) {
      if (rng.chance(p)) {
        const Edge ed = t.edge(j);
        dsu.unite(ed.u, ed.v);
      }
    }
    const uint32_t root = dsu.find(k[0]);
    bool joined = true;
    for (const NodeId kk : k) {
      if (dsu.find(kk) != root) {
        joined = false;
        break;
      }
    }
    hits += joined;
  }
  const double rate = static_cast<double>(hits) / samples;
  r.value = rate;
  r.extras.push_back({"exact", 0.0});
  r.extras.push_back({"samples", static_cast<double>(samples)});
  r.extras.push_back({"ci95_halfwidth", 1.96 * std::sqrt(rate * (1.0 - rate) / samples)});
  return r;
}

std::vector<uint32_t> reliability_edge_ranking(const Topology& t,
                                               const std::vector<NodeId>& terminals) {
  const uint32_t e = t.edge_count();
  if (e == 0 || e > 20) throw TopologyError("exact edge ranking handles 1 to 20 edges");
  for (const NodeId k : terminals) {
    if (k >= t.node_count()) throw TopologyError("terminal outside the node set");
  }
  const std::vector<NodeId> k = terminals.empty() ? all_nodes(t.node_count()) : terminals;
  const uint32_t v = t.node_count();

  std::vector<std::vector<double>> del_curve(e);
  std::vector<std::vector<double>> con_curve(e);
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(i / 20.0);

  for (EdgeId i = 0; i < e; ++i) {
    const Edge gone = t.edge(i);
    std::vector<Edge> rest;
    for (EdgeId j = 0; j < e; ++j) {
      if (j != i) rest.push_back(t.edge(j));
    }
    const std::vector<double> da = reliability_coefficients(v, rest, k);
    for (const double p : grid) del_curve[i].push_back(reliability_eval(da, e - 1, p));

    // Contract i: fold v into u, drop the loops this creates.
    std::vector<Edge> merged;
    for (const Edge& ed : rest) {
      Edge m = ed;
      if (m.u == gone.v) m.u = gone.u;
      if (m.v == gone.v) m.v = gone.u;
      if (m.u != m.v) merged.push_back(m);
    }
    std::vector<NodeId> mk;
    for (NodeId kk : k) {
      if (kk == gone.v) kk = gone.u;
      if (std::find(mk.begin(), mk.end(), kk) == mk.end()) mk.push_back(kk);
    }
    const std::vector<double> ca = reliability_coefficients(v, merged, mk);
    for (const double p : grid) {
      con_curve[i].push_back(reliability_eval(ca, static_cast<uint32_t>(merged.size()), p));
    }
  }

  std::vector<uint32_t> dominated(e, 0);
  for (EdgeId i = 0; i < e; ++i) {
    for (EdgeId h = 0; h < e; ++h) {
      if (i == h) continue;
      bool wins = true;
      for (size_t g = 0; g < grid.size(); ++g) {
        if (del_curve[i][g] < del_curve[h][g] - 1e-12 ||
            con_curve[i][g] > con_curve[h][g] + 1e-12) {
          wins = false;
          break;
        }
      }
      if (wins) ++dominated[i];
    }
  }
  return dominated;
}

MetricResult partition_resilience_factor(const Topology& t, uint64_t seed) {
  MetricResult r;
  r.key = "partition_resilience_factor";
  r.codomain = Codomain::unit();
  const uint32_t v = t.node_count();
  if (v < 3) return MetricResult::undefined(r.key, r.kind, "needs at least three nodes");

  std::vector<double> k_frac;  // k(i) for i = 2 .. v-1
  if (v <= 16) {
    std::vector<uint64_t> disc(v, 0);
    std::vector<uint64_t> total(v, 0);
    std::vector<uint8_t> removed(v);
    for (uint32_t mask = 1; mask < (1u << v); ++mask) {
      const uint32_t sz = static_cast<uint32_t>(std::popcount(mask));
      if (sz < 2 || sz > v - 1) continue;
      for (NodeId i = 0; i < v; ++i) removed[i] = (mask >> i) & 1;
      ++total[sz];
      if (!residual_connected(t, removed)) ++disc[sz];
    }
    for (uint32_t i = 2; i <= v - 1; ++i) {
      k_frac.push_back(total[i] > 0 ? static_cast<double>(disc[i]) / total[i] : 0.0);
      r.curve.push_back({static_cast<double>(i), k_frac.back()});
    }
    r.value = 0.0;
    for (const double f : k_frac) *r.value += f;
    *r.value /= v - 2;
    r.extras.push_back({"exact", 1.0});
    return r;
  }

  // Sampled estimate: up to 60 removal sizes, 500 draws each, trapezoid sum.
  std::vector<uint32_t> sizes;
  if (v - 2 <= 60) {
    for (uint32_t i = 2; i <= v - 1; ++i) sizes.push_back(i);
  } else {
    for (uint32_t s = 0; s < 60; ++s) {
      const uint32_t i = 2 + static_cast<uint32_t>(
                                 std::llround(static_cast<double>(s) * (v - 3) / 59.0));
      if (sizes.empty() || sizes.back() != i) sizes.push_back(i);
    }
  }
  const uint32_t samples = 500;
  std::vector<uint8_t> removed(v);
  std::vector<double> ks;
  for (size_t idx = 0; idx < sizes.size(); ++idx) {
    Rng rng(substream(seed, idx));
    uint32_t disc = 0;
    for (uint32_t s = 0; s < samples; ++s) {
      std::fill(removed.begin(), removed.end(), 0);
      for (const uint32_t u : rng.sample(v, sizes[idx])) removed[u] = 1;
      if (!residual_connected(t, removed)) ++disc;
    }
    ks.push_back(static_cast<double>(disc) / samples);
    r.curve.push_back({static_cast<double>(sizes[idx]), ks.back()});
  }
  double integral = 0.0;
  for (size_t idx = 0; idx + 1 < sizes.size(); ++idx) {
    integral += 0.5 * (ks[idx] + ks[idx + 1]) * (sizes[idx + 1] - sizes[idx]);
  }
  // Treat each sampled size as covering its gap; endpoints count half a step.
  integral += 0.5 * (ks.front() + ks.back());
  r.value = std::clamp(integral / (v - 2), 0.0, 1.0);
  r.extras.push_back({"exact", 0.0});
  r.extras.push_back({"samples_per_size", static_cast<double>(samples)});
  return r;
}

DisconnectionStats disconnection_stats(const Topology& t) {
  DisconnectionStats s;
  const uint32_t v = t.node_count();
  if (v == 0) return s;
  const ComponentReport comp = components(t);
  s.component_count = comp.count;
  s.largest_fraction = static_cast<double>(comp.largest_size()) / v;
  s.mean_component_size = static_cast<double>(v) / comp.count;

  std::vector<double> class_nodes;  // index c-1
  for (const uint32_t size : comp.sizes) {
    uint32_t c = 1;
    uint64_t bound = 10;
    while (size > bound) {
      ++c;
      bound *= 10;
    }
    if (class_nodes.size() < c) class_nodes.resize(c, 0.0);
    class_nodes[c - 1] += size;
  }
  for (size_t c = 0; c < class_nodes.size(); ++c) {
    if (class_nodes[c] > 0.0) {
      s.class_frequency.push_back({static_cast<double>(c + 1), class_nodes[c] / v});
    }
  }

  if (v < 2) {
    s.reachability = 1.0;
    return s;
  }
  if (!t.directed()) {
    double pairs = 0.0;
    for (const uint32_t size : comp.sizes) {
      pairs += static_cast<double>(size) * (size - 1.0);
    }
    s.reachability = pairs / (static_cast<double>(v) * (v - 1.0));
  } else {
    double pairs = 0.0;
    std::vector<uint8_t> seen(v);
    std::vector<NodeId> stack;
    for (NodeId i = 0; i < v; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, i);
      seen[i] = 1;
      uint32_t reached = 0;
      while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const Arc& a : t.out(u)) {
          if (!seen[a.to]) {
            seen[a.to] = 1;
            ++reached;
            stack.push_back(a.to);
          }
        }
      }
      pairs += reached;
    }
    s.reachability = pairs / (static_cast<double>(v) * (v - 1.0));
  }
  return s;
}

}  // namespace netrob
