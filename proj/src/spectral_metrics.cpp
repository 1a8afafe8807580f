#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "netrob/components.hpp"
#include "netrob/distance.hpp"
#include "netrob/parallel.hpp"
#include "netrob/spectral.hpp"

namespace netrob {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd dense_adjacency(const Topology& t, bool use_weights) {
  const std::uint32_t v = t.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    const double w = use_weights ? t.weight(e) : 1.0;
    a(ed.u, ed.v) += w;
    if (!t.directed()) a(ed.v, ed.u) += w;
  }
  return a;
}

bool strongly_connected(const Topology& t) {
  if (!t.directed()) return is_connected(t);
  return components(t, true).count == 1;
}

// log(sinh x) without overflow, x > 0
double log_sinh(double x) {
  if (x < 1e-8) return std::log(x);
  return x - std::numbers::ln2_v<double> + std::log1p(-std::exp(-2.0 * x));
}

struct LinFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 1;
  bool degenerate = false;
};

LinFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinFit f;
  if (sxx <= 1e-18 * n) {
    f.degenerate = true;
    f.slope = 0.5;  // any line through the common point fits; keep the GE slope
    f.intercept = my - 0.5 * mx;
    return f;
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (syy > 0) {
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (f.intercept + f.slope * x[i]);
      ss_res += r * r;
    }
    f.r2 = 1.0 - ss_res / syy;
  }
  return f;
}

}  // namespace

MetricResult eigenvector_centrality(const Topology& t, double tol, std::uint32_t max_iter) {
  MetricResult r;
  r.key = "eigenvector_centrality";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::unit();
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("eigenvector centrality needs at least one node");
  if (tol <= 0) throw TopologyError("tolerance must be positive");

  const ComponentReport comp = components(t);
  std::vector<char> mask(v, 0);
  for (std::uint32_t i = 0; i < v; ++i) mask[i] = comp.comp[i] == comp.largest;
  const std::uint32_t members = comp.largest_size();

  r.node_values.assign(v, std::nullopt);
  if (members == 1) {
    for (std::uint32_t i = 0; i < v; ++i) {
      if (mask[i]) r.node_values[i] = 1.0;
    }
    r.value = 1.0;
    r.extras.push_back({"iterations", 0.0});
    r.extras.push_back({"shifted", 0.0});
    r.extras.push_back({"component_size", 1.0});
    return r;
  }

  std::vector<double> x(v, 0.0), y(v, 0.0);
  // one pass of the quoted iteration; returns the iteration count on
  // convergence
  const auto run = [&](bool shifted) -> std::optional<std::uint32_t> {
    for (std::uint32_t i = 0; i < v; ++i) x[i] = mask[i] ? 1.0 / members : 0.0;
    for (std::uint32_t it = 1; it <= max_iter; ++it) {
      double sum = 0;
      for (std::uint32_t i = 0; i < v; ++i) {
        if (!mask[i]) continue;
        double acc = shifted ? x[i] : 0.0;
        for (const Arc& a : t.out(i)) {
          if (mask[a.to]) acc += t.weight(a.edge) * x[a.to];
        }
        y[i] = acc;
        sum += acc;
      }
      if (sum <= 0) return std::nullopt;
      double diff = 0;
      for (std::uint32_t i = 0; i < v; ++i) {
        if (!mask[i]) continue;
        y[i] /= sum;
        diff = std::max(diff, std::abs(y[i] - x[i]));
        x[i] = y[i];
      }
      if (diff < tol) return it;
    }
    return std::nullopt;
  };

  bool shifted = false;
  std::optional<std::uint32_t> iters = run(false);
  if (!iters) {
    shifted = true;
    iters = run(true);
  }
  if (!iters) throw TopologyError("eigenvector centrality did not converge");

  double peak = 0;
  for (std::uint32_t i = 0; i < v; ++i) {
    if (mask[i]) {
      r.node_values[i] = x[i];
      peak = std::max(peak, x[i]);
    }
  }
  r.value = peak;
  r.extras.push_back({"iterations", static_cast<double>(*iters)});
  r.extras.push_back({"shifted", shifted ? 1.0 : 0.0});
  r.extras.push_back({"component_size", static_cast<double>(members)});
  return r;
}

MetricResult symmetry_ratio(const Topology& t) {
  MetricResult r;
  r.key = "symmetry_ratio";
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("symmetry ratio needs at least one node");
  if (t.directed()) throw TopologyError("symmetry ratio needs an undirected graph");
  r.codomain = Codomain::range(1.0, std::max(1.0, v / 3.0));
  if (!is_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "diameter is infinite on a disconnected graph");
  }

  double diam = 0;
  if (v >= 2) {
    const MetricResult d = diameter(t);
    diam = *d.value;
  }

  SpectralCache cache(t);
  const Eigen::VectorXd& vals = cache.adjacency_eigenvalues();
  const double tol = 1e-8 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::uint32_t distinct = 1;
  for (std::uint32_t i = 1; i < v; ++i) {
    if (vals[i] - vals[i - 1] > tol) ++distinct;
  }

  r.value = distinct / (diam + 1.0);
  r.extras.push_back({"distinct_eigenvalues", static_cast<double>(distinct)});
  r.extras.push_back({"diameter", diam});
  return r;
}

std::vector<double> similarity_matrix(const Topology& t) {
  const std::uint32_t v = t.node_count();
  std::vector<double> sim(static_cast<std::size_t>(v) * v, 0.0);
  for (std::uint32_t i = 0; i < v; ++i) {
    for (const Arc& ai : t.out(i)) {
      // every node sharing the successor ai.to contributes one common provider
      const std::span<const Arc> back = t.directed() ? t.in(ai.to) : t.out(ai.to);
      for (const Arc& aj : back) {
        sim[static_cast<std::size_t>(i) * v + aj.to] += t.weight(ai.edge) * t.weight(aj.edge);
      }
    }
  }
  return sim;
}

SpectralClusterReport spectral_clusters(const Topology& t, std::uint32_t depth) {
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("spectral clusters need at least one node");
  SpectralClusterReport rep;
  std::vector<std::uint32_t> labels(v, 0);

  const bool directed = t.directed();
  Topology view = directed ? t.undirected_view() : t;
  if (v >= 2) {
    // similarity weights: the adjacency itself, or common successors when
    // orientation carries customer-provider meaning
    std::vector<double> m;
    if (directed) {
      m = similarity_matrix(t);
      for (std::uint32_t i = 0; i < v; ++i) m[static_cast<std::size_t>(i) * v + i] = 0.0;
    } else {
      m.assign(static_cast<std::size_t>(v) * v, 0.0);
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.edge(e);
        m[static_cast<std::size_t>(ed.u) * v + ed.v] += t.weight(e);
        m[static_cast<std::size_t>(ed.v) * v + ed.u] += t.weight(e);
      }
    }

    std::vector<double> row_off(v, 0.0);
    for (std::uint32_t i = 0; i < v; ++i) {
      for (std::uint32_t j = 0; j < v; ++j) row_off[i] += m[static_cast<std::size_t>(i) * v + j];
    }

    // symmetric twin of the stochastic normalization, same spectrum
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(v, v);
    for (std::uint32_t i = 0; i < v; ++i) {
      s(i, i) = 0.5;
      if (row_off[i] <= 0) continue;
      for (std::uint32_t j = i + 1; j < v; ++j) {
        if (row_off[j] <= 0) continue;
        const double mij = m[static_cast<std::size_t>(i) * v + j];
        if (mij != 0) {
          s(i, j) = s(j, i) = mij / (2.0 * std::sqrt(row_off[i] * row_off[j]));
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    if (es.info() != Eigen::Success) throw TopologyError("normalized eigensolver failed");

    double total_vol = 0;
    for (std::uint32_t i = 0; i < v; ++i) total_vol += view.strength(i);

    const std::uint32_t ranks = std::min<std::uint32_t>(depth, v - 1);
    for (std::uint32_t k = 1; k <= ranks; ++k) {
      SpectralClusterCandidate cand;
      cand.rank = k;
      cand.eigenvalue = es.eigenvalues()[v - 1 - k];

      std::vector<double> w(v);
      for (std::uint32_t i = 0; i < v; ++i) {
        const double scale = row_off[i] > 0 ? 1.0 / std::sqrt(row_off[i]) : 1.0;
        w[i] = es.eigenvectors()(i, v - 1 - k) * scale;
      }
      std::vector<std::uint32_t> order(v);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return w[a] < w[b]; });

      std::uint32_t jump = 0;
      for (std::uint32_t i = 0; i + 1 < v; ++i) {
        const double gap = w[order[i + 1]] - w[order[i]];
        if (gap > cand.gap) {
          cand.gap = gap;
          jump = i;
        }
      }
      const double range = w[order[v - 1]] - w[order[0]];
      const bool sharp = range > 1e-12 && cand.gap >= 2.0 * range / (v - 1);

      std::vector<char> in_set(v, 0);
      double vol = 0, cut = 0;
      for (std::uint32_t i = 0; i <= jump; ++i) {
        in_set[order[i]] = 1;
        vol += view.strength(order[i]);
      }
      for (EdgeId e = 0; e < view.edge_count(); ++e) {
        const Edge& ed = view.edge(e);
        if (in_set[ed.u] != in_set[ed.v]) cut += view.weight(e);
      }
      const double min_vol = std::min(vol, total_vol - vol);
      cand.conductance = min_vol > 0 ? cut / min_vol : kInf;
      cand.accepted = sharp && cand.conductance < 0.3;

      const bool left_smaller = vol <= total_vol - vol;
      for (std::uint32_t i = 0; i < v; ++i) {
        if (in_set[i] == (left_smaller ? 1 : 0)) cand.members.push_back(i);
      }

      if (cand.accepted) {
        std::map<std::pair<std::uint32_t, char>, std::uint32_t> remap;
        for (std::uint32_t i = 0; i < v; ++i) {
          const auto key = std::make_pair(labels[i], in_set[i]);
          const auto [it, fresh] = remap.insert({key, static_cast<std::uint32_t>(remap.size())});
          (void)fresh;
          labels[i] = it->second;
        }
      }
      rep.candidates.push_back(std::move(cand));
    }
  }

  if (view.edge_count() > 0) {
    rep.assignment = make_assignment(view, labels);
  } else {
    rep.assignment.community = labels;
    rep.assignment.community_count =
        labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  }
  return rep;
}

MetricResult algebraic_connectivity(const Topology& t) {
  MetricResult r;
  r.key = "algebraic_connectivity";
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("algebraic connectivity needs at least one node");
  if (t.directed()) throw TopologyError("algebraic connectivity needs an undirected graph");
  if (v == 1) return MetricResult::undefined(r.key, r.kind, "second eigenvalue needs two nodes");

  std::uint32_t min_deg = v;
  for (std::uint32_t i = 0; i < v; ++i) min_deg = std::min(min_deg, t.degree(i));
  r.codomain = Codomain::range(0.0, static_cast<double>(v) / (v - 1) * min_deg);

  constexpr std::uint32_t kDenseCap = 2000;
  double lambda2 = 0;
  if (v <= kDenseCap) {
    SpectralCache cache(t);
    lambda2 = cache.laplacian_eigenvalues()[1];
  } else {
    // shifted power iteration on c I - L, deflating the constant vector
    double c = 1.0;
    for (std::uint32_t i = 0; i < v; ++i) c = std::max(c, 2.0 * t.strength(i) + 1.0);
    std::vector<double> x(v), y(v);
    for (std::uint32_t i = 0; i < v; ++i) x[i] = (i % 7) - 3.0;
    double lam = 0;
    for (std::uint32_t it = 0; it < 5000; ++it) {
      double mean = std::accumulate(x.begin(), x.end(), 0.0) / v;
      for (double& xi : x) xi -= mean;
      for (std::uint32_t i = 0; i < v; ++i) {
        double acc = (c - t.strength(i)) * x[i];
        for (const Arc& a : t.out(i)) acc += t.weight(a.edge) * x[a.to];
        y[i] = acc;
      }
      const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
      if (norm <= 0) break;
      double next = 0;
      for (std::uint32_t i = 0; i < v; ++i) {
        next += x[i] * y[i];
        x[i] = y[i] / norm;
      }
      if (it > 10 && std::abs(next - lam) <= 1e-12 * c) {
        lam = next;
        break;
      }
      lam = next;
    }
    lambda2 = c - lam;
  }
  r.value = std::max(0.0, lambda2);
  return r;
}

ExpansionTestReport good_expansion_test(const Topology& t, bool weighted) {
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("expansion test needs at least two nodes");
  if (t.directed()) throw TopologyError("expansion test needs an undirected graph");
  if (!is_connected(t)) throw TopologyError("expansion test needs a connected graph");

  const Eigen::MatrixXd a = dense_adjacency(t, weighted && t.weighted());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw TopologyError("adjacency eigensolver failed");
  const Eigen::VectorXd& vals = es.eigenvalues();
  const double lam_top = vals[v - 1];

  Eigen::VectorXd u_top = es.eigenvectors().col(v - 1);
  if (u_top.sum() < 0) u_top = -u_top;
  const double u_floor = 1e-14 * u_top.cwiseAbs().maxCoeff();

  ExpansionTestReport rep;
  std::vector<double> x(v), y(v);
  for (std::uint32_t i = 0; i < v; ++i) {
    // SC_odd(i) = sum_j u_j(i)^2 sinh(lambda_j), factored around the top
    // eigenvalue so large spectra stay finite
    double acc = 0;
    for (std::uint32_t j = 0; j < v; ++j) {
      const double uji = es.eigenvectors()(i, j);
      acc += uji * uji * 0.5 *
             (std::exp(vals[j] - lam_top) - std::exp(-vals[j] - lam_top));
    }
    if (acc <= 0) {
      acc = 1e-18;
      ++rep.clamped;
    }
    x[i] = lam_top + std::log(acc);
    y[i] = std::log(std::max(u_top[i], u_floor));
  }

  const LinFit fit = fit_line(x, y);
  rep.slope = fit.slope;
  rep.intercept = fit.intercept;
  rep.r2 = fit.r2;
  rep.degenerate = fit.degenerate;
  rep.target_intercept = -0.5 * log_sinh(lam_top);

  // deviations from the predicted line itself, not the fitted one: a tilted
  // fit would absorb exactly the bottleneck signature we want to flag
  rep.residuals.resize(v);
  double mean = 0;
  for (std::uint32_t i = 0; i < v; ++i) {
    rep.residuals[i] = y[i] - (rep.target_intercept + 0.5 * x[i]);
    mean += rep.residuals[i];
  }
  mean /= v;
  double var = 0;
  for (const double res : rep.residuals) var += (res - mean) * (res - mean);
  rep.delta = 2.0 * std::sqrt(var / v);
  for (std::uint32_t i = 0; i < v; ++i) {
    if (rep.delta > 0 && rep.residuals[i] < -rep.delta) rep.flagged.push_back(i);
  }
  rep.good_expansion = std::abs(rep.slope - 0.5) <= 0.05 &&
                       std::abs(rep.intercept - rep.target_intercept) <= 0.15;
  return rep;
}

SpanningTreeReport spanning_tree_count(const Topology& t, NodeId drop) {
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("spanning tree count needs at least one node");
  if (t.directed()) throw TopologyError("spanning tree count needs an undirected graph");
  if (drop >= v) throw TopologyError("dropped node out of range");

  SpanningTreeReport rep;
  if (!is_connected(t)) {
    rep.log_count = -kInf;
    rep.exact = "0";
    rep.exact_available = true;
    return rep;
  }
  if (v == 1) {
    rep.log_count = 0;
    rep.exact = "1";
    rep.exact_available = true;
    return rep;
  }

  const std::uint32_t n = v - 1;
  const auto reduced = [&](std::uint32_t i) { return i < drop ? i : i + 1; };

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::int64_t> exact_lap(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t gi = reduced(i);
    lap(i, i) = t.degree(gi);
    exact_lap[static_cast<std::size_t>(i) * n + i] = t.degree(gi);
    for (const Arc& a : t.out(gi)) {
      if (a.to == drop) continue;
      const std::uint32_t j = a.to < drop ? a.to : a.to - 1;
      lap(i, j) -= 1.0;
      exact_lap[static_cast<std::size_t>(i) * n + j] -= 1;
    }
  }

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(lap);
  double log_det = 0;
  for (std::uint32_t i = 0; i < n; ++i) log_det += std::log(ldlt.vectorD()[i]);
  rep.log_count = log_det;

  if (v <= 50) {
    // Bareiss fraction-free elimination keeps every intermediate an integer
    using bigint = boost::multiprecision::cpp_int;
    std::vector<bigint> m(exact_lap.begin(), exact_lap.end());
    const auto at = [&](std::uint32_t i, std::uint32_t j) -> bigint& {
      return m[static_cast<std::size_t>(i) * n + j];
    };
    bigint prev = 1;
    int sign = 1;
    bool singular = false;
    for (std::uint32_t k = 0; k + 1 < n && !singular; ++k) {
      if (at(k, k) == 0) {
        std::uint32_t pivot = k;
        for (std::uint32_t i = k + 1; i < n; ++i) {
          if (at(i, k) != 0) {
            pivot = i;
            break;
          }
        }
        if (pivot == k) {
          singular = true;
          break;
        }
        for (std::uint32_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
        sign = -sign;
      }
      for (std::uint32_t i = k + 1; i < n; ++i) {
        for (std::uint32_t j = k + 1; j < n; ++j) {
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
        at(i, k) = 0;
      }
      prev = at(k, k);
    }
    bigint det = singular ? bigint(0) : at(n - 1, n - 1);
    if (sign < 0) det = -det;
    rep.exact = det.str();
    rep.exact_available = true;
  }
  return rep;
}

MetricResult natural_connectivity(const Topology& t) {
  MetricResult r;
  r.key = "natural_connectivity";
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("natural connectivity needs at least one node");
  if (t.directed()) throw TopologyError("natural connectivity needs an undirected graph");

  constexpr std::uint32_t kDenseCap = 2000;
  if (v <= kDenseCap) {
    SpectralCache cache(t);
    const Eigen::VectorXd& vals = cache.adjacency_eigenvalues();
    const double m = vals[v - 1];
    double acc = 0;
    for (std::uint32_t i = 0; i < v; ++i) acc += std::exp(vals[i] - m);
    r.value = m + std::log(acc) - std::log(static_cast<double>(v));
    return r;
  }

  // above the dense cap: top eigenvalues by deflected power iteration; the
  // discarded tail is bounded by the smallest retained magnitude
  const std::uint32_t k = std::min<std::uint32_t>(64, v);
  std::vector<std::vector<double>> basis;
  std::vector<double> found;
  std::vector<double> x(v), y(v);
  for (std::uint32_t pass = 0; pass < k; ++pass) {
    for (std::uint32_t i = 0; i < v; ++i) {
      x[i] = 1.0 + 0.001 * (((i + 1) * (pass + 2) * 2654435761u) % 997);
    }
    double lam = 0;
    for (std::uint32_t it = 0; it < 3000; ++it) {
      for (const std::vector<double>& b : basis) {
        const double dot = std::inner_product(x.begin(), x.end(), b.begin(), 0.0);
        for (std::uint32_t i = 0; i < v; ++i) x[i] -= dot * b[i];
      }
      double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
      if (norm <= 1e-300) break;
      for (double& xi : x) xi /= norm;
      std::fill(y.begin(), y.end(), 0.0);
      for (std::uint32_t i = 0; i < v; ++i) {
        for (const Arc& a : t.out(i)) {
          y[a.to] += t.weight(a.edge) * x[i];
          y[i] += t.weight(a.edge) * x[a.to];
        }
      }
      for (std::uint32_t i = 0; i < v; ++i) y[i] *= 0.5;
      const double next = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
      x.swap(y);
      if (it > 10 && std::abs(next - lam) <= 1e-12 * std::max(1.0, std::abs(next))) {
        lam = next;
        break;
      }
      lam = next;
    }
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (norm <= 1e-300) break;
    for (double& xi : x) xi /= norm;
    basis.push_back(x);
    found.push_back(lam);
  }
  double bound = 0;
  for (const double lam : found) {
    bound = bound == 0 ? std::abs(lam) : std::min(bound, std::abs(lam));
  }
  const double m = *std::max_element(found.begin(), found.end());
  double acc = 0;
  for (const double lam : found) acc += std::exp(lam - m);
  const double tail = (v - found.size()) * std::exp(bound - m);
  r.value = m + std::log(acc) - std::log(static_cast<double>(v));
  r.extras.push_back({"approximate", 1.0});
  r.extras.push_back({"error_bound", std::log1p(tail / acc)});
  return r;
}

RandomWalkDistances random_walk_distances(const Topology& t) {
  const std::uint32_t v = t.node_count();
  if (v == 0) throw TopologyError("random walk distances need at least one node");
  if (!strongly_connected(t)) {
    throw TopologyError("random walk distances need a connected graph");
  }
  RandomWalkDistances d;
  d.v = v;
  d.hops.assign(static_cast<std::size_t>(v) * v, 0.0);
  d.per_target.assign(v, 0.0);
  if (v == 1) return d;

  SpectralCache cache(t);
  parallel_for(v, [&](std::uint32_t target) {
    const std::uint32_t n = v - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t gi = i < target ? i : i + 1;
      const double s = cache.adjacency().row(gi).sum();
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t gj = j < target ? j : j + 1;
        m(i, j) -= cache.adjacency()(gi, gj) / s;
      }
    }
    const Eigen::VectorXd hit = m.partialPivLu().solve(Eigen::VectorXd::Ones(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t gi = i < target ? i : i + 1;
      d.hops[static_cast<std::size_t>(gi) * v + target] = hit[i];
    }
  });
  for (std::uint32_t target = 0; target < v; ++target) {
    double sum = 0;
    for (std::uint32_t s = 0; s < v; ++s) sum += d.at(s, target);
    d.per_target[target] = sum;
  }
  return d;
}

MetricResult random_walk_aspl(const Topology& t) {
  MetricResult r;
  r.key = "random_walk_aspl";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) return MetricResult::undefined(r.key, r.kind, "no node pair to average");
  if (!strongly_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "absorbing walks never arrive on a disconnected graph");
  }
  const RandomWalkDistances d = random_walk_distances(t);
  const double total = std::accumulate(d.hops.begin(), d.hops.end(), 0.0);
  r.value = total / (static_cast<double>(v) * (v - 1));
  r.node_values.assign(v, std::nullopt);
  for (std::uint32_t i = 0; i < v; ++i) r.node_values[i] = d.per_target[i];
  return r;
}

MetricResult current_flow_closeness(const Topology& t) {
  MetricResult r;
  r.key = "current_flow_closeness";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("current flow closeness needs at least two nodes");
  if (t.directed()) throw TopologyError("current flow closeness needs an undirected graph");
  if (!is_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "resistance diverges on a disconnected graph");
  }

  SpectralCache cache(t);
  const Eigen::MatrixXd lj =
      cache.laplacian() + Eigen::MatrixXd::Ones(v, v);
  const Eigen::MatrixXd b = lj.ldlt().solve(Eigen::MatrixXd::Identity(v, v));
  const double tr = b.trace();

  r.node_values.assign(v, std::nullopt);
  double sum = 0, peak = 0;
  for (std::uint32_t i = 0; i < v; ++i) {
    const double r_sum = v * b(i, i) + tr - 2.0 / v;
    const double c = v / r_sum;
    r.node_values[i] = c;
    sum += c;
    peak = std::max(peak, c);
  }
  r.value = sum / v;
  r.extras.push_back({"max", peak});
  return r;
}

std::vector<double> current_flow_closeness_resistance(const Topology& t) {
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("current flow closeness needs at least two nodes");
  if (t.directed() || !is_connected(t)) {
    throw TopologyError("current flow closeness needs a connected undirected graph");
  }
  SpectralCache cache(t);
  std::vector<double> out(v, 0.0);
  for (std::uint32_t s = 0; s < v; ++s) {
    double r_sum = 0;
    for (std::uint32_t u = 0; u < v; ++u) {
      if (u != s) r_sum += cache.resistance(s, u);
    }
    out[s] = v / r_sum;
  }
  return out;
}

MetricResult random_walk_betweenness(const Topology& t) {
  MetricResult r;
  r.key = "random_walk_betweenness";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("random walk betweenness needs at least two nodes");
  if (!strongly_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "random walks never arrive on a disconnected graph");
  }

  SpectralCache cache(t);
  // per-target column sums of the fundamental matrix, reduced serially
  std::vector<double> contrib(static_cast<std::size_t>(v) * v, 0.0);
  parallel_for(v, [&](std::uint32_t target) {
    const std::uint32_t n = v - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t gi = i < target ? i : i + 1;
      const double s = cache.adjacency().row(gi).sum();
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t gj = j < target ? j : j + 1;
        m(i, j) -= cache.adjacency()(gi, gj) / s;
      }
    }
    const Eigen::VectorXd visits =
        m.transpose().partialPivLu().solve(Eigen::VectorXd::Ones(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t gi = i < target ? i : i + 1;
      contrib[static_cast<std::size_t>(target) * v + gi] = visits[i];
    }
  });

  r.node_values.assign(v, std::nullopt);
  double sum = 0, peak = 0;
  for (std::uint32_t i = 0; i < v; ++i) {
    double acc = 0;
    for (std::uint32_t target = 0; target < v; ++target) {
      acc += contrib[static_cast<std::size_t>(target) * v + i];
    }
    r.node_values[i] = acc;
    sum += acc;
    peak = std::max(peak, acc);
  }
  r.value = sum / v;
  r.extras.push_back({"max", peak});
  return r;
}

MetricResult current_flow_betweenness(const Topology& t) {
  MetricResult r;
  r.key = "current_flow_betweenness";
  r.kind = MetricKind::PerNode;
  r.scope = MetricScope::Local;
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("current flow betweenness needs at least two nodes");
  if (t.directed()) throw TopologyError("current flow betweenness needs an undirected graph");
  if (!is_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "current never arrives on a disconnected graph");
  }

  SpectralCache cache(t);
  const Eigen::MatrixXd& p = cache.laplacian_pinv();
  std::vector<double> load(v, 0.0);
  for (std::uint32_t s = 0; s < v; ++s) {
    for (std::uint32_t u = s + 1; u < v; ++u) {
      for (std::uint32_t i = 0; i < v; ++i) {
        if (i == s || i == u) continue;
        const double vi = p(i, s) - p(i, u);
        double through = 0;
        for (const Arc& a : t.out(i)) {
          const double vj = p(a.to, s) - p(a.to, u);
          through += t.weight(a.edge) * std::abs(vi - vj);
        }
        load[i] += 0.5 * through;
      }
    }
  }

  r.node_values.assign(v, std::nullopt);
  double sum = 0, peak = 0;
  for (std::uint32_t i = 0; i < v; ++i) {
    r.node_values[i] = load[i];
    sum += load[i];
    peak = std::max(peak, load[i]);
  }
  r.value = sum / v;
  r.extras.push_back({"max", peak});
  return r;
}

MetricResult network_criticality(const Topology& t) {
  MetricResult r;
  r.key = "network_criticality";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("network criticality needs at least two nodes");
  if (t.directed()) throw TopologyError("not applicable to directed graphs");
  if (!is_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "effective resistance diverges on a disconnected graph");
  }
  SpectralCache cache(t);
  // sum over ordered pairs of u_st^T L^+ u_st collapses to 2 v tr(L^+)
  const double tau = 2.0 * v * cache.laplacian_pinv().trace();
  r.value = tau;
  r.extras.push_back({"kirchhoff_index", tau / 2.0});
  return r;
}

MetricResult traffic_aware_criticality(const Topology& t, const std::vector<double>& gamma) {
  MetricResult r;
  r.key = "traffic_aware_criticality";
  r.codomain = Codomain::nonneg();
  const std::uint32_t v = t.node_count();
  if (v < 2) throw TopologyError("network criticality needs at least two nodes");
  if (t.directed()) throw TopologyError("not applicable to directed graphs");
  if (gamma.size() != static_cast<std::size_t>(v) * v) {
    throw TopologyError("traffic matrix must be v x v");
  }
  double total = 0;
  for (std::uint32_t s = 0; s < v; ++s) {
    for (std::uint32_t u = 0; u < v; ++u) {
      const double g = gamma[static_cast<std::size_t>(s) * v + u];
      if (g < 0) throw TopologyError("traffic entries must be non-negative");
      if (s == u && g != 0) throw TopologyError("traffic matrix diagonal must be zero");
      total += g;
    }
  }
  if (total <= 0) throw TopologyError("traffic matrix must carry traffic");
  if (!is_connected(t)) {
    return MetricResult::undefined(r.key, r.kind, "effective resistance diverges on a disconnected graph");
  }

  std::vector<double> row(v, 0.0), col(v, 0.0);
  for (std::uint32_t s = 0; s < v; ++s) {
    for (std::uint32_t u = 0; u < v; ++u) {
      const double g = gamma[static_cast<std::size_t>(s) * v + u];
      row[s] += g;
      col[u] += g;
    }
  }

  SpectralCache cache(t);
  double tau = 0;
  for (std::uint32_t s = 0; s < v; ++s) {
    for (std::uint32_t u = 0; u < v; ++u) {
      if (s == u) continue;
      const double g_st = gamma[static_cast<std::size_t>(s) * v + u];
      const double g_ts = gamma[static_cast<std::size_t>(u) * v + s];
      const double alpha =
          1.0 + (g_st + g_ts) / (2.0 * total) + (col[s] - row[s]) / (v * total);
      tau += alpha * cache.resistance(s, u);
    }
  }
  r.value = tau;
  return r;
}

double pairwise_resistance(const Topology& t, NodeId s, NodeId u) {
  const std::uint32_t v = t.node_count();
  if (s >= v || u >= v || s == u) throw TopologyError("resistance needs two distinct nodes");
  if (t.directed()) throw TopologyError("resistance needs an undirected graph");
  if (!is_connected(t)) throw TopologyError("resistance needs a connected graph");

  // unreduced route kept away from the eigendecomposition: ground u, inject
  // a unit current at s and read off the potential
  const std::uint32_t n = v - 1;
  const auto idx = [&](std::uint32_t i) { return i < u ? i : i - 1; };
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (std::uint32_t i = 0; i < v; ++i) {
    if (i == u) continue;
    lap(idx(i), idx(i)) = t.strength(i);
    for (const Arc& a : t.out(i)) {
      if (a.to == u) continue;
      lap(idx(i), idx(a.to)) -= t.weight(a.edge);
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs[idx(s)] = 1.0;
  const Eigen::VectorXd pot = lap.ldlt().solve(rhs);
  return pot[idx(s)];
}

}  // namespace netrob
