#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netrob/community.hpp"
#include "netrob/metric_result.hpp"
#include "netrob/topology.hpp"

namespace netrob {

// Dense eigen machinery shared by the spectral metrics. Decompositions are
// computed on first access and cached, so touch what you need before handing
// a const reference to worker threads. Adjacency eigenpairs require an
// undirected graph; the walk matrices also cover directed ones.
class SpectralCache {
 public:
  explicit SpectralCache(const Topology& t);

  std::uint32_t size() const { return v_; }
  bool directed() const { return directed_; }

  const Eigen::MatrixXd& adjacency() const { return a_; }
  const Eigen::MatrixXd& laplacian() const { return l_; }

  // eigenpairs sorted ascending, eigenvectors as matching columns
  const Eigen::VectorXd& adjacency_eigenvalues();
  const Eigen::MatrixXd& adjacency_eigenvectors();
  const Eigen::VectorXd& laplacian_eigenvalues();
  const Eigen::MatrixXd& laplacian_eigenvectors();

  // Moore-Penrose inverse of L, zero eigenvalues truncated at 1e-10 relative
  const Eigen::MatrixXd& laplacian_pinv();

  double spectral_gap();                        // lambda_v - lambda_{v-1} of A
  std::uint32_t zero_laplacian_multiplicity();  // equals the component count

  // effective resistance between two nodes, from the pseudoinverse
  double resistance(NodeId s, NodeId t);

  // walk operators; rows of R use out-degrees (strengths when weighted) and
  // stay zero for sink nodes
  Eigen::MatrixXd random_walk_matrix() const;
  // stochastic normalization: off-diagonal entries scaled to row sum 1/2,
  // diagonal replaced by 1/2
  Eigen::MatrixXd normalized_adjacency() const;

  // fundamental matrix (I - R(A_\tt))^{-1} for absorbing target `target`;
  // index i of the slice maps to node i < target ? i : i + 1
  Eigen::MatrixXd fundamental_slice(NodeId target) const;

 private:
  void ensure_adjacency_eigen();
  void ensure_laplacian_eigen();

  std::uint32_t v_ = 0;
  bool directed_ = false;
  Eigen::MatrixXd a_;
  Eigen::MatrixXd l_;
  std::optional<Eigen::VectorXd> a_values_;
  std::optional<Eigen::MatrixXd> a_vectors_;
  std::optional<Eigen::VectorXd> l_values_;
  std::optional<Eigen::MatrixXd> l_vectors_;
  std::optional<Eigen::MatrixXd> l_pinv_;
};

// Power iteration with L1 normalization on the dominant component; bipartite
// oscillation falls back to a shifted iteration. Values sum to one.
MetricResult eigenvector_centrality(const Topology& t, double tol = 1e-12,
                                    std::uint32_t max_iter = 2000);

// distinct adjacency eigenvalues (1e-8 * max|lambda| tolerance) over D + 1
MetricResult symmetry_ratio(const Topology& t);

struct SpectralClusterCandidate {
  std::uint32_t rank = 0;   // 1 = second-largest eigenvalue of N
  double eigenvalue = 0;
  double gap = 0;           // sharpest jump in the sorted eigenvector weights
  double conductance = 0;   // cut / min(vol) of the bisection at that jump
  bool accepted = false;
  std::vector<NodeId> members;  // smaller-volume side
};

struct SpectralClusterReport {
  CommunityAssignment assignment;  // refinement of all accepted bisections
  std::vector<SpectralClusterCandidate> candidates;
};

// Orders nodes by their weights in the top eigenvectors of the stochastic
// normalization N(A) (N(SIM(A)) on directed graphs) and bisects at sharp
// weight jumps; a split must also have conductance below 0.3 to be accepted.
SpectralClusterReport spectral_clusters(const Topology& t, std::uint32_t depth = 3);

// SIM(A) = A A^T, row-major; entry (i, j) counts common successors
std::vector<double> similarity_matrix(const Topology& t);

MetricResult algebraic_connectivity(const Topology& t);

struct ExpansionTestReport {
  bool good_expansion = false;
  double slope = 0;
  double intercept = 0;
  double target_intercept = 0;  // log(sinh lambda_v)^-0.5
  double r2 = 0;
  double delta = 0;             // flag threshold, 2 * residual stdev
  bool degenerate = false;      // all nodes collapse onto one point
  std::uint32_t clamped = 0;    // nodes whose SC_odd needed clamping
  // deviation of each node from the predicted line (slope 0.5 through
  // target_intercept); slope/intercept above describe the free fit
  std::vector<double> residuals;
  std::vector<NodeId> flagged;  // residual < -delta, likely behind bottlenecks
};

// Regression of log u_v(i) on log SC_odd(i); a good expander tracks slope 0.5
// and the predicted intercept, bottleneck-hidden nodes fall below the line.
ExpansionTestReport good_expansion_test(const Topology& t, bool weighted = false);

struct SpanningTreeReport {
  double log_count = 0;  // natural log; -inf when disconnected
  std::string exact;     // decimal digits, filled when exact_available
  bool exact_available = false;
};

// Kirchhoff count via a reduced-Laplacian determinant: log-domain Cholesky
// always, exact integer arithmetic up to 50 nodes. The count is the same for
// every dropped row/column; `drop` is exposed so tests can assert that.
SpanningTreeReport spanning_tree_count(const Topology& t, NodeId drop = 0);

// ln(sum_i e^{lambda_i} / v), evaluated with log-sum-exp
MetricResult natural_connectivity(const Topology& t);

struct RandomWalkDistances {
  std::uint32_t v = 0;
  std::vector<double> hops;        // v*v row-major, expected hops s -> t
  std::vector<double> per_target;  // column sums over sources

  double at(NodeId s, NodeId t) const {
    return hops[static_cast<std::size_t>(s) * v + t];
  }
};

// expected hitting hops of the weighted random walk, per ordered pair
RandomWalkDistances random_walk_distances(const Topology& t);

// global mean of the pairwise expected hops; node_values hold the per-target
// sums over sources
MetricResult random_walk_aspl(const Topology& t);

// v / sum_t r_st per source, evaluated through (L + J)^{-1}
MetricResult current_flow_closeness(const Topology& t);
// same quantity from pseudoinverse resistances, kept separate as a cross-check
std::vector<double> current_flow_closeness_resistance(const Topology& t);

// expected visits summed over all source-target pairs
MetricResult random_walk_betweenness(const Topology& t);

// net electrical throughflow averaged over unordered endpoint pairs; equals
// shortest-path betweenness on trees
MetricResult current_flow_betweenness(const Topology& t);

// tau = sum over ordered pairs of u_st^T L^+ u_st = 2 K(G)
MetricResult network_criticality(const Topology& t);

// traffic-weighted variant; gamma is v*v row-major with zero diagonal
MetricResult traffic_aware_criticality(const Topology& t,
                                       const std::vector<double>& gamma);

// effective resistance via a grounded direct solve, independent of the
// eigendecomposition route
double pairwise_resistance(const Topology& t, NodeId s, NodeId u);

}  // namespace netrob
