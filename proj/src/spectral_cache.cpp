#include <cmath>

#include "netrob/spectral.hpp"

namespace netrob {

SpectralCache::SpectralCache(const Topology& t)
    : v_(t.node_count()), directed_(t.directed()) {
  a_ = Eigen::MatrixXd::Zero(v_, v_);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    const double w = t.weight(e);
    a_(ed.u, ed.v) += w;
    if (!directed_) a_(ed.v, ed.u) += w;
  }
  l_ = -a_;
  for (std::uint32_t i = 0; i < v_; ++i) l_(i, i) += a_.row(i).sum();
}

void SpectralCache::ensure_adjacency_eigen() {
  if (a_values_) return;
  if (directed_) throw TopologyError("adjacency eigenpairs need an undirected graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_);
  if (es.info() != Eigen::Success) throw TopologyError("adjacency eigensolver failed");
  a_values_ = es.eigenvalues();
  a_vectors_ = es.eigenvectors();
}

void SpectralCache::ensure_laplacian_eigen() {
  if (l_values_) return;
  if (directed_) throw TopologyError("Laplacian eigenpairs need an undirected graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l_);
  if (es.info() != Eigen::Success) throw TopologyError("Laplacian eigensolver failed");
  l_values_ = es.eigenvalues();
  l_vectors_ = es.eigenvectors();
}

const Eigen::VectorXd& SpectralCache::adjacency_eigenvalues() {
  ensure_adjacency_eigen();
  return *a_values_;
}

const Eigen::MatrixXd& SpectralCache::adjacency_eigenvectors() {
  ensure_adjacency_eigen();
  return *a_vectors_;
}

const Eigen::VectorXd& SpectralCache::laplacian_eigenvalues() {
  ensure_laplacian_eigen();
  return *l_values_;
}

const Eigen::MatrixXd& SpectralCache::laplacian_eigenvectors() {
  ensure_laplacian_eigen();
  return *l_vectors_;
}

const Eigen::MatrixXd& SpectralCache::laplacian_pinv() {
  if (l_pinv_) return *l_pinv_;
  ensure_laplacian_eigen();
  const Eigen::VectorXd& vals = *l_values_;
  const Eigen::MatrixXd& vecs = *l_vectors_;
  const double cutoff = 1e-10 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(v_);
  for (std::uint32_t i = 0; i < v_; ++i) {
    if (std::abs(vals[i]) > cutoff) inv[i] = 1.0 / vals[i];
  }
  l_pinv_ = vecs * inv.asDiagonal() * vecs.transpose();
  return *l_pinv_;
}

double SpectralCache::spectral_gap() {
  ensure_adjacency_eigen();
  if (v_ < 2) return 0.0;
  return (*a_values_)[v_ - 1] - (*a_values_)[v_ - 2];
}

std::uint32_t SpectralCache::zero_laplacian_multiplicity() {
  ensure_laplacian_eigen();
  const double cutoff = 1e-10 * std::max(1.0, l_values_->cwiseAbs().maxCoeff());
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < v_; ++i) {
    if (std::abs((*l_values_)[i]) <= cutoff) ++n;
  }
  return n;
}

double SpectralCache::resistance(NodeId s, NodeId t) {
  const Eigen::MatrixXd& p = laplacian_pinv();
  return p(s, s) + p(t, t) - 2.0 * p(s, t);
}

Eigen::MatrixXd SpectralCache::random_walk_matrix() const {
  Eigen::MatrixXd r = a_;
  for (std::uint32_t i = 0; i < v_; ++i) {
    const double s = a_.row(i).sum();
    if (s > 0) r.row(i) /= s;
  }
  return r;
}

Eigen::MatrixXd SpectralCache::normalized_adjacency() const {
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(v_, v_);
  for (std::uint32_t i = 0; i < v_; ++i) {
    double off = 0;
    for (std::uint32_t j = 0; j < v_; ++j) {
      if (j != i) off += a_(i, j);
    }
    if (off > 0) {
      for (std::uint32_t j = 0; j < v_; ++j) {
        if (j != i) n(i, j) = a_(i, j) / (2.0 * off);
      }
    }
    n(i, i) = 0.5;
  }
  return n;
}

Eigen::MatrixXd SpectralCache::fundamental_slice(NodeId target) const {
  if (target >= v_) throw TopologyError("fundamental slice target out of range");
  if (v_ < 2) throw TopologyError("fundamental slice needs at least two nodes");
  const std::uint32_t n = v_ - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t gi = i < target ? i : i + 1;
    const double s = a_.row(gi).sum();
    if (s <= 0) throw TopologyError("random walk stuck at a sink node");
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t gj = j < target ? j : j + 1;
      m(i, j) -= a_(gi, gj) / s;
    }
  }
  return m.partialPivLu().inverse();
}

}  // namespace netrob
