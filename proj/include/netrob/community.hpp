#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/topology.hpp"

namespace netrob {

// A disjoint division of the node set. `mixing` is the community mixing matrix
// E stored row-major: e_ij is the fraction of total edge weight running
// between communities i and j, with cross-community edges contributing half to
// each orientation so that the matrix stays symmetric and sums to one.
struct CommunityAssignment {
  std::vector<uint32_t> community;  // dense community id per node
  uint32_t community_count = 0;
  std::vector<double> mixing;  // community_count x community_count, row-major
  double q = 0.0;              // modularity of this division

  double mixing_at(uint32_t i, uint32_t j) const {
    return mixing[static_cast<size_t>(i) * community_count + j];
  }
};

// Densifies the labels, builds the mixing matrix and computes Q. Requires an
// undirected graph with at least one edge.
CommunityAssignment make_assignment(const Topology& t, std::vector<uint32_t> labels);

// Q = Tr E - ||E^2|| for the division given by `labels`.
double modularity_of(const Topology& t, const std::vector<uint32_t>& labels);

// Recursive spectral bisection on the modularity matrix: each group is split
// by the sign structure of the leading eigenvector as long as the leading
// eigenvalue is positive and the split improves Q. Edges between groups are
// kept, so degrees never change. Disconnected graphs are handled component by
// component.
CommunityAssignment detect_communities_spectral(const Topology& t);

// Girvan-Newman: repeatedly remove the edge of highest betweenness (ties to
// the lowest edge id), tracking Q of the resulting component division against
// the original edge set, and return the best division seen. sample_fraction
// in (0,1) switches the betweenness recomputation to a seeded source sample;
// 1.0 runs the same path over all sources.
CommunityAssignment detect_communities_edge_betweenness(
    const Topology& t, std::optional<double> sample_fraction = std::nullopt,
    uint64_t seed = 0);

// z_i = (within-community degree of i - community mean) / community stddev,
// with z_i = 0 where the community is degree-uniform.
std::vector<double> zscore_within_module(const Topology& t, const CommunityAssignment& a);

// P_i = 1 - sum_j (e_i(K_j)/k_i)^2; undefined for isolated nodes.
std::vector<std::optional<double>> participation_coefficient(const Topology& t,
                                                             const CommunityAssignment& a);

}  // namespace netrob
