#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "netrob/topology.hpp"

namespace netrob {

struct DegreeView {
  std::vector<double> degree;
  std::vector<double> in_degree;   // empty on undirected graphs
  std::vector<double> out_degree;  // empty on undirected graphs
  std::vector<double> strength;
  std::vector<std::pair<double, double>> degree_dist;    // (k, P(k))
  std::vector<std::pair<double, double>> strength_dist;  // (s, P(s)), exact values
  double mean_degree = 0;
  double mean_square_degree = 0;
  double degree_stdev = 0;  // population stdev of the degree distribution
};

DegreeView degree_metrics(const Topology& t);

// Shannon entropy of the degree distribution (natural log); h_max receives
// ln(v-1), the all-distinct-support bound used for normalization
double degree_entropy(const Topology& t, double* h_max = nullptr);

// rank-weighted degree skewness; ties are broken by seeded shuffles and the
// mean over `shuffles` assignments is returned
double skewness(const Topology& t, std::uint64_t seed, std::uint32_t shuffles = 32);

double vulnerability_function(const Topology& t);

// Pearson correlation of degrees over edge endpoints (both orientations);
// empty when degenerate (all endpoint degrees equal)
std::optional<double> assortative_coefficient(const Topology& t);

struct NeighborConnectivity {
  std::vector<std::optional<double>> per_node;       // mean (weighted) neighbor degree
  std::vector<std::pair<double, double>> by_degree;  // (k, k_nn(k))
};

NeighborConnectivity neighbor_connectivity(const Topology& t, bool weighted = false);

struct RichClub {
  std::vector<std::pair<double, double>> phi;  // (k, phi(k)) over degrees with |R(k)| >= 2
  std::vector<std::pair<double, double>> rho;  // (k, phi/phi_random), when normalized
  std::vector<std::pair<double, double>> phi_weighted;  // (s, phi^w(s))
};

RichClub rich_club(const Topology& t, bool normalized, std::uint64_t seed,
                   std::uint32_t randomizations = 100);

std::vector<double> edge_degree_min(const Topology& t);
std::vector<double> edge_degree_product(const Topology& t);

// degree-preserving randomization (double edge swaps); used for rich-club
// normalization and exposed for tests
Topology degree_preserving_shuffle(const Topology& t, std::uint64_t seed,
                                   std::uint32_t attempts_per_edge = 10);

}  // namespace netrob
