#pragma once

#include <cstdint>

#include "netrob/topology.hpp"

namespace netrob {

// Classical polynomial connectivity via unit-capacity max-flow sweeps
// (vertex-split network for kappa). Works at any size; the brute-force oracle
// stays the reference on small graphs.
std::uint32_t vertex_connectivity(const Topology& t);
std::uint32_t edge_connectivity(const Topology& t);

}  // namespace netrob
