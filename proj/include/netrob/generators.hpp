#pragma once

#include <cstdint>
#include <string>

#include "netrob/topology.hpp"

namespace netrob {

Topology make_complete(std::uint32_t v);
Topology make_path(std::uint32_t v);
Topology make_cycle(std::uint32_t v);
Topology make_star(std::uint32_t v);  // node 0 is the hub
Topology make_grid(std::uint32_t rows, std::uint32_t cols);
Topology make_complete_bipartite(std::uint32_t a, std::uint32_t b);

// Erdos-Renyi G(v, p): every pair drawn independently
Topology make_er(std::uint32_t v, double p, std::uint64_t seed);

// Barabasi-Albert: complete seed graph on m+1 nodes, then each new node
// attaches to m distinct targets sampled from the repeated-endpoint pool
Topology make_ba(std::uint32_t v, std::uint32_t m, std::uint64_t seed);

// Watts-Strogatz ring (k even): each clockwise edge rewires its far endpoint
// with probability beta, avoiding self-loops and duplicates
Topology make_ws(std::uint32_t v, std::uint32_t k, double beta, std::uint64_t seed);

// random labelled tree from a seeded Pruefer sequence
Topology make_random_tree(std::uint32_t v, std::uint64_t seed);

// two cliques of the given sizes joined by a single bridge edge 0 -- a
Topology make_two_cliques_bridge(std::uint32_t a, std::uint32_t b);

// parse "model:key=value,..." (e.g. "ba:v=1000,m=2", "er:v=50,p=0.1",
// "ws:v=100,k=4,beta=0.1", "complete:v=6", "grid:rows=3,cols=4",
// "bipartite:a=3,b=4", "two_cliques:a=5,b=5", "tree:v=9")
Topology generate_from_spec(const std::string& spec, std::uint64_t seed);

}  // namespace netrob
