#pragma once

#include <cstdint>
#include <vector>

#include "netrob/topology.hpp"

namespace netrob {

struct ComponentReport {
  std::vector<std::uint32_t> comp;   // node -> component id, ids assigned by
                                     // ascending lowest member node
  std::vector<std::uint32_t> sizes;  // component id -> order
  std::uint32_t count = 0;
  std::uint32_t largest = 0;         // id of largest component (ties: lowest id)

  std::uint32_t largest_size() const { return sizes.empty() ? 0 : sizes[largest]; }
};

// directed graphs use weak connectivity unless strong = true (Tarjan)
ComponentReport components(const Topology& t, bool strong = false);

bool is_connected(const Topology& t);

}  // namespace netrob
