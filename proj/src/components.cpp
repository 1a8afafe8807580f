#include "netrob/components.hpp"

#include <algorithm>
#include <deque>

namespace netrob {

namespace {

ComponentReport weak_components(const Topology& t) {
  const std::uint32_t v = t.node_count();
  ComponentReport r;
  r.comp.assign(v, UINT32_MAX);
  for (NodeId s = 0; s < v; ++s) {
    if (r.comp[s] != UINT32_MAX) continue;
    std::uint32_t id = r.count++;
    r.sizes.push_back(0);
    std::deque<NodeId> q{s};
    r.comp[s] = id;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop_front();
      ++r.sizes[id];
      for (const Arc& a : t.out(x)) {
        if (r.comp[a.to] == UINT32_MAX) {
          r.comp[a.to] = id;
          q.push_back(a.to);
        }
      }
      if (t.directed()) {
        for (const Arc& a : t.in(x)) {
          if (r.comp[a.to] == UINT32_MAX) {
            r.comp[a.to] = id;
            q.push_back(a.to);
          }
        }
      }
    }
  }
  return r;
}

// iterative Tarjan strongly connected components
ComponentReport strong_components(const Topology& t) {
  const std::uint32_t v = t.node_count();
  std::vector<std::uint32_t> idx(v, UINT32_MAX), low(v, 0);
  std::vector<std::uint8_t> on_stack(v, 0);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> sccs;
  std::uint32_t counter = 0;

  struct Frame {
    NodeId node;
    std::size_t next;
  };
  for (NodeId root = 0; root < v; ++root) {
    if (idx[root] != UINT32_MAX) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto arcs = t.out(f.node);
      if (f.next < arcs.size()) {
        NodeId w = arcs[f.next++].to;
        if (idx[w] == UINT32_MAX) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], idx[w]);
        }
      } else {
        if (low[f.node] == idx[f.node]) {
          std::vector<NodeId> scc;
          NodeId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            scc.push_back(w);
          } while (w != f.node);
          sccs.push_back(std::move(scc));
        }
        NodeId done = f.node;
        call.pop_back();
        if (!call.empty())
          low[call.back().node] = std::min(low[call.back().node], low[done]);
      }
    }
  }

  // reassign ids by ascending lowest member
  for (auto& scc : sccs) std::sort(scc.begin(), scc.end());
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  ComponentReport r;
  r.comp.assign(v, 0);
  r.count = static_cast<std::uint32_t>(sccs.size());
  for (std::uint32_t id = 0; id < sccs.size(); ++id) {
    r.sizes.push_back(static_cast<std::uint32_t>(sccs[id].size()));
    for (NodeId n : sccs[id]) r.comp[n] = id;
  }
  return r;
}

}  // namespace

ComponentReport components(const Topology& t, bool strong) {
  ComponentReport r = (strong && t.directed()) ? strong_components(t)
                                               : weak_components(t);
  r.largest = 0;
  for (std::uint32_t id = 1; id < r.count; ++id)
    if (r.sizes[id] > r.sizes[r.largest]) r.largest = id;
  return r;
}

bool is_connected(const Topology& t) {
  return components(t).count == 1;
}

}  // namespace netrob
