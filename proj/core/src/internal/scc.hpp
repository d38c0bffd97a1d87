#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ordgram::internal {

// Strongly connected components of a digraph given as adjacency lists.
// Returns {component count, component id per node}.  Ids are in reverse
// topological order: every edge u -> v between distinct components satisfies
// comp[v] < comp[u].  Iterative Tarjan, safe for deep graphs.
inline std::pair<int, std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0;
  int comp_count = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t u = static_cast<std::size_t>(f.node);
      if (f.edge == 0) {
        index[u] = low[u] = next_index++;
        stack.push_back(f.node);
        on_stack[u] = true;
      }
      bool descended = false;
      while (f.edge < adj[u].size()) {
        int w = adj[u][f.edge++];
        const std::size_t wu = static_cast<std::size_t>(w);
        if (index[wu] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wu] && index[wu] < low[u]) low[u] = index[wu];
      }
      if (descended) continue;
      if (low[u] == index[u]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = comp_count;
          if (w == f.node) break;
        }
        ++comp_count;
      }
      int done = f.node;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t p = static_cast<std::size_t>(call.back().node);
        if (low[static_cast<std::size_t>(done)] < low[p]) low[p] = low[static_cast<std::size_t>(done)];
      }
    }
  }
  return {comp_count, std::move(comp)};
}

}  // namespace ordgram::internal
