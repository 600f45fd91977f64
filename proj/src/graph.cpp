#include "diskscale/graph.hpp"

#include <vector>

namespace diskscale {

std::vector<int> component_labels(const DiskGraph& g, int* num_components) {
  const int n = g.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (num_components) *num_components = next;
  return label;
}

bool is_connected(const DiskGraph& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

bool is_forest(const DiskGraph& g) {
  const int n = g.size();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      bool skipped_parent = false;
      for (int w : g.neighbors(v)) {
        // Simple graph: the tree edge back to the parent appears exactly once.
        if (w == parent[static_cast<std::size_t>(v)] && !skipped_parent) {
          skipped_parent = true;
          continue;
        }
        if (parent[static_cast<std::size_t>(w)] != -2) return false;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return true;
}

DiskGraph induced_subgraph(const DiskGraph& g, const std::vector<int>& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  DiskGraph h(static_cast<int>(vertices.size()));
  for (const auto& e : g.edges()) {
    const int a = local[static_cast<std::size_t>(e.u)];
    const int b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) h.add_edge(a, b, e.dist);
  }
  return h;
}

}  // namespace diskscale
