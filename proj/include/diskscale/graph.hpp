#pragma once

#include "diskscale/geometry.hpp"

#include <numeric>
#include <vector>

namespace diskscale {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  /// False when x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[static_cast<std::size_t>(x)] < rank_[static_cast<std::size_t>(y)]) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    if (rank_[static_cast<std::size_t>(x)] == rank_[static_cast<std::size_t>(y)]) ++rank_[static_cast<std::size_t>(x)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

/// Component label per vertex, labels dense from 0 in order of first vertex.
std::vector<int> component_labels(const DiskGraph& g, int* num_components = nullptr);

bool is_connected(const DiskGraph& g);

/// DFS-based cycle test.
bool is_forest(const DiskGraph& g);

/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
DiskGraph induced_subgraph(const DiskGraph& g, const std::vector<int>& vertices);

}  // namespace diskscale
