#pragma once

#include "diskscale/model.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diskscale {

enum class EdgeKind { Original, Reducible };

/// One edge of the compressed multigraph. Endpoints are point indices, u <= v.
struct AnnotatedEdge {
  EdgeKind kind = EdgeKind::Original;
  int u = 0;
  int v = 0;
  double d = 0.0;  // original edges
  // Reducible edges: path u = v0, v1, ..., vl, v(l+1) = v.
  double d_start = 0.0;  // |v0 v1|
  double d_end = 0.0;    // |vl v(l+1)|
  std::optional<double> d_max;                 // longest interior edge, none when l < 2
  std::optional<std::pair<int, int>> max_edge;  // interior edge realizing d_max
  std::vector<int> path;                        // v1..vl

  bool self_loop() const { return u == v; }
};

inline constexpr int kUnbreakable = std::numeric_limits<int>::max();

/// A component of the pruned graph that is a bare cycle.
struct CycleVertex {
  int count_needed = 0;  // 1, 2 or kUnbreakable
  double cost_needed = 0.0;
  double d_max = 0.0;
  std::pair<int, int> max_edge{0, 0};
  std::vector<int> members;  // in cycle order
};

struct AnnotatedMultigraph {
  std::vector<int> core;  // degree >= 3 in the pruned graph, ascending
  std::vector<AnnotatedEdge> edges;
  std::vector<CycleVertex> cycles;

  /// Degree of a core vertex, self-loops counting twice.
  int degree(int p) const;
};

struct CompressResult {
  AnnotatedMultigraph graph;
  int k_remaining = 0;
  double fixed_cost = 0.0;
  bool short_circuit_no = false;
  std::string reason;
};

/// 25k + 50.
long long degree_limit(int k);

/// k(Delta - 1) + 3k - 1 with Delta = 25k + 51.
long long core_size_limit(int k);

/// False when some vertex of G(P,1) has degree above degree_limit(k).
bool degree_gate(const Instance& inst);

/// Vertices left after repeatedly deleting degree <= 1 vertices and acyclic components.
std::vector<int> prune(const Instance& inst);

/// Longest edge of a cycle or path given as consecutive points; ties go to the
/// lexicographically smallest (min index, max index) pair.
std::pair<int, int> longest_edge(const Instance& inst, const std::vector<int>& walk, bool closed);

CompressResult compress(const Instance& inst);

/// Size gate on a finished compression.
bool size_gate(const AnnotatedMultigraph& g, int k);

}  // namespace diskscale
