#pragma once

#include "diskscale/model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace diskscale {

struct KernelResult {
  std::vector<int> kept;     // T, ascending
  std::vector<int> cover;    // U, ascending
  std::vector<int> dropped;  // P \ T
  bool short_circuit_no = false;
};

/// Greedy maximal matching on G(P,1), lowest-index edges first. nullopt when
/// |U| > 2k, which certifies a no-instance.
std::optional<std::vector<int>> vc_gate(const Instance& inst);

/// T = U together with every H-neighbour of U. Points outside T are isolated in H.
KernelResult kernelize(const Instance& inst);

using IndexPair = std::pair<int, int>;

struct ForcedVcInstance {
  int n = 0;
  double alpha = 0.0;
  std::vector<int> forced;           // endpoints of Two edges, ascending
  std::vector<IndexPair> vc_edges;   // One edges
  std::optional<IndexPair> infeasible_edge;
};

/// Classifies every edge of G(P,1) by nu. Cardinality independence only.
ForcedVcInstance to_forced_vc(const Instance& inst);

/// Minimum vertex cover of `edges` of size <= limit by bounded branching;
/// nullopt if none exists within the limit.
std::optional<std::vector<int>> min_vertex_cover(int n, const std::vector<IndexPair>& edges, int limit);

/// S = forced plus a minimum cover of the One edges not already covered.
Verdict solve_forced_vc(const ForcedVcInstance& fvi, int k);

}  // namespace diskscale
