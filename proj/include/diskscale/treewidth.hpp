#pragma once

#include "diskscale/model.hpp"

#include <string>
#include <vector>

namespace diskscale {

enum class NodeKind { Raw, Leaf, Introduce, Forget, Join };

struct TdNode {
  NodeKind kind = NodeKind::Raw;
  int vertex = -1;         // introduced or forgotten vertex
  std::vector<int> bag;    // ascending
  std::vector<int> children;
};

struct TreeDecomposition {
  std::vector<TdNode> nodes;
  int root = -1;
  bool nice = false;

  int width() const;
};

/// Elimination by minimum fill-in, ties to the lowest vertex index.
TreeDecomposition min_fill_decomposition(const DiskGraph& g);

/// Leaf / introduce / forget / join form with empty leaves and an empty root.
TreeDecomposition make_nice(const TreeDecomposition& raw);

TreeDecomposition decompose(const DiskGraph& g);

/// Edge coverage and connected occurrence subtrees; for nice decompositions
/// also the per-kind bag relations. `why` receives the first violation.
bool is_valid_decomposition(const DiskGraph& g, const TreeDecomposition& td, std::string* why = nullptr);

/// (2/alpha + 1)^2 - 1 for independence, 6(2/alpha + 1)^2 - 1 for acyclicity.
double clique_degree_threshold(Problem problem, double alpha);

/// False when G(P,1) has a vertex of degree above the threshold (a no-instance).
bool clique_degree_gate(const Instance& inst);

/// Cardinality independence: bag-subset DP. optimum_count is the minimum |S|.
Verdict dp_independence(const Instance& inst, const TreeDecomposition& td);

/// Cardinality acyclicity: DP over (bag subset, forest partition of the bag).
Verdict dp_acyclicity(const Instance& inst, const TreeDecomposition& td);

/// Gate, decompose G(P,1), then the matching DP.
Verdict solve_treewidth(const Instance& inst);

}  // namespace diskscale
