#pragma once

#include "diskscale/model.hpp"

#include <string>
#include <vector>

namespace diskscale {

struct SolveOptions {
  std::string solver = "fpt";  // oracle | fpt | treewidth | eptas
  double eps = 1.0;
  long long cap = 0;  // 0 keeps each solver's default cap
};

/// Runs the named solver. Throws std::invalid_argument when the solver does
/// not handle the instance's problem.
Verdict solve(const Instance& inst, const SolveOptions& opts);

/// k and mu a witness from `opts` must be checked against (relaxed for eptas).
ValidateOptions witness_bounds(const Instance& inst, const SolveOptions& opts);

const std::vector<std::string>& solver_names();

}  // namespace diskscale
