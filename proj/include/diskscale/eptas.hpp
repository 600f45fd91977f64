#pragma once

#include "diskscale/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskscale {

/// ceil(16 / eps).
int eptas_ell(double eps);

/// floor((1 + eps) k): the relaxed shrink-count budget.
int eptas_budget(int k, double eps);

struct EptasOptions {
  double eps = 1.0;
  long long guess_cap = 10000000;  // per connected piece of a cell
};

struct EptasStats {
  int ell = 0;
  long long shifts = 0;
  long long pieces_solved = 0;  // distinct memoized components
  long long guesses = 0;
};

class EptasRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-budget minimum cost for the subproblem on `members` (a cell's expanded
/// point set), non-increasing in t; +inf where no solution exists.
std::vector<double> eptas_cell_costs(const Instance& inst, const std::vector<int>& members, const EptasOptions& opts = {});

/// Composed solution of a single shift (i, j), nullopt when the shift fails.
std::optional<Solution> eptas_shift(const Instance& inst, int i, int j, const EptasOptions& opts = {});

/// Shifted-grid scheme for both independence variants. A yes verdict carries a
/// witness with |S| <= floor((1+eps)k) and, for the Min variant,
/// cost <= (1+eps) mu.
Verdict eptas_independence(const Instance& inst, const EptasOptions& opts = {}, EptasStats* stats = nullptr);

}  // namespace diskscale
