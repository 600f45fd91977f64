#pragma once

// Test-side reference solvers, independent of the library's algorithms.

#include "diskscale/lp.hpp"
#include "diskscale/model.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace oracles {

using namespace diskscale;

// Grid search at resolution `step` over all but the last variable; the last
// one takes its best feasible value in closed form (objective coefficient > 0,
// maximization, nonnegative row coefficients).
inline std::optional<double> grid_search(const LinearProgram<double>& lp, double step = 1e-3) {
  const int n = lp.num_vars();
  const int last = n - 1;
  std::vector<int> steps(static_cast<std::size_t>(last));
  for (int j = 0; j < last; ++j) steps[static_cast<std::size_t>(j)] = static_cast<int>(std::round((lp.upper(j) - lp.lower(j)) / step));
  std::optional<double> best;
  Eigen::VectorXd x(n);
  std::vector<int> idx(static_cast<std::size_t>(last), 0);
  for (;;) {
    for (int j = 0; j < last; ++j) x(j) = std::min(lp.upper(j), lp.lower(j) + idx[static_cast<std::size_t>(j)] * step);
    double top = lp.upper(last);
    for (const auto& row : lp.rows()) {
      double rest = 0, own = 0;
      for (const auto& [j, a] : row.terms) (j == last ? own : rest) += a * (j == last ? 1.0 : x(j));
      if (own > 0) top = std::min(top, (row.rhs - rest) / own);
    }
    x(last) = top;
    if (top >= lp.lower(last) && max_violation(lp, x) <= 1e-12) {
      double v = 0;
      for (int j = 0; j < n; ++j) v += lp.objective(j) * x(j);
      if (!best || v > *best) best = v;
    }
    int j = 0;
    while (j < last && ++idx[static_cast<std::size_t>(j)] > steps[static_cast<std::size_t>(j)]) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == last) break;
  }
  return best;
}

// Largest shrinkable set by trying every subset.
inline int brute_connectivity(const Instance& inst) {
  const int n = inst.size();
  int best = -1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (static_cast<int>(s.size()) <= best) continue;
    Instance probe = inst;
    probe.k = 0;
    if (validate(probe, uniform_solution(n, s, inst.alpha), ValidateOptions::exact()).ok) best = static_cast<int>(s.size());
  }
  return best;
}

inline bool is_connected_probe(const Instance& inst) {
  Instance probe = inst;
  probe.k = 0;
  return validate(probe, uniform_solution(inst.size(), {}, inst.alpha)).ok;
}

}  // namespace oracles
