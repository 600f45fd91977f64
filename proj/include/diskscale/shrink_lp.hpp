#pragma once

#include "diskscale/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace diskscale {

struct ShrinkLpSolution {
  std::vector<double> radii;  // one per point, 1 on fixed points
  double cost = 0.0;
};

/// Minimum-cost radii with r(p) in [alpha, 1] for p in `shrinkable` and r = 1
/// elsewhere, subject to r(u) + r(v) <= dist for every listed pair.
/// nullopt when infeasible.
std::optional<ShrinkLpSolution> min_cost_radii(std::span<const Point> points, std::span<const int> shrinkable,
                                               double alpha, std::span<const DiskEdge> separated);

/// Every pair at distance <= 2 (the only pairs unit radii can make touch).
std::vector<DiskEdge> close_pairs(std::span<const Point> points);

}  // namespace diskscale
