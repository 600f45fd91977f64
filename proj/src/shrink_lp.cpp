#include "diskscale/shrink_lp.hpp"

#include "diskscale/lp.hpp"

#include <algorithm>

namespace diskscale {

std::optional<ShrinkLpSolution> min_cost_radii(std::span<const Point> points, std::span<const int> shrinkable,
                                               double alpha, std::span<const DiskEdge> separated) {
  const int n = static_cast<int>(points.size());
  std::vector<int> var(static_cast<std::size_t>(n), -1);
  LinearProgram<double> lp(Sense::Maximize);
  for (int p : shrinkable) {
    if (var[static_cast<std::size_t>(p)] < 0) var[static_cast<std::size_t>(p)] = lp.add_var(alpha, 1.0, 1.0);
  }
  // Per-variable upper bounds coming from pairs with one fixed endpoint.
  std::vector<double> cap(static_cast<std::size_t>(lp.num_vars()), 1.0);
  for (const DiskEdge& e : separated) {
    const int a = var[static_cast<std::size_t>(e.u)];
    const int b = var[static_cast<std::size_t>(e.v)];
    if (a < 0 && b < 0) {
      if (e.dist < 2.0) return std::nullopt;
    } else if (a < 0 || b < 0) {
      auto& c = cap[static_cast<std::size_t>(std::max(a, b))];
      c = std::min(c, e.dist - 1.0);
    } else {
      lp.add_row({{a, 1.0}, {b, 1.0}}, e.dist);
    }
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    const double c = cap[static_cast<std::size_t>(j)];
    if (c < alpha) return std::nullopt;
    if (c < 1.0) lp.add_row({{j, 1.0}}, c);
  }

  ShrinkLpSolution out;
  out.radii.assign(static_cast<std::size_t>(n), 1.0);
  if (lp.num_vars() == 0) return out;
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  for (int p = 0; p < n; ++p) {
    const int j = var[static_cast<std::size_t>(p)];
    if (j < 0) continue;
    // Snap round-off so untouched points do not count as shrunk.
    const double r = res.x(j);
    out.radii[static_cast<std::size_t>(p)] = r > 1.0 - 1e-12 ? 1.0 : r;
  }
  for (double r : out.radii) out.cost += 1.0 - r;
  return out;
}

std::vector<DiskEdge> close_pairs(std::span<const Point> points) {
  std::vector<DiskEdge> out;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      if (d <= 2.0) out.push_back({i, j, d});
    }
  }
  return out;
}

}  // namespace diskscale
