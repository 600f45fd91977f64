#include "diskscale/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diskscale {

double squared_distance(const Point& p, const Point& q) { return (p - q).squaredNorm(); }

double distance(const Point& p, const Point& q) { return (p - q).norm(); }

NuClass edge_nu(double d, double alpha, double widen) {
  // Compare radius sums directly so the classification agrees bit-for-bit
  // with disks_intersect() on {alpha, 1} radii.
  if (alpha + alpha > d - widen) return NuClass::Bottom;
  if (1.0 + alpha > d) return NuClass::Two;
  return NuClass::One;
}

NuClass nu(double d, double alpha, double widen) {
  if (!(d > 0.0) || d > 2.0) {
    throw std::domain_error("nu: distance " + std::to_string(d) + " outside (0, 2]");
  }
  if (!(alpha >= 0.0) || alpha > 1.0) {
    throw std::domain_error("nu: alpha " + std::to_string(alpha) + " outside [0, 1]");
  }
  return edge_nu(d, alpha, widen);
}

bool disks_intersect(double d, double r_p, double r_q, DiskModel model, double slack) {
  const double sum = r_p + r_q;
  if (model == DiskModel::Open) return sum > d + slack;
  return sum >= d - slack;
}

void DiskGraph::add_edge(int u, int v, double dist) {
  if (u > v) std::swap(u, v);
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  edges_.push_back({u, v, dist});
}

int DiskGraph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

bool DiskGraph::has_edge(int u, int v) const {
  const auto& a = neighbors(u);
  return std::find(a.begin(), a.end(), v) != a.end();
}

DiskGraph build_disk_graph(std::span<const Point> points, std::span<const double> radii,
                           DiskModel model, double slack) {
  if (radii.size() != points.size()) {
    throw std::invalid_argument("build_disk_graph: radii/points size mismatch");
  }
  const int n = static_cast<int>(points.size());
  DiskGraph g(n);
  for (int i = 0; i < n; ++i) {
    if (!(radii[static_cast<std::size_t>(i)] >= 0.0)) {
      throw std::invalid_argument("build_disk_graph: negative radius at index " + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      if (disks_intersect(d, radii[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(j)], model, slack)) {
        g.add_edge(i, j, d);
      }
    }
  }
  return g;
}

DiskGraph unit_disk_graph(std::span<const Point> points, DiskModel model) {
  const std::vector<double> ones(points.size(), 1.0);
  return build_disk_graph(points, ones, model);
}

CellIndex cell_of(const Point& p, double side, const Point& origin) {
  return {static_cast<long long>(std::floor((p.x() - origin.x()) / side)),
          static_cast<long long>(std::floor((p.y() - origin.y()) / side))};
}

std::map<CellIndex, std::vector<int>> unit_cells(std::span<const Point> points, double side,
                                                 const Point& origin) {
  if (!(side > 0.0)) throw std::invalid_argument("unit_cells: side must be positive");
  std::map<CellIndex, std::vector<int>> cells;
  for (std::size_t i = 0; i < points.size(); ++i) {
    cells[cell_of(points[i], side, origin)].push_back(static_cast<int>(i));
  }
  return cells;
}

}  // namespace diskscale
