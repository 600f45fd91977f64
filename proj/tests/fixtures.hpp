#pragma once

#include "diskscale/model.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace fixtures {

using diskscale::Point;

inline std::vector<Point> random_points(std::mt19937_64& rng, int n, double side) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng));
  return pts;
}

inline std::vector<Point> regular_polygon(int n, double side, Point center = {0, 0}) {
  const double pi = std::acos(-1.0);
  const double radius = side / (2.0 * std::sin(pi / n));
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * pi * i / n;
    pts.emplace_back(center.x() + radius * std::cos(t), center.y() + radius * std::sin(t));
  }
  return pts;
}

inline std::vector<Point> collinear(int n, double spacing) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(spacing * i, 0.0);
  return pts;
}

inline int count_edges(const std::vector<Point>& pts) {
  int m = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) m += (pts[i] - pts[j]).norm() < 2.0;
  }
  return m;
}

}  // namespace fixtures
