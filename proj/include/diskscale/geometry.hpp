#pragma once

#include <Eigen/Core>

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace diskscale {

using Point = Eigen::Vector2d;

/// Open disks meet iff r_p + r_q > d; closed disks iff r_p + r_q >= d.
enum class DiskModel { Open, Closed };

/// Edge classification by center distance: how many endpoints must be shrunk
/// to radius alpha to separate the two unit disks.
enum class NuClass { One, Two, Bottom };

double distance(const Point& p, const Point& q);
double squared_distance(const Point& p, const Point& q);

/// Classifies a unit-disk-graph edge of length d in (0, 2].
/// `widen` enlarges the Bottom band to d < 2*alpha + widen (default exact).
/// Throws std::domain_error for d outside (0, 2] or alpha outside [0, 1].
NuClass nu(double d, double alpha, double widen = 0.0);

/// Same as nu() but total: d == 0 (coincident centers) is Bottom.
NuClass edge_nu(double d, double alpha, double widen = 0.0);

/// `slack` > 0 treats near-touching open disks as separated (and near-touching
/// closed disks as touching); 0 is exact.
bool disks_intersect(double d, double r_p, double r_q, DiskModel model, double slack = 0.0);

struct DiskEdge {
  int u = 0;  // u < v
  int v = 0;
  double dist = 0.0;
};

/// Simple undirected intersection graph over point indices.
class DiskGraph {
 public:
  DiskGraph() = default;
  explicit DiskGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

  void add_edge(int u, int v, double dist);

  int size() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<DiskEdge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<DiskEdge> edges_;
};

DiskGraph build_disk_graph(std::span<const Point> points, std::span<const double> radii,
                           DiskModel model, double slack = 0.0);

/// G(P, 1).
DiskGraph unit_disk_graph(std::span<const Point> points, DiskModel model);

using CellIndex = std::pair<long long, long long>;

/// Buckets points into half-open cells [a, a+side) x [b, b+side) anchored at `origin`.
std::map<CellIndex, std::vector<int>> unit_cells(std::span<const Point> points, double side,
                                                 const Point& origin);

CellIndex cell_of(const Point& p, double side, const Point& origin);

}  // namespace diskscale
