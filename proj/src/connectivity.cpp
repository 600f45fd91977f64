#include "diskscale/graph.hpp"
#include "diskscale/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace diskscale {

namespace {

bool connected_with(const Instance& inst, const std::vector<double>& radii) {
  return is_connected(build_disk_graph(inst.points, radii, DiskModel::Closed));
}

}  // namespace

double connectivity_degree_threshold(double alpha, int k) {
  if (alpha <= 0.0) return std::numeric_limits<double>::infinity();
  const double t = 4.0 / alpha + 1.0;
  return 9.0 * t * t + 9.0 + k;
}

std::vector<bool> unshrinkable_points(const Instance& inst) {
  const int n = inst.size();
  std::vector<bool> marked(static_cast<std::size_t>(n), false);
  std::vector<double> radii(static_cast<std::size_t>(n), 1.0);
  for (int p = 0; p < n; ++p) {
    radii[static_cast<std::size_t>(p)] = inst.alpha;
    marked[static_cast<std::size_t>(p)] = !connected_with(inst, radii);
    radii[static_cast<std::size_t>(p)] = 1.0;
  }
  return marked;
}

Verdict solve_connectivity(const Instance& inst, const ConnectivityOptions& opts) {
  if (inst.problem == Problem::ExpandConnectivity) throw std::invalid_argument("solve_connectivity: expansion is parsed but not solved");
  if (inst.problem != Problem::ShrinkConnectivity) throw std::invalid_argument("solve_connectivity: connectivity variant required");
  const int n = inst.size();
  Verdict v;
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Closed);
  if (!is_connected(h)) {
    v.note = "G(P,1) is disconnected";
    return v;
  }
  auto accept = [&](std::vector<int> s) {
    v.answer = Answer::Yes;
    v.optimum_count.reset();
    v.witness = uniform_solution(n, std::move(s), inst.alpha);
    v.optimum_cost = cost(*v.witness);
    v.note.clear();
  };
  if (inst.k <= 0) {
    accept({});
    return v;
  }
  if (inst.k > n) {
    v.note = "k exceeds the number of points";
    return v;
  }
  const std::vector<bool> marked = unshrinkable_points(inst);
  std::vector<int> candidates;
  for (int p = 0; p < n; ++p) {
    if (!marked[static_cast<std::size_t>(p)]) candidates.push_back(p);
  }
  if (static_cast<int>(candidates.size()) < inst.k) {
    v.note = "fewer than k shrinkable points";
    return v;
  }

  std::vector<double> radii(static_cast<std::size_t>(n), 1.0);
  if (h.max_degree() >= connectivity_degree_threshold(inst.alpha, inst.k)) {
    std::vector<int> s;
    for (int p : candidates) {
      radii[static_cast<std::size_t>(p)] = inst.alpha;
      if (connected_with(inst, radii)) {
        s.push_back(p);
        if (static_cast<int>(s.size()) == inst.k) break;
      } else {
        radii[static_cast<std::size_t>(p)] = 1.0;
      }
    }
    if (static_cast<int>(s.size()) >= inst.k) {
      accept(std::move(s));
      v.note = "degree gate";
      return v;
    }
    std::fill(radii.begin(), radii.end(), 1.0);
  }

  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> current, best_set;
  long long nodes = 0;
  bool capped = false;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (capped || static_cast<int>(best_set.size()) >= inst.k) return;
    if (++nodes > opts.node_cap) {
      capped = true;
      return;
    }
    if (current.size() > best_set.size()) best_set = current;
    if (current.size() + (candidates.size() - i) <= best_set.size()) return;
    if (i == candidates.size()) return;
    const int p = candidates[i];
    radii[static_cast<std::size_t>(p)] = inst.alpha;
    // Feasible sets are closed under taking subsets, so a failed include
    // prunes every superset.
    if (connected_with(inst, radii)) {
      current.push_back(p);
      search(i + 1);
      current.pop_back();
    }
    radii[static_cast<std::size_t>(p)] = 1.0;
    search(i + 1);
  };
  search(0);

  if (static_cast<int>(best_set.size()) >= inst.k) {
    std::sort(best_set.begin(), best_set.end());
    accept(std::move(best_set));
    return v;
  }
  if (capped) {
    v.answer = Answer::Inconclusive;
    v.note = "search node cap " + std::to_string(opts.node_cap) + " reached";
    return v;
  }
  v.optimum_count = static_cast<int>(best_set.size());
  v.note = "largest shrinkable set has " + std::to_string(best_set.size()) + " points";
  return v;
}

}  // namespace diskscale
