#include "diskscale/combinatorics.hpp"
#include "diskscale/kernel_indep.hpp"
#include "diskscale/shrink_lp.hpp"
#include "diskscale/solvers.hpp"

#include <limits>

namespace diskscale {

namespace {

void require_independence(const Instance& inst) {
  if (!is_independence(inst.problem)) throw std::invalid_argument("independence variant required");
}

// Minimum-cost solution over every S drawn from `candidates` with |S| <= k,
// one LP per S. Indices refer to `points`.
struct MinSearch {
  std::optional<ShrinkLpSolution> best;
  long long guesses = 0;
};

MinSearch min_over_subsets(std::span<const Point> points, const std::vector<int>& candidates, int k, double alpha) {
  const auto pairs = close_pairs(points);
  MinSearch out;
  std::vector<int> s;
  for_each_subset(static_cast<int>(candidates.size()), 0, k, [&](const std::vector<int>& idx) {
    ++out.guesses;
    s.clear();
    for (int i : idx) s.push_back(candidates[static_cast<std::size_t>(i)]);
    auto sol = min_cost_radii(points, s, alpha, pairs);
    if (sol && (!out.best || sol->cost < out.best->cost)) out.best = std::move(sol);
    return true;
  });
  return out;
}

Verdict min_verdict(const Instance& inst, std::optional<ShrinkLpSolution> best) {
  Verdict v;
  if (!best) {
    v.note = "no radius assignment with at most k shrunk points";
    return v;
  }
  v.optimum_cost = best->cost;
  Solution sol = solution_from_radii(std::move(best->radii));
  v.optimum_count = static_cast<int>(sol.shrunk.size());
  if (best->cost <= *inst.mu + 1e-9) {
    v.answer = Answer::Yes;
    v.witness = std::move(sol);
  } else {
    v.note = "minimum cost exceeds mu";
  }
  return v;
}

}  // namespace

Verdict oracle_independence(const Instance& inst, const OracleOptions& opts) {
  require_independence(inst);
  const int n = inst.size();
  if (n > opts.max_points) {
    throw SizeCapExceeded("oracle_independence: " + std::to_string(n) + " points exceed cap " +
                          std::to_string(opts.max_points));
  }
  if (is_min_variant(inst.problem)) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return min_verdict(inst, min_over_subsets(inst.points, all, inst.k, inst.alpha).best);
  }
  Verdict v;
  v.note = "no S with |S| <= k makes the graph edgeless";
  for_each_subset(n, 0, inst.k, [&](const std::vector<int>& s) {
    Solution sol = uniform_solution(n, s, inst.alpha);
    if (!validate(inst, sol, ValidateOptions::exact())) return true;
    v.answer = Answer::Yes;
    v.optimum_count = static_cast<int>(s.size());
    v.optimum_cost = cost(sol);
    v.witness = std::move(sol);
    v.note.clear();
    return false;
  });
  return v;
}

Verdict fpt_min_independence(const Instance& inst, FptStats* stats) {
  if (inst.problem != Problem::MinShrinkIndependence) throw std::invalid_argument("fpt_min_independence: Min variant required");
  const KernelResult kr = kernelize(inst);
  if (stats) *stats = {};
  if (kr.short_circuit_no) {
    Verdict v;
    v.note = "2-approximate vertex cover exceeds 2k";
    return v;
  }
  const Instance sub = restrict_instance(inst, kr.kept);
  std::vector<int> all(kr.kept.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  MinSearch found = min_over_subsets(sub.points, all, inst.k, inst.alpha);
  if (stats) {
    stats->guesses = found.guesses;
    stats->kernel_size = static_cast<int>(kr.kept.size());
  }
  if (found.best) {
    std::vector<double> lifted(static_cast<std::size_t>(inst.size()), 1.0);
    for (std::size_t i = 0; i < kr.kept.size(); ++i) lifted[static_cast<std::size_t>(kr.kept[i])] = found.best->radii[i];
    found.best->radii = std::move(lifted);
  }
  return min_verdict(inst, std::move(found.best));
}

Verdict fpt_independence(const Instance& inst, FptStats* stats) {
  require_independence(inst);
  if (is_min_variant(inst.problem)) return fpt_min_independence(inst, stats);
  const KernelResult kr = kernelize(inst);
  if (stats) *stats = {};
  if (kr.short_circuit_no) {
    Verdict v;
    v.note = "2-approximate vertex cover exceeds 2k";
    return v;
  }
  if (stats) stats->kernel_size = static_cast<int>(kr.kept.size());
  const Instance sub = restrict_instance(inst, kr.kept);
  Verdict v = solve_forced_vc(to_forced_vc(sub), inst.k);
  if (v.witness) {
    std::vector<int> s;
    for (int i : v.witness->shrunk) s.push_back(kr.kept[static_cast<std::size_t>(i)]);
    v.witness = uniform_solution(inst.size(), std::move(s), inst.alpha);
  }
  return v;
}

}  // namespace diskscale
