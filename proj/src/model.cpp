#include "diskscale/model.hpp"

#include "diskscale/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace diskscale {

namespace {

constexpr std::array<std::pair<Problem, std::string_view>, 6> kProblemNames{{
    {Problem::ShrinkIndependence, "shrink-independence"},
    {Problem::MinShrinkIndependence, "min-shrink-independence"},
    {Problem::ShrinkAcyclicity, "shrink-acyclicity"},
    {Problem::MinShrinkAcyclicity, "min-shrink-acyclicity"},
    {Problem::ShrinkConnectivity, "shrink-connectivity"},
    {Problem::ExpandConnectivity, "expand-connectivity"},
}};

}  // namespace

std::string_view problem_name(Problem p) {
  for (const auto& [value, name] : kProblemNames) {
    if (value == p) return name;
  }
  return "unknown";
}

std::optional<Problem> problem_from_name(std::string_view name) {
  for (const auto& [value, n] : kProblemNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

bool is_min_variant(Problem p) {
  return p == Problem::MinShrinkIndependence || p == Problem::MinShrinkAcyclicity;
}

bool is_independence(Problem p) {
  return p == Problem::ShrinkIndependence || p == Problem::MinShrinkIndependence;
}

bool is_acyclicity(Problem p) {
  return p == Problem::ShrinkAcyclicity || p == Problem::MinShrinkAcyclicity;
}

bool is_connectivity(Problem p) {
  return p == Problem::ShrinkConnectivity || p == Problem::ExpandConnectivity;
}

DiskModel natural_model(Problem p) { return is_connectivity(p) ? DiskModel::Closed : DiskModel::Open; }

void check_instance(const Instance& inst) {
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    if (!inst.points[i].allFinite()) {
      throw std::invalid_argument("points[" + std::to_string(i) + "]: coordinates must be finite");
    }
  }
  if (!std::isfinite(inst.alpha)) throw std::invalid_argument("alpha: must be finite");
  if (inst.problem == Problem::ExpandConnectivity) {
    if (inst.alpha < 1.0) throw std::invalid_argument("alpha: expansion requires alpha >= 1");
  } else if (inst.alpha < 0.0 || inst.alpha > 1.0) {
    throw std::invalid_argument("alpha: shrinking requires 0 <= alpha <= 1");
  }
  if (inst.k < 0) throw std::invalid_argument("k: must be non-negative");
  if (is_min_variant(inst.problem)) {
    if (!inst.mu) throw std::invalid_argument("mu: required for " + std::string(problem_name(inst.problem)));
    if (!std::isfinite(*inst.mu) || *inst.mu < 0.0) throw std::invalid_argument("mu: must be finite and >= 0");
  } else if (inst.mu) {
    throw std::invalid_argument("mu: only allowed for min-cost problems");
  }
  if (inst.model != natural_model(inst.problem)) {
    throw std::invalid_argument("model: " + std::string(problem_name(inst.problem)) + " uses " +
                                (natural_model(inst.problem) == DiskModel::Open ? "open" : "closed") + " disks");
  }
}

Instance make_instance(std::vector<Point> points, Problem problem, double alpha, int k, std::optional<double> mu) {
  Instance inst;
  inst.points = std::move(points);
  inst.problem = problem;
  inst.alpha = alpha;
  inst.k = k;
  inst.mu = mu;
  inst.model = natural_model(problem);
  check_instance(inst);
  return inst;
}

Instance restrict_instance(const Instance& inst, const std::vector<int>& indices) {
  Instance out = inst;
  out.points.clear();
  out.points.reserve(indices.size());
  for (int i : indices) out.points.push_back(inst.points[static_cast<std::size_t>(i)]);
  out.planted.reset();
  return out;
}

Solution uniform_solution(int n, std::vector<int> shrunk, double radius) {
  Solution s;
  std::sort(shrunk.begin(), shrunk.end());
  s.radii.assign(static_cast<std::size_t>(n), 1.0);
  for (int p : shrunk) s.radii[static_cast<std::size_t>(p)] = radius;
  s.shrunk = std::move(shrunk);
  return s;
}

Solution solution_from_radii(std::vector<double> radii) {
  Solution s;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] != 1.0) s.shrunk.push_back(static_cast<int>(i));
  }
  s.radii = std::move(radii);
  return s;
}

double cost(const Solution& sol) {
  double total = 0.0;
  for (int p : sol.shrunk) total += 1.0 - sol.radii[static_cast<std::size_t>(p)];
  return total;
}

Solution normalize(Solution sol) {
  std::erase_if(sol.shrunk, [&](int p) { return sol.radii[static_cast<std::size_t>(p)] == 1.0; });
  return sol;
}

std::string_view answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

void check_well_formed(const Instance& inst, const Solution& sol) {
  const int n = inst.size();
  if (static_cast<int>(sol.radii.size()) != n) {
    throw MalformedSolution("radii: expected " + std::to_string(n) + " entries, got " + std::to_string(sol.radii.size()),
                            static_cast<int>(sol.radii.size()));
  }
  for (int i = 0; i < n; ++i) {
    const double r = sol.radii[static_cast<std::size_t>(i)];
    if (!std::isfinite(r) || r < 0.0) {
      throw MalformedSolution("radii[" + std::to_string(i) + "]: must be finite and non-negative", i);
    }
  }
  for (std::size_t j = 0; j < sol.shrunk.size(); ++j) {
    const int p = sol.shrunk[j];
    if (p < 0 || p >= n) throw MalformedSolution("shrunk: index " + std::to_string(p) + " out of range", p);
    if (j > 0 && sol.shrunk[j - 1] >= p) {
      throw MalformedSolution("shrunk: indices must be strictly ascending at " + std::to_string(p), p);
    }
  }
}

ValidationResult reject(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

ValidationResult validate(const Instance& inst, const Solution& raw, const ValidateOptions& opts) {
  check_well_formed(inst, raw);
  const Solution sol = is_min_variant(inst.problem) ? normalize(raw) : raw;
  const int n = inst.size();
  const int k = opts.k_override.value_or(inst.k);
  const int s = static_cast<int>(sol.shrunk.size());

  if (inst.problem == Problem::ShrinkConnectivity) {
    if (s < k) return reject("|S| = " + std::to_string(s) + " below k = " + std::to_string(k));
  } else if (s > k) {
    return reject("|S| = " + std::to_string(s) + " exceeds k = " + std::to_string(k));
  }

  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (int p : sol.shrunk) in_s[static_cast<std::size_t>(p)] = true;
  for (int i = 0; i < n; ++i) {
    const double r = sol.radii[static_cast<std::size_t>(i)];
    const std::string where = "radius of point " + std::to_string(i);
    if (!in_s[static_cast<std::size_t>(i)]) {
      if (r != 1.0) return reject(where + " is not 1 although the point is not in S");
      continue;
    }
    if (is_min_variant(inst.problem)) {
      if (r > 1.0) return reject(where + " exceeds 1");
      if (r < inst.alpha - opts.slack) return reject(where + " is below alpha");
    } else if (std::abs(r - inst.alpha) > opts.slack) {
      return reject(where + " differs from alpha");
    }
  }

  const DiskGraph g = build_disk_graph(inst.points, sol.radii, inst.model, opts.slack);
  if (is_independence(inst.problem)) {
    if (g.num_edges() > 0) {
      const auto& e = g.edges().front();
      return reject("edge present between " + std::to_string(e.u) + " and " + std::to_string(e.v));
    }
  } else if (is_acyclicity(inst.problem)) {
    if (!is_forest(g)) return reject("cycle present");
  } else if (!is_connected(g)) {
    return reject("graph disconnected");
  }

  if (is_min_variant(inst.problem)) {
    const double budget = opts.mu_override.value_or(*inst.mu);
    const double c = cost(sol);
    if (c > budget + opts.slack) return reject("cost " + std::to_string(c) + " exceeds mu " + std::to_string(budget));
  }
  return {true, {}};
}

}  // namespace diskscale
