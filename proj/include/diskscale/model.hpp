#pragma once

#include "diskscale/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diskscale {

enum class Problem {
  ShrinkIndependence,
  MinShrinkIndependence,
  ShrinkAcyclicity,
  MinShrinkAcyclicity,
  ShrinkConnectivity,
  ExpandConnectivity,
};

std::string_view problem_name(Problem p);
std::optional<Problem> problem_from_name(std::string_view name);

bool is_min_variant(Problem p);
bool is_independence(Problem p);
bool is_acyclicity(Problem p);
bool is_connectivity(Problem p);
DiskModel natural_model(Problem p);

/// Known optimum attached by the planted generator.
struct PlantedOptimum {
  int count = 0;
  double cost = 0.0;
};

struct Instance {
  std::vector<Point> points;
  Problem problem = Problem::ShrinkIndependence;
  double alpha = 0.5;
  int k = 0;
  std::optional<double> mu;
  DiskModel model = DiskModel::Open;
  std::optional<PlantedOptimum> planted;

  int size() const { return static_cast<int>(points.size()); }
};

/// Builds an instance with the model implied by the problem and checks every
/// instance invariant; throws std::invalid_argument naming the violated field.
Instance make_instance(std::vector<Point> points, Problem problem, double alpha, int k,
                       std::optional<double> mu = std::nullopt);

void check_instance(const Instance& inst);

/// Same parameters, points restricted to `indices` (in the given order).
Instance restrict_instance(const Instance& inst, const std::vector<int>& indices);

struct Solution {
  std::vector<int> shrunk;     // S, ascending
  std::vector<double> radii;   // one entry per point
};

/// r = `radius` on `shrunk`, 1 elsewhere.
Solution uniform_solution(int n, std::vector<int> shrunk, double radius);

/// Rebuilds S as {p : r(p) != 1}.
Solution solution_from_radii(std::vector<double> radii);

double cost(const Solution& sol);

/// Drops points with r(p) = 1 from S.
Solution normalize(Solution sol);

enum class Answer { Yes, No, Inconclusive };
std::string_view answer_name(Answer a);

struct Verdict {
  Answer answer = Answer::No;
  std::optional<Solution> witness;
  std::optional<double> optimum_cost;
  std::optional<int> optimum_count;
  std::string note;

  bool yes() const { return answer == Answer::Yes; }
};

class MalformedSolution : public std::invalid_argument {
 public:
  MalformedSolution(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

struct ValidateOptions {
  /// Tolerance on radius sums, radius bounds and the cost budget. LP-derived
  /// witnesses carry round-off of order 1e-12, so the default is not zero.
  double slack = 1e-9;
  /// Overrides for bicriteria checks.
  std::optional<int> k_override;
  std::optional<double> mu_override;

  static ValidateOptions exact() {
    ValidateOptions o;
    o.slack = 0.0;
    return o;
  }
};

struct ValidationResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Single source of truth for solution feasibility. Throws MalformedSolution
/// when the radii vector or S does not describe a radius assignment.
ValidationResult validate(const Instance& inst, const Solution& sol, const ValidateOptions& opts = {});

}  // namespace diskscale
