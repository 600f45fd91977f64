#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diskscale {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Box-bounded variables, rows sum_j a_j x_j <= rhs, linear objective.
/// Lower bounds must be finite; upper bounds may be +inf.
template <typename Scalar>
class LinearProgram {
 public:
  using Term = std::pair<int, Scalar>;
  struct Row {
    std::vector<Term> terms;
    Scalar rhs;
  };

  explicit LinearProgram(Sense sense = Sense::Minimize) : sense_(sense) {}

  int add_var(Scalar lower, Scalar upper, Scalar objective = Scalar(0)) {
    if (!(lower <= upper)) throw std::invalid_argument("lp: lower bound exceeds upper bound");
    if (!std::isfinite(static_cast<double>(lower))) throw std::invalid_argument("lp: lower bound must be finite");
    lower_.push_back(lower);
    upper_.push_back(upper);
    objective_.push_back(objective);
    return num_vars() - 1;
  }

  void add_row(std::vector<Term> terms, Scalar rhs) {
    for (const auto& [j, a] : terms) {
      if (j < 0 || j >= num_vars()) throw std::invalid_argument("lp: row references unknown variable " + std::to_string(j));
    }
    rows_.push_back({std::move(terms), rhs});
  }

  void set_objective(int j, Scalar c) { objective_.at(static_cast<std::size_t>(j)) = c; }

  int num_vars() const { return static_cast<int>(lower_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  Sense sense() const { return sense_; }
  Scalar lower(int j) const { return lower_[static_cast<std::size_t>(j)]; }
  Scalar upper(int j) const { return upper_[static_cast<std::size_t>(j)]; }
  Scalar objective(int j) const { return objective_[static_cast<std::size_t>(j)]; }
  const std::vector<Row>& rows() const { return rows_; }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense_rows() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(num_rows(), num_vars());
    for (int i = 0; i < num_rows(); ++i) {
      for (const auto& [j, c] : rows_[static_cast<std::size_t>(i)].terms) a(i, j) += c;
    }
    return a;
  }

 private:
  Sense sense_;
  std::vector<Scalar> lower_, upper_, objective_;
  std::vector<Row> rows_;
};

template <typename Scalar>
struct LpResult {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  LpStatus status = LpStatus::Infeasible;
  Vec x;            // optimal point (Optimal only)
  Scalar value{};   // objective at x, in the program's own sense
  Vec duals;        // row multipliers >= 0
  int iterations = 0;
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-7;
  double pivot_tol = 1e-11;
  int max_iterations = 50000;
};

class LpIterationLimit : public std::runtime_error {
 public:
  explicit LpIterationLimit(int iterations)
      : std::runtime_error("lp: iteration limit " + std::to_string(iterations) + " exceeded"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

namespace detail {

// Dense bounded-variable primal simplex on  min c^T z, T z = beta, 0 <= z <= u.
// Bland's rule on both the entering and the leaving choice.
template <typename Scalar>
class BoundedSimplex {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BoundedSimplex(Mat tableau, Vec beta, Vec upper, std::vector<int> basis, const LpOptions& opts)
      : t_(std::move(tableau)), beta_(std::move(beta)), u_(std::move(upper)), basis_(std::move(basis)),
        at_upper_(static_cast<std::size_t>(t_.cols()), false), opts_(opts) {}

  // Returns false when the objective is unbounded below.
  bool optimize(const Vec& cost, int& iterations) {
    cost_ = cost;
    reduced_ = cost_.transpose();
    for (int i = 0; i < rows(); ++i) reduced_ -= cost_(basis_[static_cast<std::size_t>(i)]) * t_.row(i);
    const Scalar dtol(1e-10);
    const Scalar ptol(opts_.pivot_tol);
    std::vector<bool> basic(static_cast<std::size_t>(cols()), false);
    for (;;) {
      std::fill(basic.begin(), basic.end(), false);
      for (int b : basis_) basic[static_cast<std::size_t>(b)] = true;
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (basic[static_cast<std::size_t>(j)] || !(u_(j) > Scalar(0))) continue;
        const bool up = at_upper_[static_cast<std::size_t>(j)];
        if ((!up && reduced_(j) < -dtol) || (up && reduced_(j) > dtol)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      if (++iterations > opts_.max_iterations) throw LpIterationLimit(opts_.max_iterations);

      const Scalar dir = at_upper_[static_cast<std::size_t>(enter)] ? Scalar(-1) : Scalar(1);
      Scalar theta = u_(enter);  // bound flip
      int leave_row = -1;
      bool leave_to_upper = false;
      for (int i = 0; i < rows(); ++i) {
        const Scalar rate = -dir * t_(i, enter);
        Scalar limit;
        bool to_upper;
        if (rate < -ptol) {
          limit = std::max(Scalar(0), beta_(i)) / -rate;
          to_upper = false;
        } else if (rate > ptol && std::isfinite(static_cast<double>(u_(basis_[static_cast<std::size_t>(i)])))) {
          limit = std::max(Scalar(0), u_(basis_[static_cast<std::size_t>(i)]) - beta_(i)) / rate;
          to_upper = true;
        } else {
          continue;
        }
        const bool better = limit < theta ||
                            (limit == theta && leave_row >= 0 &&
                             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave_row)]);
        if (better) {
          theta = limit;
          leave_row = i;
          leave_to_upper = to_upper;
        }
      }
      if (!std::isfinite(static_cast<double>(theta))) return false;

      beta_ -= dir * theta * t_.col(enter);
      if (leave_row < 0) {
        at_upper_[static_cast<std::size_t>(enter)] = !at_upper_[static_cast<std::size_t>(enter)];
        continue;
      }
      const int leave = basis_[static_cast<std::size_t>(leave_row)];
      const Scalar entering_value = at_upper_[static_cast<std::size_t>(enter)] ? u_(enter) - theta : theta;
      at_upper_[static_cast<std::size_t>(leave)] = leave_to_upper;
      at_upper_[static_cast<std::size_t>(enter)] = false;
      pivot(leave_row, enter);
      beta_(leave_row) = entering_value;
      basis_[static_cast<std::size_t>(leave_row)] = enter;
    }
  }

  // Value of every column variable.
  Vec values() const {
    Vec z = Vec::Zero(cols());
    for (int j = 0; j < cols(); ++j) {
      if (at_upper_[static_cast<std::size_t>(j)]) z(j) = u_(j);
    }
    for (int i = 0; i < rows(); ++i) z(basis_[static_cast<std::size_t>(i)]) = beta_(i);
    return z;
  }

  const Eigen::Matrix<Scalar, 1, Eigen::Dynamic>& reduced_costs() const { return reduced_; }
  Vec& upper() { return u_; }
  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()); }

 private:
  void pivot(int r, int c) {
    const Scalar p = t_(r, c);
    t_.row(r) /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const Scalar f = t_(i, c);
      if (f != Scalar(0)) t_.row(i) -= f * t_.row(r);
    }
    const Scalar f = reduced_(c);
    if (f != Scalar(0)) reduced_ -= f * t_.row(r);
  }

  Mat t_;
  Vec beta_;
  Vec u_;
  std::vector<int> basis_;
  std::vector<bool> at_upper_;
  Vec cost_;
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> reduced_;
  LpOptions opts_;
};

}  // namespace detail

template <typename Scalar>
LpResult<Scalar> solve(const LinearProgram<Scalar>& lp, const LpOptions& opts = {}) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  const Scalar inf = std::numeric_limits<Scalar>::infinity();

  Vec lo(n), span(n), c(n);
  for (int j = 0; j < n; ++j) {
    lo(j) = lp.lower(j);
    span(j) = lp.upper(j) - lp.lower(j);
    c(j) = lp.sense() == Sense::Maximize ? -lp.objective(j) : lp.objective(j);
  }
  const Mat a = lp.dense_rows();
  Vec b(m);
  for (int i = 0; i < m; ++i) b(i) = lp.rows()[static_cast<std::size_t>(i)].rhs;
  const Vec shifted = b - a * lo;

  // Columns: n structural, m slacks, then one artificial per negative row.
  std::vector<int> negative;
  for (int i = 0; i < m; ++i) {
    if (shifted(i) < Scalar(0)) negative.push_back(i);
  }
  const int na = static_cast<int>(negative.size());
  const int cols = n + m + na;
  Mat t = Mat::Zero(m, cols);
  Vec beta(m), upper(cols);
  std::vector<int> basis(static_cast<std::size_t>(m));
  upper.head(n) = span;
  upper.segment(n, m).setConstant(inf);
  upper.tail(na).setConstant(inf);
  for (int i = 0, next = 0; i < m; ++i) {
    const bool neg = next < na && negative[static_cast<std::size_t>(next)] == i;
    const Scalar sign = neg ? Scalar(-1) : Scalar(1);
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = sign;
    beta(i) = sign * shifted(i);
    if (neg) {
      t(i, n + m + next) = Scalar(1);
      basis[static_cast<std::size_t>(i)] = n + m + next;
      ++next;
    } else {
      basis[static_cast<std::size_t>(i)] = n + i;
    }
  }

  LpResult<Scalar> result;
  detail::BoundedSimplex<Scalar> simplex(std::move(t), std::move(beta), std::move(upper), std::move(basis), opts);
  if (na > 0) {
    Vec phase1 = Vec::Zero(cols);
    phase1.tail(na).setOnes();
    simplex.optimize(phase1, result.iterations);
    const Vec z = simplex.values();
    if (z.tail(na).sum() > Scalar(opts.feasibility_tol) * std::max(Scalar(1), shifted.cwiseAbs().maxCoeff())) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    simplex.upper().tail(na).setZero();
  }
  Vec phase2 = Vec::Zero(cols);
  phase2.head(n) = c;
  if (!simplex.optimize(phase2, result.iterations)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  const Vec z = simplex.values();
  result.status = LpStatus::Optimal;
  result.x = lo + z.head(n);
  for (int j = 0; j < n; ++j) result.x(j) = std::clamp(result.x(j), lp.lower(j), lp.upper(j));
  result.value = c.dot(result.x);
  if (lp.sense() == Sense::Maximize) result.value = -result.value;
  result.duals = simplex.reduced_costs().segment(n, m).transpose().cwiseMax(Scalar(0));
  return result;
}

/// Weak-duality bound from the row multipliers of an Optimal result:
/// for minimization, sum_j min over the box of (c + A^T y)_j x_j minus b^T y.
/// Returns |value - bound| in the program's own sense (+inf if the bound is vacuous).
template <typename Scalar>
Scalar duality_gap(const LinearProgram<Scalar>& lp, const LpResult<Scalar>& res) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (res.status != LpStatus::Optimal) throw std::invalid_argument("lp: certificate requires an optimal result");
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  Vec c(n), b(m);
  for (int j = 0; j < n; ++j) c(j) = lp.sense() == Sense::Maximize ? -lp.objective(j) : lp.objective(j);
  for (int i = 0; i < m; ++i) b(i) = lp.rows()[static_cast<std::size_t>(i)].rhs;
  const Vec reduced = c + lp.dense_rows().transpose() * res.duals;
  Scalar bound = -b.dot(res.duals);
  for (int j = 0; j < n; ++j) {
    const Scalar d = reduced(j);
    if (d >= Scalar(0)) {
      bound += d * lp.lower(j);
    } else if (std::isfinite(static_cast<double>(lp.upper(j)))) {
      bound += d * lp.upper(j);
    } else {
      return std::numeric_limits<Scalar>::infinity();
    }
  }
  const Scalar primal = c.dot(res.x);
  return std::abs(primal - bound);
}

/// Largest violation of any row or box bound at x (0 when feasible).
template <typename Scalar>
Scalar max_violation(const LinearProgram<Scalar>& lp, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  Scalar worst(0);
  for (int j = 0; j < lp.num_vars(); ++j) {
    worst = std::max({worst, lp.lower(j) - x(j), x(j) - lp.upper(j)});
  }
  for (const auto& row : lp.rows()) {
    Scalar lhs(0);
    for (const auto& [j, a] : row.terms) lhs += a * x(j);
    worst = std::max(worst, lhs - row.rhs);
  }
  return worst;
}

}  // namespace diskscale
