#include "diskscale/dispatch.hpp"

#include "diskscale/eptas.hpp"
#include "diskscale/solvers.hpp"
#include "diskscale/treewidth.hpp"

#include <stdexcept>

namespace diskscale {

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names{"oracle", "fpt", "treewidth", "eptas"};
  return names;
}

namespace {

[[noreturn]] void unsupported(const SolveOptions& opts, const Instance& inst) {
  throw std::invalid_argument("solver '" + opts.solver + "' does not handle " + std::string(problem_name(inst.problem)));
}

}  // namespace

Verdict solve(const Instance& inst, const SolveOptions& opts) {
  if (inst.problem == Problem::ExpandConnectivity) unsupported(opts, inst);
  if (opts.solver == "oracle") {
    OracleOptions o;
    if (opts.cap > 0) o.max_points = static_cast<int>(opts.cap);
    if (is_independence(inst.problem)) return oracle_independence(inst, o);
    if (is_acyclicity(inst.problem)) {
      if (opts.cap <= 0) o.max_points = 12;
      return oracle_acyclicity(inst, o);
    }
    return solve_connectivity(inst);
  }
  if (opts.solver == "fpt") {
    if (is_independence(inst.problem)) return fpt_independence(inst);
    if (is_acyclicity(inst.problem)) return fpt_acyclicity(inst);
    ConnectivityOptions o;
    if (opts.cap > 0) o.node_cap = opts.cap;
    return solve_connectivity(inst, o);
  }
  if (opts.solver == "treewidth") {
    if (is_connectivity(inst.problem) || is_min_variant(inst.problem)) unsupported(opts, inst);
    return solve_treewidth(inst);
  }
  if (opts.solver == "eptas") {
    if (!is_independence(inst.problem)) unsupported(opts, inst);
    EptasOptions o;
    o.eps = opts.eps;
    if (opts.cap > 0) o.guess_cap = opts.cap;
    return eptas_independence(inst, o);
  }
  throw std::invalid_argument("unknown solver '" + opts.solver + "'");
}

ValidateOptions witness_bounds(const Instance& inst, const SolveOptions& opts) {
  ValidateOptions v;
  if (opts.solver == "eptas") {
    v.k_override = eptas_budget(inst.k, opts.eps);
    if (inst.mu) v.mu_override = (1.0 + opts.eps) * *inst.mu;
  }
  return v;
}

}  // namespace diskscale
