// diskscale command line: solve, inspect, generate and draw disk-scaling instances.

#include "diskscale/compress_acyc.hpp"
#include "diskscale/dispatch.hpp"
#include "diskscale/eptas.hpp"
#include "diskscale/io.hpp"
#include "diskscale/kernel_indep.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace diskscale;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::string list(const std::vector<int>& v) {
  return nlohmann::json(v).dump();
}

int run_solve(const std::string& file, const SolveOptions& opts, const std::string& out) {
  const Instance inst = read_instance_file(file);
  try {
    emit(out, serialize_verdict(solve(inst, opts)));
  } catch (const EptasRefusal& e) {
    emit(out, nlohmann::json{{"answer", "refused"}, {"reason", e.what()}}.dump(2) + "\n");
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk scaling solvers for unit-disk graphs"};
  app.require_subcommand(1);

  std::string file, out, solution_file;
  SolveOptions sopts;
  auto add_solver_flags = [&](CLI::App* cmd, bool with_solver) {
    if (with_solver) cmd->add_option("--solver", sopts.solver, "oracle, fpt, treewidth or eptas")->check(CLI::IsMember(solver_names()));
    cmd->add_option("--eps", sopts.eps, "approximation parameter for eptas")->check(CLI::Range(1e-6, 1.0));
    cmd->add_option("--cap", sopts.cap, "size/guess/node cap (0 = default)");
    cmd->add_option("--out", out, "output path (default stdout)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "decide an instance and print the verdict");
  solve_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  add_solver_flags(solve_cmd, true);

  auto* eptas_cmd = app.add_subcommand("eptas", "approximation scheme (independence problems)");
  eptas_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  add_solver_flags(eptas_cmd, false);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference solver");
  oracle_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  add_solver_flags(oracle_cmd, false);

  auto* kern_cmd = app.add_subcommand("kernelize", "independence kernel T and cover U");
  kern_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  kern_cmd->add_option("--out", out);

  auto* comp_cmd = app.add_subcommand("compress", "acyclicity compression summary");
  comp_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  comp_cmd->add_option("--out", out);

  auto* render_cmd = app.add_subcommand("render", "draw the instance (and a witness) as SVG");
  render_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--solution", solution_file, "verdict file from solve")->check(CLI::ExistingFile);
  add_solver_flags(render_cmd, true);

  std::vector<std::string> bench_files;
  auto* bench_cmd = app.add_subcommand("bench", "run a solver over instance files and tabulate");
  bench_cmd->add_option("instances", bench_files)->required();
  add_solver_flags(bench_cmd, true);

  auto* fmt_cmd = app.add_subcommand("format", "re-serialize an instance in canonical form");
  fmt_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  fmt_cmd->add_option("--out", out);

  std::string validate_verdict;
  auto* check_cmd = app.add_subcommand("validate", "check a verdict's witness against its instance");
  check_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("verdict", validate_verdict)->required()->check(CLI::ExistingFile);
  add_solver_flags(check_cmd, true);

  GenerateParams g;
  std::string problem = "shrink-independence";
  double mu = -1.0;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated instance");
  gen_cmd->add_option("--kind", g.kind)->check(CLI::IsMember({"random", "path", "cycle", "grid-cluster", "planted"}));
  gen_cmd->add_option("--problem", problem);
  gen_cmd->add_option("--n", g.n);
  gen_cmd->add_option("--box", g.box);
  gen_cmd->add_option("--spacing", g.spacing);
  gen_cmd->add_option("--clusters", g.clusters);
  gen_cmd->add_option("--alpha", g.alpha);
  gen_cmd->add_option("--k", g.k);
  gen_cmd->add_option("--mu", mu, "cost budget for min problems");
  gen_cmd->add_option("--seed", g.seed);
  gen_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(file, sopts, out);
    if (*eptas_cmd) {
      sopts.solver = "eptas";
      return run_solve(file, sopts, out);
    }
    if (*oracle_cmd) {
      sopts.solver = "oracle";
      return run_solve(file, sopts, out);
    }
    if (*fmt_cmd) {
      emit(out, serialize_instance(read_instance_file(file)));
      return 0;
    }
    if (*kern_cmd) {
      const Instance inst = read_instance_file(file);
      if (!is_independence(inst.problem)) throw std::invalid_argument("kernelize: independence problems only");
      const KernelResult kr = kernelize(inst);
      emit(out, "{\n  \"short_circuit_no\": " + std::string(kr.short_circuit_no ? "true" : "false") +
                    ",\n  \"cover\": " + list(kr.cover) + ",\n  \"kept\": " + list(kr.kept) +
                    ",\n  \"dropped\": " + list(kr.dropped) + "\n}\n");
      return 0;
    }
    if (*comp_cmd) {
      const Instance inst = read_instance_file(file);
      if (!is_acyclicity(inst.problem)) throw std::invalid_argument("compress: acyclicity problems only");
      const CompressResult cr = compress(inst);
      nlohmann::ordered_json j;
      j["short_circuit_no"] = cr.short_circuit_no;
      j["reason"] = cr.reason;
      j["k_remaining"] = cr.k_remaining;
      j["fixed_cost"] = cr.fixed_cost;
      j["core"] = cr.graph.core;
      int reducible = 0;
      for (const auto& e : cr.graph.edges) reducible += e.kind == EdgeKind::Reducible;
      j["original_edges"] = static_cast<int>(cr.graph.edges.size()) - reducible;
      j["reducible_edges"] = reducible;
      j["isolated_cycles"] = cr.graph.cycles.size();
      emit(out, j.dump(2) + "\n");
      return 0;
    }
    if (*render_cmd) {
      const Instance inst = read_instance_file(file);
      std::optional<Solution> sol;
      if (!solution_file.empty()) {
        std::ifstream in(solution_file);
        std::stringstream ss;
        ss << in.rdbuf();
        sol = parse_verdict_witness(ss.str());
      } else if (render_cmd->count("--solver")) {
        sol = solve(inst, sopts).witness;
      }
      if (sol && sol->radii.size() != inst.points.size()) throw std::invalid_argument("render: witness size mismatch");
      emit(out, render_svg(inst, sol ? &*sol : nullptr));
      return 0;
    }
    if (*check_cmd) {
      const Instance inst = read_instance_file(file);
      std::ifstream in(validate_verdict);
      std::stringstream ss;
      ss << in.rdbuf();
      const Solution sol = parse_verdict_witness(ss.str());
      const auto res = validate(inst, sol, witness_bounds(inst, sopts));
      std::cout << (res.ok ? "valid" : "invalid: " + res.reason) << "\n";
      return res.ok ? 0 : 4;
    }
    if (*bench_cmd) {
      std::ostringstream table;
      char line[512];
      std::snprintf(line, sizeof line, "%-32s %-10s %-13s %12s %12s\n", "instance", "solver", "answer", "cost", "wall_ms");
      table << line;
      for (const auto& f : bench_files) {
        const Instance inst = read_instance_file(f);
        const auto t0 = std::chrono::steady_clock::now();
        std::string answer, cost_text = "-";
        try {
          const Verdict v = solve(inst, sopts);
          answer = std::string(answer_name(v.answer));
          if (v.witness) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", cost(*v.witness));
            cost_text = buf;
          }
        } catch (const EptasRefusal&) {
          answer = "refused";
        } catch (const std::invalid_argument&) {
          answer = "unsupported";
        } catch (const std::runtime_error&) {
          answer = "error";
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::snprintf(line, sizeof line, "%-32s %-10s %-13s %12s %12.3f\n", std::filesystem::path(f).filename().string().c_str(),
                      sopts.solver.c_str(), answer.c_str(), cost_text.c_str(), ms);
        table << line;
      }
      emit(out, table.str());
      return 0;
    }
    if (*gen_cmd) {
      const auto p = problem_from_name(problem);
      if (!p) throw std::invalid_argument("problem: unknown value '" + problem + "'");
      g.problem = *p;
      if (mu >= 0.0) g.mu = mu;
      emit(out, serialize_instance(generate(g)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "diskscale: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
