#include "diskscale/kernel_indep.hpp"

#include <algorithm>
#include <map>

namespace diskscale {

namespace {

void require_independence(const Instance& inst) {
  if (!is_independence(inst.problem)) throw std::invalid_argument("kernel: independence variant required");
}

}  // namespace

std::optional<std::vector<int>> vc_gate(const Instance& inst) {
  require_independence(inst);
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  std::vector<bool> matched(static_cast<std::size_t>(inst.size()), false);
  std::vector<int> cover;
  // Edges come out of build_disk_graph in lexicographic (u, v) order.
  for (const auto& e : h.edges()) {
    if (matched[static_cast<std::size_t>(e.u)] || matched[static_cast<std::size_t>(e.v)]) continue;
    matched[static_cast<std::size_t>(e.u)] = matched[static_cast<std::size_t>(e.v)] = true;
    cover.push_back(e.u);
    cover.push_back(e.v);
    if (static_cast<int>(cover.size()) > 2 * inst.k) return std::nullopt;
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

KernelResult kernelize(const Instance& inst) {
  KernelResult out;
  auto cover = vc_gate(inst);
  if (!cover) {
    out.short_circuit_no = true;
    return out;
  }
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  std::vector<bool> in_t(static_cast<std::size_t>(inst.size()), false);
  for (int p : *cover) {
    in_t[static_cast<std::size_t>(p)] = true;
    for (int q : h.neighbors(p)) in_t[static_cast<std::size_t>(q)] = true;
  }
  for (int p = 0; p < inst.size(); ++p) (in_t[static_cast<std::size_t>(p)] ? out.kept : out.dropped).push_back(p);
  out.cover = std::move(*cover);
  return out;
}

ForcedVcInstance to_forced_vc(const Instance& inst) {
  if (inst.problem != Problem::ShrinkIndependence) throw std::invalid_argument("to_forced_vc: cardinality independence required");
  ForcedVcInstance out;
  out.n = inst.size();
  out.alpha = inst.alpha;
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  std::vector<bool> forced(static_cast<std::size_t>(out.n), false);
  for (const auto& e : h.edges()) {
    switch (edge_nu(e.dist, inst.alpha)) {
      case NuClass::Bottom:
        if (!out.infeasible_edge) out.infeasible_edge = IndexPair{e.u, e.v};
        break;
      case NuClass::Two:
        forced[static_cast<std::size_t>(e.u)] = forced[static_cast<std::size_t>(e.v)] = true;
        break;
      case NuClass::One:
        out.vc_edges.emplace_back(e.u, e.v);
        break;
    }
  }
  for (int p = 0; p < out.n; ++p) {
    if (forced[static_cast<std::size_t>(p)]) out.forced.push_back(p);
  }
  return out;
}

namespace {

bool cover_within(std::vector<IndexPair> edges, int budget, std::vector<int>& chosen) {
  if (edges.empty()) return true;
  if (budget == 0) return false;
  // Degree-1 rule: a pendant edge is covered by its non-leaf endpoint.
  std::map<int, int> degree;
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  IndexPair pick = edges.front();
  std::vector<int> options{pick.first, pick.second};
  for (const auto& [u, v] : edges) {
    if (degree[u] == 1 && degree[v] > 1) {
      options = {v};
      break;
    }
    if (degree[v] == 1 && degree[u] > 1) {
      options = {u};
      break;
    }
  }
  for (int x : options) {
    std::vector<IndexPair> rest;
    for (const auto& e : edges) {
      if (e.first != x && e.second != x) rest.push_back(e);
    }
    chosen.push_back(x);
    if (cover_within(std::move(rest), budget - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> min_vertex_cover(int n, const std::vector<IndexPair>& edges, int limit) {
  (void)n;
  for (int budget = 0; budget <= limit; ++budget) {
    std::vector<int> chosen;
    if (cover_within(edges, budget, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

Verdict solve_forced_vc(const ForcedVcInstance& fvi, int k) {
  Verdict v;
  if (fvi.infeasible_edge) {
    v.note = "irremovable edge " + std::to_string(fvi.infeasible_edge->first) + "-" +
             std::to_string(fvi.infeasible_edge->second);
    return v;
  }
  const int budget = k - static_cast<int>(fvi.forced.size());
  if (budget < 0) {
    v.note = "forced set exceeds k";
    return v;
  }
  std::vector<bool> forced(static_cast<std::size_t>(fvi.n), false);
  for (int p : fvi.forced) forced[static_cast<std::size_t>(p)] = true;
  std::vector<IndexPair> residual;
  for (const auto& e : fvi.vc_edges) {
    if (!forced[static_cast<std::size_t>(e.first)] && !forced[static_cast<std::size_t>(e.second)]) residual.push_back(e);
  }
  auto cover = min_vertex_cover(fvi.n, residual, budget);
  if (!cover) {
    v.note = "vertex cover exceeds remaining budget";
    return v;
  }
  std::vector<int> s = fvi.forced;
  s.insert(s.end(), cover->begin(), cover->end());
  v.answer = Answer::Yes;
  v.optimum_count = static_cast<int>(s.size());
  v.witness = uniform_solution(fvi.n, std::move(s), fvi.alpha);
  v.optimum_cost = cost(*v.witness);
  return v;
}

}  // namespace diskscale
