#include "diskscale/combinatorics.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/lp.hpp"
#include "diskscale/shrink_lp.hpp"
#include "diskscale/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace diskscale {

namespace {

void require_acyclicity(const Instance& inst) {
  if (!is_acyclicity(inst.problem)) throw std::invalid_argument("acyclicity variant required");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Calls fn(removed) for every maximal subset F of `edges` (index-based, over
// vertices 0..n-1) such that base + F is a simple forest; `removed` lists the
// edges outside F. Edges that are self-loops are always removed.
void for_each_maximal_forest(int n, const std::vector<std::pair<int, int>>& edges, const UnionFind& base,
                             const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> removed;
  std::function<void(std::size_t, UnionFind)> rec = [&](std::size_t i, UnionFind uf) {
    if (i == edges.size()) {
      for (int r : removed) {
        if (uf.find(edges[static_cast<std::size_t>(r)].first) != uf.find(edges[static_cast<std::size_t>(r)].second)) return;
      }
      fn(removed);
      return;
    }
    const auto [a, b] = edges[i];
    if (uf.find(a) != uf.find(b)) {
      UnionFind with = uf;
      with.unite(a, b);
      rec(i + 1, std::move(with));
    }
    removed.push_back(static_cast<int>(i));
    rec(i + 1, std::move(uf));
    removed.pop_back();
  };
  (void)n;
  rec(0, base);
}

}  // namespace

Verdict oracle_acyclicity(const Instance& inst, OracleOptions opts) {
  require_acyclicity(inst);
  const int n = inst.size();
  if (n > opts.max_points) {
    throw SizeCapExceeded("oracle_acyclicity: " + std::to_string(n) + " points exceed cap " + std::to_string(opts.max_points));
  }
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  if (h.num_edges() > opts.max_edges) {
    throw SizeCapExceeded("oracle_acyclicity: " + std::to_string(h.num_edges()) + " edges exceed cap " +
                          std::to_string(opts.max_edges));
  }
  Verdict v;
  if (!is_min_variant(inst.problem)) {
    v.note = "no S with |S| <= k makes the graph acyclic";
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

  // A larger S is never worse, so only |S| = min(k, n) is enumerated.
  std::optional<ShrinkLpSolution> best;
  const int size = std::min(inst.k, n);
  for_each_subset(n, size, size, [&](const std::vector<int>& s) {
    std::vector<bool> in_s(static_cast<std::size_t>(n), false);
    for (int p : s) in_s[static_cast<std::size_t>(p)] = true;
    UnionFind fixed(n);
    std::vector<std::pair<int, int>> touching;
    std::vector<DiskEdge> touching_edges;
    for (const auto& e : h.edges()) {
      if (in_s[static_cast<std::size_t>(e.u)] || in_s[static_cast<std::size_t>(e.v)]) {
        touching.emplace_back(e.u, e.v);
        touching_edges.push_back(e);
      } else if (!fixed.unite(e.u, e.v)) {
        return true;  // cycle among untouchable edges
      }
    }
    for_each_maximal_forest(n, touching, fixed, [&](const std::vector<int>& removed) {
      std::vector<DiskEdge> sep;
      for (int r : removed) sep.push_back(touching_edges[static_cast<std::size_t>(r)]);
      auto sol = min_cost_radii(inst.points, s, inst.alpha, sep);
      if (sol && (!best || sol->cost < best->cost)) best = std::move(sol);
    });
    return true;
  });
  if (!best) {
    v.note = "no radius assignment with at most k shrunk points";
    return v;
  }
  v.optimum_cost = best->cost;
  Solution sol = solution_from_radii(std::move(best->radii));
  v.optimum_count = static_cast<int>(sol.shrunk.size());
  if (*v.optimum_cost <= *inst.mu + 1e-9) {
    v.answer = Answer::Yes;
    v.witness = std::move(sol);
  } else {
    v.note = "minimum cost exceeds mu";
  }
  return v;
}

namespace {

enum class Mode { Start, End, Max };

struct ModeChoice {
  int edge = 0;
  Mode mode = Mode::Start;
  int extra = 0;  // shrinks outside W (c_r)
};

struct Candidate {
  double cost = kInf;
  int count = std::numeric_limits<int>::max();
  std::vector<double> radii;
};

// Applies a max-mode (or isolated cycle) decision to point radii.
void shrink_longest(const Instance& inst, std::pair<int, int> e, double d, bool cardinality, std::vector<double>& r) {
  const NuClass c = edge_nu(d, inst.alpha);
  auto at = [&](int p) -> double& { return r[static_cast<std::size_t>(p)]; };
  if (c == NuClass::One) {
    at(e.first) = cardinality ? inst.alpha : d - 1.0;
  } else {
    at(e.first) = at(e.second) = cardinality ? inst.alpha : d / 2.0;
  }
}

}  // namespace

Verdict fpt_acyclicity(const Instance& inst, AcyclicityStats* stats) {
  require_acyclicity(inst);
  if (stats) *stats = {};
  const CompressResult cr = compress(inst);
  Verdict v;
  if (cr.short_circuit_no) {
    v.note = cr.reason;
    return v;
  }
  const bool cardinality = !is_min_variant(inst.problem);
  const AnnotatedMultigraph& g = cr.graph;
  const double alpha = inst.alpha;
  const int n = inst.size();

  std::map<int, int> local;
  for (std::size_t i = 0; i < g.core.size(); ++i) local[g.core[i]] = static_cast<int>(i);
  const int m = static_cast<int>(g.core.size());
  std::vector<std::pair<int, int>> simple;
  std::vector<int> simple_id;
  std::vector<int> loops;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.self_loop()) {
      loops.push_back(static_cast<int>(i));
    } else {
      simple.emplace_back(local[e.u], local[e.v]);
      simple_id.push_back(static_cast<int>(i));
    }
  }

  const int budget = cr.k_remaining;
  int cycle_count = 0;
  for (const auto& cv : g.cycles) cycle_count += cv.count_needed;
  Candidate best;

  auto consider = [&](const std::vector<int>& removed_edges, const std::vector<int>& w, std::vector<ModeChoice>& modes) {
    std::vector<bool> in_w(static_cast<std::size_t>(n), false);
    for (int p : w) in_w[static_cast<std::size_t>(p)] = true;
    int count = static_cast<int>(w.size()) + cycle_count;
    double constant = cr.fixed_cost;
    for (const auto& mc : modes) {
      count += mc.extra;
      if (mc.mode == Mode::Max) constant += 2.0 - *g.edges[static_cast<std::size_t>(mc.edge)].d_max;
    }
    std::vector<double> radii(static_cast<std::size_t>(n), 1.0);
    auto finish = [&](double total) {
      for (const auto& mc : modes) {
        const auto& e = g.edges[static_cast<std::size_t>(mc.edge)];
        if (mc.mode == Mode::Max) shrink_longest(inst, *e.max_edge, *e.d_max, cardinality, radii);
      }
      for (const auto& cv : g.cycles) shrink_longest(inst, cv.max_edge, cv.d_max, cardinality, radii);
      if (cardinality ? count < best.count : total < best.cost) best = {total, count, radii};
    };

    if (cardinality) {
      for (int p : w) radii[static_cast<std::size_t>(p)] = alpha;
      auto r = [&](int p) { return radii[static_cast<std::size_t>(p)]; };
      for (int id : removed_edges) {
        const auto& e = g.edges[static_cast<std::size_t>(id)];
        if (e.kind == EdgeKind::Original && r(e.u) + r(e.v) > e.d) return;
      }
      for (const auto& mc : modes) {
        const auto& e = g.edges[static_cast<std::size_t>(mc.edge)];
        if (mc.extra == 1 && mc.mode != Mode::Max) radii[static_cast<std::size_t>(mc.mode == Mode::Start ? e.path.front() : e.path.back())] = alpha;
      }
      finish(0.0);
      return;
    }

    if (stats) ++stats->programs;
    LinearProgram<double> lp(Sense::Minimize);
    std::map<int, int> var;
    for (int p : w) var[p] = lp.add_var(alpha, 1.0, -1.0);
    auto bound_or_row = [&](int a, int b, double d) {
      const bool va = in_w[static_cast<std::size_t>(a)], vb = in_w[static_cast<std::size_t>(b)];
      if (va && vb) {
        lp.add_row({{var[a], 1.0}, {var[b], 1.0}}, d);
      } else {
        lp.add_row({{var[va ? a : b], 1.0}}, d - 1.0);
      }
    };
    for (int id : removed_edges) {
      const auto& e = g.edges[static_cast<std::size_t>(id)];
      if (e.kind == EdgeKind::Original) bound_or_row(e.u, e.v, e.d);
    }
    std::vector<std::pair<int, int>> y_of;  // (edge, lp var)
    for (const auto& mc : modes) {
      if (mc.mode == Mode::Max) continue;
      const auto& e = g.edges[static_cast<std::size_t>(mc.edge)];
      const int p = mc.mode == Mode::Start ? e.u : e.v;
      const double d = mc.mode == Mode::Start ? e.d_start : e.d_end;
      if (mc.extra == 0) {
        lp.add_row({{var[p], 1.0}}, d - 1.0);
      } else {
        const int y = lp.add_var(0.0, 1.0 - alpha, 1.0);
        lp.add_row({{var[p], 1.0}, {y, -1.0}}, d - 1.0);
        y_of.emplace_back(mc.edge, y);
      }
    }
    const auto res = solve(lp);
    if (res.status != LpStatus::Optimal) return;
    const double total = static_cast<double>(w.size()) + res.value + constant;
    if (total >= best.cost) return;
    for (int p : w) {
      const double x = res.x(var[p]);
      radii[static_cast<std::size_t>(p)] = x > 1.0 - 1e-12 ? 1.0 : x;
    }
    std::size_t yi = 0;
    for (const auto& mc : modes) {
      if (mc.mode == Mode::Max || mc.extra == 0) continue;
      const auto& e = g.edges[static_cast<std::size_t>(mc.edge)];
      const double y = res.x(y_of[yi++].second);
      if (y > 1e-12) radii[static_cast<std::size_t>(mc.mode == Mode::Start ? e.path.front() : e.path.back())] = 1.0 - y;
    }
    finish(total);
  };

  UnionFind base(m);
  for_each_maximal_forest(m, simple, base, [&](const std::vector<int>& removed_local) {
    if (stats) ++stats->forests;
    std::vector<int> removed = loops;
    for (int r : removed_local) removed.push_back(simple_id[static_cast<std::size_t>(r)]);
    std::vector<int> reducible;
    for (int id : removed) {
      if (g.edges[static_cast<std::size_t>(id)].kind == EdgeKind::Reducible) reducible.push_back(id);
    }
    for_each_subset(m, 0, budget, [&](const std::vector<int>& widx) {
      std::vector<int> w;
      std::vector<bool> in_w(static_cast<std::size_t>(n), false);
      for (int i : widx) {
        w.push_back(g.core[static_cast<std::size_t>(i)]);
        in_w[static_cast<std::size_t>(w.back())] = true;
      }
      for (int id : removed) {
        const auto& e = g.edges[static_cast<std::size_t>(id)];
        if (e.kind == EdgeKind::Original && !in_w[static_cast<std::size_t>(e.u)] && !in_w[static_cast<std::size_t>(e.v)]) return true;
      }
      // Viable modes per removed reducible edge.
      std::vector<std::vector<ModeChoice>> options;
      for (int id : reducible) {
        const auto& e = g.edges[static_cast<std::size_t>(id)];
        std::vector<ModeChoice> opts;
        auto add_side = [&](Mode mode, int p, double d) {
          if (!in_w[static_cast<std::size_t>(p)]) return;
          if (1.0 + alpha <= d) {
            opts.push_back({id, mode, 0});
          } else if (alpha + alpha <= d) {
            opts.push_back({id, mode, 1});
          }
        };
        add_side(Mode::Start, e.u, e.d_start);
        add_side(Mode::End, e.v, e.d_end);
        if (e.d_max) {
          const NuClass c = edge_nu(*e.d_max, alpha);
          if (c != NuClass::Bottom) opts.push_back({id, Mode::Max, c == NuClass::One ? 1 : 2});
        }
        if (opts.empty()) return true;
        options.push_back(std::move(opts));
      }
      std::vector<ModeChoice> chosen;
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == options.size()) {
          consider(removed, w, chosen);
          return;
        }
        for (const auto& mc : options[i]) {
          if (used + mc.extra > budget) continue;
          chosen.push_back(mc);
          rec(i + 1, used + mc.extra);
          chosen.pop_back();
        }
      };
      rec(0, static_cast<int>(w.size()));
      return true;
    });
  });

  if (best.count == std::numeric_limits<int>::max()) {
    v.note = "no forest guess fits the budget";
    return v;
  }
  Solution sol = cardinality ? solution_from_radii(best.radii) : normalize(solution_from_radii(best.radii));
  v.optimum_cost = cost(sol);
  v.optimum_count = static_cast<int>(sol.shrunk.size());
  if (cardinality || *v.optimum_cost <= *inst.mu + 1e-9) {
    v.answer = Answer::Yes;
    v.witness = std::move(sol);
  } else {
    v.note = "minimum cost exceeds mu";
  }
  return v;
}

}  // namespace diskscale
