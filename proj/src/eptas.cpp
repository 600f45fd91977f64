#include "diskscale/eptas.hpp"

#include "diskscale/graph.hpp"
#include "diskscale/shrink_lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace diskscale {

int eptas_ell(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eptas: eps must lie in (0, 1]");
  return static_cast<int>(std::ceil(16.0 / eps - 1e-12));
}

int eptas_budget(int k, double eps) { return static_cast<int>(std::floor((1.0 + eps) * k + 1e-9)); }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Best (cost, radii) for every shrink count 0..budget; radii cover the piece's points.
struct PieceTable {
  std::vector<double> cost;
  std::vector<std::vector<double>> radii;
};

struct Context {
  const Instance& inst;
  const EptasOptions& opts;
  EptasStats& stats;
  DiskGraph h;
  bool cardinality;
  int budget;
  std::map<std::vector<int>, PieceTable> memo;
};

double rect_distance(const Point& p, double x0, double y0, double side) {
  const double dx = std::max({x0 - p.x(), 0.0, p.x() - (x0 + side)});
  const double dy = std::max({y0 - p.y(), 0.0, p.y() - (y0 + side)});
  return std::hypot(dx, dy);
}

const PieceTable& solve_piece(Context& ctx, const std::vector<int>& piece, const std::string& where) {
  if (auto it = ctx.memo.find(piece); it != ctx.memo.end()) return it->second;
  ++ctx.stats.pieces_solved;
  const Instance& inst = ctx.inst;
  const int m = static_cast<int>(piece.size());
  std::vector<Point> pts;
  for (int p : piece) pts.push_back(inst.points[static_cast<std::size_t>(p)]);

  // Unit sub-cells; each is a clique, so it never straddles two pieces.
  std::map<CellIndex, std::vector<int>> sub;
  for (int i = 0; i < m; ++i) sub[cell_of(pts[static_cast<std::size_t>(i)], 1.0, {0, 0})].push_back(i);
  const double large = 1.0 + 4.0 / ctx.opts.eps;
  std::vector<int> marked;  // large sub-cell points, always shrinkable
  std::vector<std::vector<std::vector<int>>> guesses;  // per small sub-cell: candidate shrunk subsets
  long double product = 1;
  for (const auto& [cell, members] : sub) {
    const int c = static_cast<int>(members.size());
    if (c >= large) {
      marked.insert(marked.end(), members.begin(), members.end());
      continue;
    }
    std::vector<std::vector<int>> g{{}};
    if (c >= 2) {
      for (int skip = 0; skip < c; ++skip) {
        std::vector<int> s;
        for (int i = 0; i < c; ++i) {
          if (i != skip) s.push_back(members[static_cast<std::size_t>(i)]);
        }
        g.push_back(std::move(s));
      }
    }
    g.push_back(members);
    if (c == 1) g = {{}, members};
    product *= static_cast<long double>(g.size());
    guesses.push_back(std::move(g));
  }
  if (product > static_cast<long double>(ctx.opts.guess_cap)) {
    throw EptasRefusal("eptas: " + where + " needs " + std::to_string(static_cast<double>(product)) +
                       " guesses, above cap " + std::to_string(ctx.opts.guess_cap));
  }

  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  const auto local_pairs = close_pairs(pts);
  for (const auto& e : local_pairs) {
    if (e.dist < 2.0) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  std::vector<bool> fixed(static_cast<std::size_t>(m), false);  // decided unshrunk
  std::vector<bool> in_marked(static_cast<std::size_t>(m), false);
  for (int p : marked) in_marked[static_cast<std::size_t>(p)] = true;

  PieceTable table;
  table.cost.assign(static_cast<std::size_t>(ctx.budget) + 1, kInf);
  table.radii.resize(static_cast<std::size_t>(ctx.budget) + 1);
  std::vector<int> shrink = marked;
  auto record = [&]() {
    ++ctx.stats.guesses;
    std::vector<double> radii;
    if (ctx.cardinality) {
      radii.assign(static_cast<std::size_t>(m), 1.0);
      for (int p : shrink) radii[static_cast<std::size_t>(p)] = inst.alpha;
      for (const auto& e : local_pairs) {
        if (disks_intersect(e.dist, radii[static_cast<std::size_t>(e.u)], radii[static_cast<std::size_t>(e.v)], DiskModel::Open)) return;
      }
    } else {
      auto sol = min_cost_radii(pts, shrink, inst.alpha, local_pairs);
      if (!sol) return;
      radii = std::move(sol->radii);
    }
    int count = 0;
    double c = 0.0;
    for (double r : radii) {
      count += r < 1.0;
      c += 1.0 - r;
    }
    if (count > ctx.budget || c >= table.cost[static_cast<std::size_t>(count)]) return;
    table.cost[static_cast<std::size_t>(count)] = c;
    table.radii[static_cast<std::size_t>(count)] = std::move(radii);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (static_cast<int>(shrink.size()) > ctx.budget && ctx.cardinality) return;
    if (i == guesses.size()) {
      record();
      return;
    }
    for (const auto& g : guesses[i]) {
      // Points of this sub-cell left out of g stay at radius 1.
      std::vector<int> newly_fixed;
      bool ok = true;
      for (const auto& cand : guesses[i].back()) {
        if (std::find(g.begin(), g.end(), cand) != g.end()) continue;
        for (int q = 0; q < m && ok; ++q) {
          if ((fixed[static_cast<std::size_t>(q)]) && adj[static_cast<std::size_t>(cand)][static_cast<std::size_t>(q)]) ok = false;
        }
        if (!ok) break;
        fixed[static_cast<std::size_t>(cand)] = true;
        newly_fixed.push_back(cand);
      }
      if (ok) {
        shrink.insert(shrink.end(), g.begin(), g.end());
        rec(i + 1);
        shrink.resize(shrink.size() - g.size());
      }
      for (int q : newly_fixed) fixed[static_cast<std::size_t>(q)] = false;
    }
  };
  rec(0);
  return ctx.memo.emplace(piece, std::move(table)).first->second;
}

// Min-plus table for a whole cell: cost and per-point radii per count.
struct CellTable {
  std::vector<double> cost;
  std::vector<std::vector<std::pair<int, double>>> radii;  // (point, radius) for shrunk points
};

CellTable solve_cell(Context& ctx, const std::vector<int>& members, const std::string& where) {
  const DiskGraph local = induced_subgraph(ctx.h, members);
  int nc = 0;
  const auto label = component_labels(local, &nc);
  std::vector<std::vector<int>> pieces(static_cast<std::size_t>(nc));
  for (std::size_t i = 0; i < members.size(); ++i) pieces[static_cast<std::size_t>(label[i])].push_back(members[i]);

  CellTable acc;
  acc.cost.assign(static_cast<std::size_t>(ctx.budget) + 1, kInf);
  acc.radii.resize(acc.cost.size());
  acc.cost[0] = 0.0;
  for (auto& piece : pieces) {
    if (piece.size() == 1) continue;  // an isolated point needs nothing
    std::sort(piece.begin(), piece.end());
    const PieceTable& pt = solve_piece(ctx, piece, where);
    CellTable next;
    next.cost.assign(acc.cost.size(), kInf);
    next.radii.resize(acc.cost.size());
    for (std::size_t a = 0; a < acc.cost.size(); ++a) {
      if (acc.cost[a] == kInf) continue;
      for (std::size_t b = 0; a + b < acc.cost.size(); ++b) {
        if (pt.cost[b] == kInf) continue;
        const double c = acc.cost[a] + pt.cost[b];
        if (c < next.cost[a + b]) {
          next.cost[a + b] = c;
          next.radii[a + b] = acc.radii[a];
          for (std::size_t i = 0; i < piece.size(); ++i) {
            const double r = pt.radii[b][i];
            if (r < 1.0) next.radii[a + b].emplace_back(piece[i], r);
          }
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

namespace {

Context make_context(const Instance& inst, const EptasOptions& opts, EptasStats& stats) {
  if (!is_independence(inst.problem)) throw std::invalid_argument("eptas: independence variant required");
  stats.ell = eptas_ell(opts.eps);
  return Context{inst, opts, stats, unit_disk_graph(inst.points, DiskModel::Open), !is_min_variant(inst.problem),
                 eptas_budget(inst.k, opts.eps), {}};
}

// Best composed radii for one shift, scored by count (cardinality) or cost.
std::optional<std::vector<double>> run_shift(Context& ctx, int i, int j) {
  const Instance& inst = ctx.inst;
  const int n = inst.size();
  const double side = 2.0 * ctx.stats.ell;
  ++ctx.stats.shifts;
  const Point origin(-2.0 * i, -2.0 * j);
  std::map<std::pair<long long, long long>, std::vector<int>> cells;  // keyed (row, col)
  for (int p = 0; p < n; ++p) {
    const Point& q = inst.points[static_cast<std::size_t>(p)];
    const CellIndex lo = cell_of(q - Point(1, 1), side, origin);
    const CellIndex hi = cell_of(q + Point(1, 1), side, origin);
    for (long long cx = lo.first; cx <= hi.first; ++cx) {
      for (long long cy = lo.second; cy <= hi.second; ++cy) {
        if (rect_distance(q, origin.x() + cx * side, origin.y() + cy * side, side) <= 1.0) cells[{cy, cx}].push_back(p);
      }
    }
  }
  // B over cells in row-major order.
  std::vector<double> b(static_cast<std::size_t>(ctx.budget) + 1, kInf);
  std::vector<std::vector<std::pair<int, double>>> b_radii(b.size());
  b[0] = 0.0;
  for (const auto& [key, members] : cells) {
    const std::string where = "shift (" + std::to_string(i) + "," + std::to_string(j) + ") cell (" +
                              std::to_string(key.second) + "," + std::to_string(key.first) + ")";
    const CellTable a = solve_cell(ctx, members, where);
    std::vector<double> nb(b.size(), kInf);
    std::vector<std::vector<std::pair<int, double>>> nr(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b[x] == kInf) continue;
      for (std::size_t t = 0; x + t < b.size(); ++t) {
        if (a.cost[t] == kInf || b[x] + a.cost[t] >= nb[x + t]) continue;
        nb[x + t] = b[x] + a.cost[t];
        nr[x + t] = b_radii[x];
        nr[x + t].insert(nr[x + t].end(), a.radii[t].begin(), a.radii[t].end());
      }
    }
    b = std::move(nb);
    b_radii = std::move(nr);
  }
  std::optional<std::vector<double>> best;
  double best_score = kInf;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (b[x] == kInf) continue;
    std::vector<double> radii(static_cast<std::size_t>(n), 1.0);
    for (const auto& [p, r] : b_radii[x]) radii[static_cast<std::size_t>(p)] = std::min(radii[static_cast<std::size_t>(p)], r);
    double c = 0.0;
    int count = 0;
    for (double r : radii) {
      c += 1.0 - r;
      count += r < 1.0;
    }
    const double score = ctx.cardinality ? count : c;
    if (score < best_score) {
      best_score = score;
      best = std::move(radii);
    }
  }
  return best;
}

Solution to_solution(const Context& ctx, const std::vector<double>& radii) {
  if (!ctx.cardinality) return solution_from_radii(radii);
  std::vector<int> s;
  for (std::size_t p = 0; p < radii.size(); ++p) {
    if (radii[p] < 1.0) s.push_back(static_cast<int>(p));
  }
  return uniform_solution(static_cast<int>(radii.size()), std::move(s), ctx.inst.alpha);
}

}  // namespace

std::vector<double> eptas_cell_costs(const Instance& inst, const std::vector<int>& members, const EptasOptions& opts) {
  EptasStats stats;
  Context ctx = make_context(inst, opts, stats);
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  auto costs = solve_cell(ctx, sorted, "cell").cost;
  for (std::size_t t = 1; t < costs.size(); ++t) costs[t] = std::min(costs[t], costs[t - 1]);
  return costs;
}

std::optional<Solution> eptas_shift(const Instance& inst, int i, int j, const EptasOptions& opts) {
  EptasStats stats;
  Context ctx = make_context(inst, opts, stats);
  if (i < 0 || j < 0 || i >= 2 * stats.ell || j >= 2 * stats.ell) throw std::out_of_range("eptas: shift out of range");
  auto radii = run_shift(ctx, i, j);
  if (!radii) return std::nullopt;
  return to_solution(ctx, *radii);
}

Verdict eptas_independence(const Instance& inst, const EptasOptions& opts, EptasStats* stats_out) {
  EptasStats stats;
  Context ctx = make_context(inst, opts, stats);
  const int ell = stats.ell;
  std::optional<Solution> best;
  double best_score = kInf;
  std::string best_where;
  for (int i = 0; i < 2 * ell; ++i) {
    for (int j = 0; j < 2 * ell; ++j) {
      auto radii = run_shift(ctx, i, j);
      if (!radii) continue;
      Solution sol = to_solution(ctx, *radii);
      const double score = ctx.cardinality ? static_cast<double>(sol.shrunk.size()) : cost(sol);
      if (score < best_score) {
        best_score = score;
        best = std::move(sol);
        best_where = "shift (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  if (stats_out) *stats_out = stats;

  Verdict v;
  if (!best) {
    v.note = "no shift admits a solution within the relaxed budget";
    return v;
  }
  v.optimum_cost = cost(*best);
  v.optimum_count = static_cast<int>(best->shrunk.size());
  v.note = best_where;
  if (!ctx.cardinality && *v.optimum_cost > (1.0 + opts.eps) * *inst.mu + 1e-9) {
    v.note = "best cost exceeds (1+eps) mu";
    return v;
  }
  v.answer = Answer::Yes;
  v.witness = std::move(best);
  return v;
}

}  // namespace diskscale
