#include "diskscale/compress_acyc.hpp"

#include "diskscale/graph.hpp"

#include <algorithm>
#include <map>

namespace diskscale {

namespace {

void require_acyclicity(const Instance& inst) {
  if (!is_acyclicity(inst.problem)) throw std::invalid_argument("compress: acyclicity variant required");
}

double dist(const Instance& inst, int a, int b) {
  return distance(inst.points[static_cast<std::size_t>(a)], inst.points[static_cast<std::size_t>(b)]);
}

int nu_count(NuClass c) {
  switch (c) {
    case NuClass::One: return 1;
    case NuClass::Two: return 2;
    case NuClass::Bottom: return kUnbreakable;
  }
  return kUnbreakable;
}

}  // namespace

int AnnotatedMultigraph::degree(int p) const {
  int deg = 0;
  for (const auto& e : edges) deg += (e.u == p) + (e.v == p);
  return deg;
}

long long degree_limit(int k) { return 25LL * k + 50; }

long long core_size_limit(int k) {
  const long long delta = 25LL * k + 51;
  return k * (delta - 1) + 3LL * k - 1;
}

bool degree_gate(const Instance& inst) {
  require_acyclicity(inst);
  return unit_disk_graph(inst.points, DiskModel::Open).max_degree() <= degree_limit(inst.k);
}

std::vector<int> prune(const Instance& inst) {
  require_acyclicity(inst);
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  const int n = h.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = h.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[static_cast<std::size_t>(v)]) continue;
    alive[static_cast<std::size_t>(v)] = false;
    for (int w : h.neighbors(v)) {
      if (alive[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] <= 1) queue.push_back(w);
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  // Leaf stripping leaves minimum degree 2, so no surviving component is a
  // tree; the check stays as a guard.
  const DiskGraph sub = induced_subgraph(h, rest);
  int nc = 0;
  const auto label = component_labels(sub, &nc);
  std::vector<int> vcount(static_cast<std::size_t>(nc), 0), ecount(static_cast<std::size_t>(nc), 0);
  for (int i = 0; i < sub.size(); ++i) ++vcount[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
  for (const auto& e : sub.edges()) ++ecount[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])];
  std::vector<int> out;
  for (int i = 0; i < sub.size(); ++i) {
    const int c = label[static_cast<std::size_t>(i)];
    if (ecount[static_cast<std::size_t>(c)] >= vcount[static_cast<std::size_t>(c)]) out.push_back(rest[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::pair<int, int> longest_edge(const Instance& inst, const std::vector<int>& walk, bool closed) {
  std::pair<int, int> best{-1, -1};
  double best_d = -1.0;
  const std::size_t m = closed ? walk.size() : walk.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    int a = walk[i], b = walk[(i + 1) % walk.size()];
    if (a > b) std::swap(a, b);
    const double d = dist(inst, a, b);
    if (d > best_d || (d == best_d && std::make_pair(a, b) < best)) {
      best_d = d;
      best = {a, b};
    }
  }
  return best;
}

CompressResult compress(const Instance& inst) {
  require_acyclicity(inst);
  CompressResult out;
  out.k_remaining = inst.k;
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  if (!degree_gate(inst)) {
    out.short_circuit_no = true;
    out.reason = "degree above 25k+50";
    return out;
  }
  const std::vector<int> kept = prune(inst);
  if (kept.empty()) return out;
  if (inst.k <= 0) {
    out.short_circuit_no = true;
    out.reason = "k = 0 and H is not a forest";
    return out;
  }

  const int n = inst.size();
  std::vector<bool> alive(static_cast<std::size_t>(n), false);
  for (int v : kept) alive[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : h.edges()) {
    if (alive[static_cast<std::size_t>(e.u)] && alive[static_cast<std::size_t>(e.v)]) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto deg = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  // Isolated cycles: components where every vertex has degree 2.
  for (int s : kept) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    bool all_two = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      all_two = all_two && deg(comp[i]) == 2;
      for (int w : adj[static_cast<std::size_t>(comp[i])]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    if (!all_two) continue;
    CycleVertex cv;
    int prev = -1, cur = *std::min_element(comp.begin(), comp.end());
    do {
      cv.members.push_back(cur);
      const auto& a = adj[static_cast<std::size_t>(cur)];
      const int next = a[0] != prev ? a[0] : a[1];
      prev = cur;
      cur = next;
    } while (cur != cv.members.front());
    cv.max_edge = longest_edge(inst, cv.members, true);
    cv.d_max = dist(inst, cv.max_edge.first, cv.max_edge.second);
    cv.count_needed = nu_count(edge_nu(cv.d_max, inst.alpha));
    cv.cost_needed = 2.0 - cv.d_max;
    if (cv.count_needed == kUnbreakable) {
      out.short_circuit_no = true;
      out.reason = "isolated cycle with an irremovable longest edge";
      return out;
    }
    out.k_remaining -= cv.count_needed;
    out.fixed_cost += cv.cost_needed;
    for (int v : cv.members) alive[static_cast<std::size_t>(v)] = false;
    out.graph.cycles.push_back(std::move(cv));
  }
  if (out.k_remaining < 0) {
    out.short_circuit_no = true;
    out.reason = "isolated cycles need more than k shrinks";
    return out;
  }

  auto& g = out.graph;
  for (int v : kept) {
    if (alive[static_cast<std::size_t>(v)] && deg(v) >= 3) g.core.push_back(v);
  }
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  for (int p : g.core) {
    for (int first : adj[static_cast<std::size_t>(p)]) {
      if (deg(first) >= 3) {
        if (p < first) {
          AnnotatedEdge e;
          e.kind = EdgeKind::Original;
          e.u = p;
          e.v = first;
          e.d = dist(inst, p, first);
          g.edges.push_back(std::move(e));
        }
        continue;
      }
      if (on_path[static_cast<std::size_t>(first)]) continue;
      std::vector<int> path;
      int prev = p, cur = first;
      while (deg(cur) == 2) {
        path.push_back(cur);
        on_path[static_cast<std::size_t>(cur)] = true;
        const auto& a = adj[static_cast<std::size_t>(cur)];
        const int next = a[0] != prev ? a[0] : a[1];
        prev = cur;
        cur = next;
      }
      const int q = cur;
      // Orient so that u <= v; self-loops start from the lower-index interior end.
      if (q < p || (q == p && path.back() < path.front())) std::reverse(path.begin(), path.end());
      AnnotatedEdge e;
      e.kind = EdgeKind::Reducible;
      e.u = std::min(p, q);
      e.v = std::max(p, q);
      e.path = std::move(path);
      e.d_start = dist(inst, e.u, e.path.front());
      e.d_end = dist(inst, e.path.back(), e.v);
      if (e.path.size() >= 2) {
        e.max_edge = longest_edge(inst, e.path, false);
        e.d_max = dist(inst, e.max_edge->first, e.max_edge->second);
      }
      g.edges.push_back(std::move(e));
    }
  }

  if (!size_gate(g, inst.k)) {
    out.short_circuit_no = true;
    out.reason = "more than k(Delta-1)+3k-1 core vertices";
  }
  return out;
}

bool size_gate(const AnnotatedMultigraph& g, int k) {
  if (g.core.empty()) return true;
  return static_cast<long long>(g.core.size()) <= core_size_limit(k);
}

}  // namespace diskscale
