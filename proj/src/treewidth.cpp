#include "diskscale/treewidth.hpp"

#include "diskscale/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace diskscale {

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()));
  return w - 1;
}

TreeDecomposition min_fill_decomposition(const DiskGraph& g) {
  const int n = g.size();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::vector<int> order, position(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> bags;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long best = std::numeric_limits<long long>::max();
    for (int v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      const auto& nb = adj[static_cast<std::size_t>(v)];
      long long fill = 0;
      for (auto a = nb.begin(); a != nb.end(); ++a) {
        for (auto b = std::next(a); b != nb.end(); ++b) fill += !adj[static_cast<std::size_t>(*a)].count(*b);
      }
      if (fill < best) {
        best = fill;
        pick = v;
      }
    }
    const std::vector<int> nb(adj[static_cast<std::size_t>(pick)].begin(), adj[static_cast<std::size_t>(pick)].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[static_cast<std::size_t>(nb[i])].insert(nb[j]);
        adj[static_cast<std::size_t>(nb[j])].insert(nb[i]);
      }
    }
    for (int w : nb) adj[static_cast<std::size_t>(w)].erase(pick);
    gone[static_cast<std::size_t>(pick)] = true;
    position[static_cast<std::size_t>(pick)] = step;
    order.push_back(pick);
    std::vector<int> bag = nb;
    bag.push_back(pick);
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
  }

  TreeDecomposition td;
  td.nodes.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) td.nodes[static_cast<std::size_t>(i)].bag = bags[static_cast<std::size_t>(i)];
  // Node i hangs below the node of its earliest-eliminated later neighbour;
  // component roots are chained so the result is a single tree.
  int last_root = -1;
  for (int i = n - 1; i >= 0; --i) {
    const int v = order[static_cast<std::size_t>(i)];
    int parent = -1;
    for (int w : bags[static_cast<std::size_t>(i)]) {
      if (w == v) continue;
      const int pw = position[static_cast<std::size_t>(w)];
      if (parent < 0 || pw < parent) parent = pw;
    }
    if (parent < 0) {
      if (last_root >= 0) {
        td.nodes[static_cast<std::size_t>(last_root)].children.push_back(i);
      } else {
        td.root = i;
      }
      last_root = i;
    } else {
      td.nodes[static_cast<std::size_t>(parent)].children.push_back(i);
    }
  }
  return td;
}

TreeDecomposition make_nice(const TreeDecomposition& raw) {
  TreeDecomposition td;
  td.nice = true;
  auto add = [&](NodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
    td.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
    return static_cast<int>(td.nodes.size()) - 1;
  };
  // Walks from `from` (bag `have`) to bag `want` by forgets then introduces.
  auto morph = [&](int from, std::vector<int> have, const std::vector<int>& want) {
    for (int v : std::vector<int>(have)) {
      if (std::binary_search(want.begin(), want.end(), v)) continue;
      have.erase(std::find(have.begin(), have.end(), v));
      from = add(NodeKind::Forget, v, have, {from});
    }
    for (int v : want) {
      if (std::binary_search(have.begin(), have.end(), v)) continue;
      have.insert(std::upper_bound(have.begin(), have.end(), v), v);
      from = add(NodeKind::Introduce, v, have, {from});
    }
    return from;
  };
  if (raw.root < 0) {
    td.root = add(NodeKind::Leaf, -1, {}, {});
    return td;
  }
  std::function<int(int)> build = [&](int u) {
    const auto& node = raw.nodes[static_cast<std::size_t>(u)];
    std::vector<int> tops;
    for (int c : node.children) tops.push_back(morph(build(c), raw.nodes[static_cast<std::size_t>(c)].bag, node.bag));
    if (tops.empty()) return morph(add(NodeKind::Leaf, -1, {}, {}), {}, node.bag);
    int acc = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) acc = add(NodeKind::Join, -1, node.bag, {acc, tops[i]});
    return acc;
  };
  const int top = build(raw.root);
  td.root = morph(top, raw.nodes[static_cast<std::size_t>(raw.root)].bag, {});
  return td;
}

TreeDecomposition decompose(const DiskGraph& g) { return make_nice(min_fill_decomposition(g)); }

bool is_valid_decomposition(const DiskGraph& g, const TreeDecomposition& td, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const int n = g.size();
  const int m = static_cast<int>(td.nodes.size());
  if (m == 0 || td.root < 0 || td.root >= m) return fail("missing root");
  std::vector<int> parent(static_cast<std::size_t>(m), -2);
  parent[static_cast<std::size_t>(td.root)] = -1;
  std::vector<int> stack{td.root};
  int reached = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : td.nodes[static_cast<std::size_t>(u)].children) {
      if (c < 0 || c >= m || parent[static_cast<std::size_t>(c)] != -2) return fail("not a tree");
      parent[static_cast<std::size_t>(c)] = u;
      stack.push_back(c);
    }
  }
  if (reached != m) return fail("unreachable nodes");

  std::vector<int> occurrences(static_cast<std::size_t>(n), 0), links(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < m; ++u) {
    const auto& bag = td.nodes[static_cast<std::size_t>(u)].bag;
    if (!std::is_sorted(bag.begin(), bag.end())) return fail("unsorted bag");
    for (int v : bag) {
      if (v < 0 || v >= n) return fail("bag vertex out of range");
      ++occurrences[static_cast<std::size_t>(v)];
      const int p = parent[static_cast<std::size_t>(u)];
      if (p >= 0) {
        const auto& pb = td.nodes[static_cast<std::size_t>(p)].bag;
        links[static_cast<std::size_t>(v)] += std::binary_search(pb.begin(), pb.end(), v);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (occurrences[static_cast<std::size_t>(v)] == 0) return fail("vertex " + std::to_string(v) + " in no bag");
    if (links[static_cast<std::size_t>(v)] != occurrences[static_cast<std::size_t>(v)] - 1) {
      return fail("bags of vertex " + std::to_string(v) + " are not connected");
    }
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& node : td.nodes) {
      covered = covered || (std::binary_search(node.bag.begin(), node.bag.end(), e.u) &&
                            std::binary_search(node.bag.begin(), node.bag.end(), e.v));
    }
    if (!covered) return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered");
  }
  if (!td.nice) return true;

  if (!td.nodes[static_cast<std::size_t>(td.root)].bag.empty()) return fail("root bag not empty");
  for (const auto& node : td.nodes) {
    const auto& c = node.children;
    auto child_bag = [&](std::size_t i) -> const std::vector<int>& { return td.nodes[static_cast<std::size_t>(c[i])].bag; };
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!c.empty() || !node.bag.empty()) return fail("bad leaf");
        break;
      case NodeKind::Introduce:
      case NodeKind::Forget: {
        if (c.size() != 1) return fail("introduce/forget needs one child");
        std::vector<int> big = node.kind == NodeKind::Introduce ? node.bag : child_bag(0);
        const std::vector<int>& small = node.kind == NodeKind::Introduce ? child_bag(0) : node.bag;
        const auto it = std::find(big.begin(), big.end(), node.vertex);
        if (it == big.end()) return fail("vertex missing from larger bag");
        big.erase(it);
        if (big != small) return fail("introduce/forget bag mismatch");
        break;
      }
      case NodeKind::Join:
        if (c.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag) return fail("bad join");
        break;
      case NodeKind::Raw:
        return fail("raw node in nice decomposition");
    }
  }
  return true;
}

double clique_degree_threshold(Problem problem, double alpha) {
  if (alpha <= 0.0) return std::numeric_limits<double>::infinity();
  const double t = 2.0 / alpha + 1.0;
  return (is_acyclicity(problem) ? 6.0 : 1.0) * t * t - 1.0;
}

bool clique_degree_gate(const Instance& inst) {
  if (!is_independence(inst.problem) && !is_acyclicity(inst.problem)) {
    throw std::invalid_argument("clique_degree_gate: independence or acyclicity variant required");
  }
  return unit_disk_graph(inst.points, DiskModel::Open).max_degree() <= clique_degree_threshold(inst.problem, inst.alpha);
}

namespace {

constexpr int kNoValue = std::numeric_limits<int>::max();
constexpr std::size_t kMaxBag = 24;

struct EdgeInfo {
  std::map<std::pair<int, int>, NuClass> nu;

  NuClass at(int a, int b) const { return nu.at({std::min(a, b), std::max(a, b)}); }
};

EdgeInfo edge_info(const Instance& inst, const DiskGraph& h) {
  EdgeInfo info;
  for (const auto& e : h.edges()) info.nu[{e.u, e.v}] = edge_nu(e.dist, inst.alpha);
  return info;
}

int position_in(const std::vector<int>& bag, int v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Removes bit `pos` from a mask, shifting higher bits down.
std::uint32_t drop_bit(std::uint32_t mask, int pos) {
  const std::uint32_t low = mask & ((1u << pos) - 1u);
  return low | ((mask >> (pos + 1)) << pos);
}

std::uint32_t insert_bit(std::uint32_t mask, int pos, bool bit) {
  const std::uint32_t low = mask & ((1u << pos) - 1u);
  return low | (static_cast<std::uint32_t>(bit) << pos) | ((mask >> pos) << (pos + 1));
}

// Edge survives a radius-{alpha,1} assignment given how many endpoints shrink.
bool edge_present(NuClass c, int shrunk) {
  if (shrunk == 0) return true;
  if (shrunk == 1) return c != NuClass::One;
  return c == NuClass::Bottom;
}

void check_width(const TreeDecomposition& td) {
  for (const auto& n : td.nodes) {
    if (n.bag.size() > kMaxBag) throw std::runtime_error("treewidth: bag of " + std::to_string(n.bag.size()) + " vertices is too wide");
  }
}

Verdict finish(const Instance& inst, int best, std::vector<int> s) {
  Verdict v;
  if (best == kNoValue) {
    v.note = "no shrink set makes the property hold";
    return v;
  }
  v.optimum_count = best;
  if (best > inst.k) {
    v.note = "minimum shrink count " + std::to_string(best) + " exceeds k";
    return v;
  }
  std::sort(s.begin(), s.end());
  v.answer = Answer::Yes;
  v.witness = uniform_solution(inst.size(), std::move(s), inst.alpha);
  v.optimum_cost = cost(*v.witness);
  return v;
}

}  // namespace

Verdict dp_independence(const Instance& inst, const TreeDecomposition& td) {
  if (inst.problem != Problem::ShrinkIndependence) throw std::invalid_argument("dp_independence: cardinality independence required");
  if (!td.nice) throw std::invalid_argument("dp_independence: nice decomposition required");
  check_width(td);
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  const EdgeInfo info = edge_info(inst, h);
  for (const auto& [e, c] : info.nu) {
    if (c == NuClass::Bottom) {
      Verdict v;
      v.note = "irremovable edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
      return v;
    }
  }

  struct Table {
    std::vector<int> value;
    std::vector<std::uint32_t> from;  // child mask (forget)
  };
  std::vector<Table> tables(td.nodes.size());
  std::function<void(int)> run = [&](int u) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    for (int c : node.children) run(c);
    Table& t = tables[static_cast<std::size_t>(u)];
    t.value.assign(std::size_t{1} << node.bag.size(), kNoValue);
    t.from.assign(t.value.size(), 0);
    switch (node.kind) {
      case NodeKind::Leaf:
        t.value[0] = 0;
        break;
      case NodeKind::Introduce: {
        const Table& ct = tables[static_cast<std::size_t>(node.children[0])];
        const int pos = position_in(node.bag, node.vertex);
        for (std::uint32_t m = 0; m < ct.value.size(); ++m) {
          for (bool bit : {false, true}) t.value[insert_bit(m, pos, bit)] = ct.value[m];
        }
        break;
      }
      case NodeKind::Forget: {
        const auto& cbag = td.nodes[static_cast<std::size_t>(node.children[0])].bag;
        const Table& ct = tables[static_cast<std::size_t>(node.children[0])];
        const int pos = position_in(cbag, node.vertex);
        for (std::uint32_t m = 0; m < ct.value.size(); ++m) {
          if (ct.value[m] == kNoValue) continue;
          const bool in_v = m >> pos & 1u;
          bool ok = true;
          for (std::size_t i = 0; i < cbag.size() && ok; ++i) {
            const int w = cbag[i];
            if (w == node.vertex || !h.has_edge(node.vertex, w)) continue;
            const int shrunk = in_v + static_cast<int>(m >> i & 1u);
            ok = !edge_present(info.at(node.vertex, w), shrunk);
          }
          if (!ok) continue;
          const std::uint32_t nm = drop_bit(m, pos);
          const int val = ct.value[m] + in_v;
          if (val < t.value[nm]) {
            t.value[nm] = val;
            t.from[nm] = m;
          }
        }
        break;
      }
      case NodeKind::Join: {
        const Table& a = tables[static_cast<std::size_t>(node.children[0])];
        const Table& b = tables[static_cast<std::size_t>(node.children[1])];
        for (std::uint32_t m = 0; m < t.value.size(); ++m) {
          if (a.value[m] != kNoValue && b.value[m] != kNoValue) t.value[m] = a.value[m] + b.value[m];
        }
        break;
      }
      case NodeKind::Raw:
        throw std::invalid_argument("dp_independence: raw node");
    }
  };
  run(td.root);

  const int best = tables[static_cast<std::size_t>(td.root)].value[0];
  std::vector<int> s;
  if (best != kNoValue) {
    std::function<void(int, std::uint32_t)> trace = [&](int u, std::uint32_t m) {
      const auto& node = td.nodes[static_cast<std::size_t>(u)];
      switch (node.kind) {
        case NodeKind::Leaf:
        case NodeKind::Raw:
          return;
        case NodeKind::Introduce:
          trace(node.children[0], drop_bit(m, position_in(node.bag, node.vertex)));
          return;
        case NodeKind::Forget: {
          const std::uint32_t cm = tables[static_cast<std::size_t>(u)].from[m];
          const auto& cbag = td.nodes[static_cast<std::size_t>(node.children[0])].bag;
          if (cm >> position_in(cbag, node.vertex) & 1u) s.push_back(node.vertex);
          trace(node.children[0], cm);
          return;
        }
        case NodeKind::Join:
          trace(node.children[0], m);
          trace(node.children[1], m);
          return;
      }
    };
    trace(td.root, 0);
  }
  return finish(inst, best, std::move(s));
}

namespace {

// State: shrink mask over the bag plus canonical block labels per bag slot.
struct AcycKey {
  std::uint32_t mask = 0;
  std::vector<std::uint8_t> block;
  auto operator<=>(const AcycKey&) const = default;
};

struct AcycEntry {
  int value = kNoValue;
  AcycKey left, right;
};

void canonicalize(std::vector<std::uint8_t>& block) {
  std::map<std::uint8_t, std::uint8_t> relabel;
  for (auto& b : block) {
    auto it = relabel.find(b);
    if (it == relabel.end()) it = relabel.emplace(b, static_cast<std::uint8_t>(relabel.size())).first;
    b = it->second;
  }
}

}  // namespace

Verdict dp_acyclicity(const Instance& inst, const TreeDecomposition& td) {
  if (inst.problem != Problem::ShrinkAcyclicity) throw std::invalid_argument("dp_acyclicity: cardinality acyclicity required");
  if (!td.nice) throw std::invalid_argument("dp_acyclicity: nice decomposition required");
  check_width(td);
  const DiskGraph h = unit_disk_graph(inst.points, DiskModel::Open);
  const EdgeInfo info = edge_info(inst, h);

  using Table = std::map<AcycKey, AcycEntry>;
  std::vector<Table> tables(td.nodes.size());
  auto relax = [](Table& t, const AcycKey& key, int value, const AcycKey& l, const AcycKey& r) {
    auto& e = t[key];
    if (value < e.value) e = {value, l, r};
  };
  std::function<void(int)> run = [&](int u) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    for (int c : node.children) run(c);
    Table& t = tables[static_cast<std::size_t>(u)];
    switch (node.kind) {
      case NodeKind::Leaf:
        t[AcycKey{}] = {0, {}, {}};
        break;
      case NodeKind::Introduce: {
        const int pos = position_in(node.bag, node.vertex);
        for (const auto& [ck, ce] : tables[static_cast<std::size_t>(node.children[0])]) {
          for (bool bit : {false, true}) {
            AcycKey k;
            k.mask = insert_bit(ck.mask, pos, bit);
            k.block = ck.block;
            k.block.insert(k.block.begin() + pos, static_cast<std::uint8_t>(255));
            canonicalize(k.block);
            relax(t, k, ce.value, ck, {});
          }
        }
        break;
      }
      case NodeKind::Forget: {
        const auto& cbag = td.nodes[static_cast<std::size_t>(node.children[0])].bag;
        const int pos = position_in(cbag, node.vertex);
        for (const auto& [ck, ce] : tables[static_cast<std::size_t>(node.children[0])]) {
          const bool in_v = ck.mask >> pos & 1u;
          UnionFind uf(static_cast<int>(cbag.size()));
          // Seed with the existing blocks.
          std::vector<int> first(cbag.size(), -1);
          for (std::size_t i = 0; i < cbag.size(); ++i) {
            const auto b = ck.block[i];
            if (first[b] < 0) {
              first[b] = static_cast<int>(i);
            } else {
              uf.unite(first[b], static_cast<int>(i));
            }
          }
          bool ok = true;
          for (std::size_t i = 0; i < cbag.size() && ok; ++i) {
            const int w = cbag[i];
            if (w == node.vertex || !h.has_edge(node.vertex, w)) continue;
            const int shrunk = in_v + static_cast<int>(ck.mask >> i & 1u);
            if (edge_present(info.at(node.vertex, w), shrunk)) ok = uf.unite(pos, static_cast<int>(i));
          }
          if (!ok) continue;
          AcycKey k;
          k.mask = drop_bit(ck.mask, pos);
          for (std::size_t i = 0; i < cbag.size(); ++i) {
            if (static_cast<int>(i) != pos) k.block.push_back(static_cast<std::uint8_t>(uf.find(static_cast<int>(i))));
          }
          canonicalize(k.block);
          relax(t, k, ce.value + in_v, ck, {});
        }
        break;
      }
      case NodeKind::Join: {
        const Table& a = tables[static_cast<std::size_t>(node.children[0])];
        const Table& b = tables[static_cast<std::size_t>(node.children[1])];
        const std::size_t size = node.bag.size();
        for (const auto& [ka, ea] : a) {
          for (const auto& [kb, eb] : b) {
            if (ka.mask != kb.mask) continue;
            UnionFind uf(static_cast<int>(size));
            bool ok = true;
            for (const auto* blocks : {&ka.block, &kb.block}) {
              std::vector<int> first(size, -1);
              for (std::size_t i = 0; i < size && ok; ++i) {
                const auto bl = (*blocks)[i];
                if (first[bl] < 0) {
                  first[bl] = static_cast<int>(i);
                } else {
                  ok = uf.unite(first[bl], static_cast<int>(i));
                }
              }
            }
            if (!ok) continue;
            AcycKey k;
            k.mask = ka.mask;
            for (std::size_t i = 0; i < size; ++i) k.block.push_back(static_cast<std::uint8_t>(uf.find(static_cast<int>(i))));
            canonicalize(k.block);
            relax(t, k, ea.value + eb.value, ka, kb);
          }
        }
        break;
      }
      case NodeKind::Raw:
        throw std::invalid_argument("dp_acyclicity: raw node");
    }
  };
  run(td.root);

  const Table& top = tables[static_cast<std::size_t>(td.root)];
  const auto it = top.find(AcycKey{});
  const int best = it == top.end() ? kNoValue : it->second.value;
  std::vector<int> s;
  if (best != kNoValue) {
    std::function<void(int, const AcycKey&)> trace = [&](int u, const AcycKey& key) {
      const auto& node = td.nodes[static_cast<std::size_t>(u)];
      const AcycEntry& e = tables[static_cast<std::size_t>(u)].at(key);
      switch (node.kind) {
        case NodeKind::Leaf:
        case NodeKind::Raw:
          return;
        case NodeKind::Forget: {
          const auto& cbag = td.nodes[static_cast<std::size_t>(node.children[0])].bag;
          if (e.left.mask >> position_in(cbag, node.vertex) & 1u) s.push_back(node.vertex);
          trace(node.children[0], e.left);
          return;
        }
        case NodeKind::Introduce:
          trace(node.children[0], e.left);
          return;
        case NodeKind::Join:
          trace(node.children[0], e.left);
          trace(node.children[1], e.right);
          return;
      }
    };
    trace(td.root, AcycKey{});
  }
  return finish(inst, best, std::move(s));
}

Verdict solve_treewidth(const Instance& inst) {
  if (inst.problem != Problem::ShrinkIndependence && inst.problem != Problem::ShrinkAcyclicity) {
    throw std::invalid_argument("treewidth solver handles the cardinality independence and acyclicity variants");
  }
  if (!clique_degree_gate(inst)) {
    Verdict v;
    v.note = "degree above the packing threshold";
    return v;
  }
  const TreeDecomposition td = decompose(unit_disk_graph(inst.points, DiskModel::Open));
  return is_independence(inst.problem) ? dp_independence(inst, td) : dp_acyclicity(inst, td);
}

}  // namespace diskscale
