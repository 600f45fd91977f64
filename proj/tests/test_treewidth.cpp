#include "doctest.h"

#include "diskscale/kernel_indep.hpp"
#include "diskscale/solvers.hpp"
#include "diskscale/treewidth.hpp"
#include "fixtures.hpp"

#include <numeric>

using namespace diskscale;

namespace {

DiskGraph random_graph(std::mt19937_64& rng, int n, int density) {
  DiskGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (static_cast<int>(rng() % 100) < density) g.add_edge(i, j, 1.0);
    }
  }
  return g;
}

// Exact treewidth: best elimination ordering over all permutations.
int brute_treewidth(const DiskGraph& g) {
  const int n = g.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& e : g.edges()) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int width = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (!gone[static_cast<std::size_t>(w)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) nb.push_back(w);
      }
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb) {
        for (int b : nb) {
          if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        }
      }
      gone[static_cast<std::size_t>(v)] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DiskGraph cycle_graph(int n) {
  DiskGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 1.0);
  return g;
}

}  // namespace

TEST_CASE("thresholds") {
  CHECK(clique_degree_threshold(Problem::ShrinkIndependence, 1.0) == 8.0);
  CHECK(clique_degree_threshold(Problem::ShrinkIndependence, 0.5) == 24.0);
  CHECK(clique_degree_threshold(Problem::ShrinkAcyclicity, 1.0) == 53.0);
  CHECK(std::isinf(clique_degree_threshold(Problem::ShrinkIndependence, 0.0)));
}

TEST_CASE("decompositions of trees, cliques and cycles") {
  DiskGraph tree(7);
  for (int i = 1; i < 7; ++i) tree.add_edge((i - 1) / 2, i, 1.0);
  auto td = decompose(tree);
  CHECK(is_valid_decomposition(tree, td));
  CHECK(td.width() == 1);

  for (int k = 1; k <= 6; ++k) {
    DiskGraph clique(k);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) clique.add_edge(i, j, 1.0);
    }
    auto c = decompose(clique);
    CHECK(is_valid_decomposition(clique, c));
    CHECK(c.width() == k - 1);
  }
  for (int n = 3; n <= 8; ++n) {
    const auto g = cycle_graph(n);
    CHECK(brute_treewidth(g) == 2);
    const auto c = decompose(g);
    CHECK(is_valid_decomposition(g, c));
    CHECK(c.width() == 2);
  }
  DiskGraph empty(0);
  CHECK(is_valid_decomposition(empty, decompose(empty)));
}

TEST_CASE("validity checker rejects broken decompositions") {
  const auto g = cycle_graph(5);
  auto td = decompose(g);
  std::string why;
  auto broken = td;
  for (auto& node : broken.nodes) {
    if (node.kind == NodeKind::Join || node.bag.size() == 3) {
      node.bag.clear();
      break;
    }
  }
  CHECK_FALSE(is_valid_decomposition(g, broken, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("random graphs decompose validly") {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = random_graph(rng, n, 10 + static_cast<int>(rng() % 50));
    const auto raw = min_fill_decomposition(g);
    std::string why;
    CHECK_MESSAGE(is_valid_decomposition(g, raw, &why), why);
    const auto nice = make_nice(raw);
    CHECK_MESSAGE(is_valid_decomposition(g, nice, &why), why);
    CHECK(nice.width() == raw.width());
    if (n <= 7) CHECK(raw.width() >= brute_treewidth(g));
  }
}

TEST_CASE("dp_independence examples") {
  auto c5 = make_instance(fixtures::regular_polygon(5, 1.8), Problem::ShrinkIndependence, 0.5, 3);
  auto v = solve_treewidth(c5);
  REQUIRE(v.yes());
  CHECK(*v.optimum_count == 3);
  c5.k = 2;
  CHECK_FALSE(solve_treewidth(c5).yes());
  auto two = solve_treewidth(make_instance({{0, 0}, {1.2, 0}}, Problem::ShrinkIndependence, 0.5, 2));
  CHECK(*two.optimum_count == 2);
  auto none = solve_treewidth(make_instance({{0, 0}, {3, 0}}, Problem::ShrinkIndependence, 0.5, 0));
  REQUIRE(none.yes());
  CHECK(*none.optimum_count == 0);
}

TEST_CASE("dp_acyclicity examples") {
  auto forest = solve_treewidth(make_instance(fixtures::collinear(6, 1.5), Problem::ShrinkAcyclicity, 0.5, 0));
  REQUIRE(forest.yes());
  CHECK(*forest.optimum_count == 0);
  auto hex = solve_treewidth(make_instance(fixtures::regular_polygon(6, 1.9), Problem::ShrinkAcyclicity, 0.5, 1));
  REQUIRE(hex.yes());
  CHECK(*hex.optimum_count == 1);
  auto pts = fixtures::regular_polygon(6, 1.9);
  for (const auto& p : fixtures::regular_polygon(6, 1.9, {20, 0})) pts.push_back(p);
  auto two = make_instance(pts, Problem::ShrinkAcyclicity, 0.5, 2);
  auto v = solve_treewidth(two);
  REQUIRE(v.yes());
  CHECK(*v.optimum_count == 2);
  CHECK(*oracle_acyclicity(two).optimum_count == 2);
}

TEST_CASE("dp_independence matches brute force") {
  std::mt19937_64 rng(61);
  const double alphas[] = {0.3, 0.5, 0.8};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    auto inst = make_instance(fixtures::random_points(rng, n, 2.0 * std::sqrt(n)), Problem::ShrinkIndependence,
                              alphas[trial % 3], 1 + static_cast<int>(rng() % 5));
    const auto got = solve_treewidth(inst);
    const auto want = oracle_independence(inst);
    const auto fvc = solve_forced_vc(to_forced_vc(inst), inst.k);
    REQUIRE(got.yes() == want.yes());
    CHECK(fvc.yes() == want.yes());
    if (got.yes()) {
      CHECK(validate(inst, *got.witness).ok);
      CHECK(*got.optimum_count == *want.optimum_count);
    }
  }
}

TEST_CASE("dp_acyclicity matches brute force") {
  std::mt19937_64 rng(62);
  const double alphas[] = {0.3, 0.5, 0.8};
  int done = 0;
  while (done < 200) {
    const int n = 2 + static_cast<int>(rng() % 11);
    auto pts = fixtures::random_points(rng, n, 1.5 * std::sqrt(n));
    if (fixtures::count_edges(pts) > 18) continue;
    ++done;
    auto inst = make_instance(pts, Problem::ShrinkAcyclicity, alphas[done % 3], static_cast<int>(rng() % 4));
    const auto got = solve_treewidth(inst);
    const auto want = oracle_acyclicity(inst);
    REQUIRE(got.yes() == want.yes());
    if (got.yes()) {
      CHECK(validate(inst, *got.witness).ok);
      CHECK(*got.optimum_count == *want.optimum_count);
    }
  }
}

TEST_CASE("residual-edge rule matches build_disk_graph") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto pts = fixtures::random_points(rng, n, 3.0);
    const double alpha = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    std::vector<double> r(static_cast<std::size_t>(n), 1.0);
    for (auto& x : r) {
      if (rng() % 2) x = alpha;
    }
    const auto g = build_disk_graph(pts, r, DiskModel::Open);
    const auto h = unit_disk_graph(pts, DiskModel::Open);
    int present = 0;
    for (const auto& e : h.edges()) {
      const int shrunk = (r[static_cast<std::size_t>(e.u)] < 1.0) + (r[static_cast<std::size_t>(e.v)] < 1.0);
      const NuClass c = edge_nu(e.dist, alpha);
      const bool rule = shrunk == 0 || (shrunk == 1 && c != NuClass::One) || (shrunk == 2 && c == NuClass::Bottom);
      CHECK(rule == g.has_edge(e.u, e.v));
      present += rule;
    }
    CHECK(present == g.num_edges());
  }
}

TEST_CASE("degree gate stars are no-instances") {
  for (double alpha : {1.0, 0.9}) {
    const int leaves = static_cast<int>(std::floor(clique_degree_threshold(Problem::ShrinkIndependence, alpha))) + 1;
    std::vector<Point> star{{0, 0}};
    for (int i = 0; i < leaves; ++i) star.emplace_back(0.01 * (i + 1), 0.0);
    auto inst = make_instance(star, Problem::ShrinkIndependence, alpha, static_cast<int>(star.size()));
    CHECK_FALSE(clique_degree_gate(inst));
    CHECK_FALSE(solve_treewidth(inst).yes());
    CHECK_FALSE(oracle_independence(inst).yes());
  }
}
