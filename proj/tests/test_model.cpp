#include "doctest.h"

#include "diskscale/graph.hpp"
#include "diskscale/model.hpp"

#include <numeric>
#include <random>

using namespace diskscale;

namespace {

// Independent cycle detector: plain parent array, no ranks.
bool has_cycle_uf(int n, const std::vector<DiskEdge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : edges) {
    const int a = root(e.u), b = root(e.v);
    if (a == b) return true;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return false;
}

std::vector<Point> path3() { return {{0, 0}, {1.5, 0}, {3.0, 0}}; }

}  // namespace

TEST_CASE("cost") {
  CHECK(cost(uniform_solution(3, {}, 0.5)) == 0.0);
  Solution s = solution_from_radii({1.0, 0.8, 1.0});
  CHECK(s.shrunk == std::vector<int>{1});
  CHECK(cost(s) == doctest::Approx(0.2));
  CHECK(cost(uniform_solution(3, {0, 2}, 0.5)) == 1.0);
}

TEST_CASE("validate examples") {
  auto inst = make_instance(path3(), Problem::ShrinkIndependence, 0.5, 1);
  CHECK(validate(inst, uniform_solution(3, {1}, 0.5)).ok);
  auto none = validate(inst, uniform_solution(3, {}, 0.5));
  CHECK_FALSE(none.ok);
  CHECK(none.reason.find("edge present") != std::string::npos);

  auto tri = make_instance({{0, 0}, {1, 0}, {0.5, 0.8660254037844386}}, Problem::ShrinkIndependence, 0.6, 3);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 3; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    CHECK_FALSE(validate(tri, uniform_solution(3, s, 0.6)).ok);
  }
}

TEST_CASE("instance invariants") {
  CHECK_THROWS(make_instance({{0, 0}}, Problem::ShrinkIndependence, 1.5, 1));
  CHECK_THROWS(make_instance({{0, 0}}, Problem::ExpandConnectivity, 0.5, 1));
  CHECK_NOTHROW(make_instance({{0, 0}}, Problem::ExpandConnectivity, 1.5, 1));
  CHECK_THROWS(make_instance({{0, 0}}, Problem::MinShrinkIndependence, 0.5, 1));
  CHECK_THROWS(make_instance({{0, 0}}, Problem::ShrinkIndependence, 0.5, 1, 0.3));
  CHECK_THROWS(make_instance({{0, 0}}, Problem::ShrinkIndependence, 0.5, -1));
  Instance bad = make_instance({{0, 0}}, Problem::ShrinkConnectivity, 0.5, 1);
  bad.model = DiskModel::Open;
  CHECK_THROWS(check_instance(bad));
  CHECK(problem_from_name("min-shrink-acyclicity") == Problem::MinShrinkAcyclicity);
  CHECK_FALSE(problem_from_name("shrink").has_value());
}

TEST_CASE("malformed radii name the index") {
  auto inst = make_instance(path3(), Problem::ShrinkIndependence, 0.5, 1);
  Solution s = uniform_solution(3, {1}, 0.5);
  s.radii[2] = -1.0;
  try {
    validate(inst, s);
    FAIL("expected MalformedSolution");
  } catch (const MalformedSolution& e) {
    CHECK(e.index() == 2);
  }
  s.radii.pop_back();
  CHECK_THROWS_AS(validate(inst, s), MalformedSolution);
  Solution t = uniform_solution(3, {1}, 0.5);
  t.shrunk = {5};
  CHECK_THROWS_AS(validate(inst, t), MalformedSolution);
}

TEST_CASE("min variants normalize unit radii and enforce mu") {
  auto inst = make_instance({{0, 0}, {1.8, 0}}, Problem::MinShrinkIndependence, 0.5, 1, 0.2);
  Solution s;
  s.shrunk = {0, 1};
  s.radii = {0.8, 1.0};
  CHECK(validate(inst, s).ok);
  s.radii = {0.79, 1.0};
  CHECK_FALSE(validate(inst, s).ok);
  CHECK(validate(inst, s, [] { ValidateOptions o; o.mu_override = 0.25; return o; }()).ok);
}

TEST_CASE("connectivity cardinality is a lower bound and uses closed disks") {
  auto inst = make_instance({{0, 0}, {2.0, 0}, {1.0, 0.5}}, Problem::ShrinkConnectivity, 0.9, 1);
  CHECK_FALSE(validate(inst, uniform_solution(3, {}, 0.9)).ok);
  CHECK(validate(inst, uniform_solution(3, {2}, 0.9)).ok);
}

TEST_CASE("fuzz: radius above one or too many shrunk points is rejected") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 5.0), unit(0.0, 1.0);
  const Problem kinds[] = {Problem::ShrinkIndependence, Problem::MinShrinkIndependence, Problem::ShrinkAcyclicity,
                           Problem::MinShrinkAcyclicity};
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng));
    const Problem pr = kinds[trial % 4];
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n));
    const double alpha = 0.3 + 0.5 * unit(rng);
    auto inst = make_instance(pts, pr, alpha, k, is_min_variant(pr) ? std::optional<double>(100.0) : std::nullopt);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    if (trial % 2 == 0) {
      // Too many points shrunk.
      std::vector<int> s(all.begin(), all.begin() + k + 1);
      CHECK_FALSE(validate(inst, uniform_solution(n, s, alpha)).ok);
    } else {
      std::vector<int> s(all.begin(), all.begin() + std::min(k, n));
      Solution sol = uniform_solution(n, s, alpha);
      const int victim = all[0];
      sol.radii[static_cast<std::size_t>(victim)] = 1.0 + 0.5 * unit(rng) + 1e-6;
      sol = Solution{sol.shrunk, sol.radii};
      if (std::find(sol.shrunk.begin(), sol.shrunk.end(), victim) == sol.shrunk.end()) {
        sol.shrunk.push_back(victim);
        std::sort(sol.shrunk.begin(), sol.shrunk.end());
      }
      CHECK_FALSE(validate(inst, sol).ok);
    }
  }
}

TEST_CASE("is_forest agrees with a union-find detector") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    DiskGraph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 5 == 0) g.add_edge(i, j, 1.0);
      }
    }
    CHECK(is_forest(g) == !has_cycle_uf(n, g.edges()));
  }
}
