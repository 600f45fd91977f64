#include "doctest.h"

#include "diskscale/combinatorics.hpp"
#include "diskscale/solvers.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diskscale;

namespace {

Instance indep(std::vector<Point> pts, double alpha, int k, std::optional<double> mu = std::nullopt) {
  return make_instance(std::move(pts), mu ? Problem::MinShrinkIndependence : Problem::ShrinkIndependence, alpha, k, mu);
}

Instance acyc(std::vector<Point> pts, double alpha, int k, std::optional<double> mu = std::nullopt) {
  return make_instance(std::move(pts), mu ? Problem::MinShrinkAcyclicity : Problem::ShrinkAcyclicity, alpha, k, mu);
}

// Test-side radius search for tiny instances: every point's radius on a grid
// of `step`, minimum cost among assignments passing validate.
std::optional<double> grid_min_cost(const Instance& inst, double step) {
  const int n = inst.size();
  const int levels = static_cast<int>(std::round((1.0 - inst.alpha) / step));
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::optional<double> best;
  for (;;) {
    std::vector<double> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = 1.0 - step * idx[static_cast<std::size_t>(i)];
    Solution s = solution_from_radii(r);
    ValidateOptions o;
    o.mu_override = 1e9;
    if (static_cast<int>(s.shrunk.size()) <= inst.k && validate(inst, s, o).ok) {
      const double c = cost(s);
      if (!best || c < *best) best = c;
    }
    int i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] > levels) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return best;
}

Instance random_acyc(std::mt19937_64& rng, int max_n, int max_edges) {
  for (;;) {
    const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 2));
    auto pts = fixtures::random_points(rng, n, 1.4 * std::sqrt(n));
    if (fixtures::count_edges(pts) > max_edges) continue;
    const int k = 1 + static_cast<int>(rng() % 3);
    const double alphas[] = {0.3, 0.5, 0.8};
    const double alpha = alphas[rng() % 3];
    if (rng() % 2) return acyc(std::move(pts), alpha, k, 0.4 * k);
    return acyc(std::move(pts), alpha, k);
  }
}

}  // namespace

TEST_CASE("oracle_independence examples") {
  auto two = oracle_independence(indep({{0, 0}, {1.8, 0}}, 0.5, 1, 0.2));
  REQUIRE(two.yes());
  CHECK(*two.optimum_cost == doctest::Approx(0.2));
  CHECK(*grid_min_cost(indep({{0, 0}, {1.8, 0}}, 0.5, 1, 0.2), 0.01) == doctest::Approx(0.2).epsilon(1e-6));
  for (int k = 0; k < 3; ++k) CHECK_FALSE(oracle_independence(indep({{0, 0}, {0.9, 0}}, 0.5, k)).yes());
  auto edgeless = oracle_independence(indep({{0, 0}, {3, 0}}, 0.5, 0));
  REQUIRE(edgeless.yes());
  CHECK(*edgeless.optimum_cost == 0.0);
  CHECK_THROWS_AS(oracle_independence(indep(fixtures::collinear(17, 3.0), 0.5, 1)), SizeCapExceeded);
}

TEST_CASE("fpt_min_independence examples") {
  auto far = fpt_min_independence(indep({{0, 0}, {5, 0}}, 0.5, 1, 0.0));
  REQUIRE(far.yes());
  CHECK(far.witness->shrunk.empty());

  auto path = indep(fixtures::collinear(3, 1.5), 0.5, 1, 0.5);
  FptStats st;
  auto v = fpt_min_independence(path, &st);
  REQUIRE(v.yes());
  CHECK(v.witness->shrunk == std::vector<int>{1});
  CHECK(*v.optimum_cost == doctest::Approx(0.5));
  CHECK(st.guesses <= binomial_prefix(st.kernel_size, 1));
}

TEST_CASE("fpt independence agrees with the oracle") {
  std::mt19937_64 rng(77);
  const double alphas[] = {0.3, 0.5, 0.8};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int k = 1 + static_cast<int>(rng() % 3);
    const bool min = trial % 2 == 0;
    auto inst = indep(fixtures::random_points(rng, n, 1.8 * std::sqrt(n)), alphas[trial % 3], k,
                      min ? std::optional<double>(0.3 * k) : std::nullopt);
    FptStats st;
    const auto got = fpt_independence(inst, &st);
    const auto want = oracle_independence(inst);
    REQUIRE(got.yes() == want.yes());
    if (got.yes()) CHECK(validate(inst, *got.witness).ok);
    if (min) {
      CHECK(st.guesses <= binomial_prefix(st.kernel_size, k));
      if (got.optimum_cost && want.optimum_cost) CHECK(std::abs(*got.optimum_cost - *want.optimum_cost) <= 1e-6);
    }
  }
}

TEST_CASE("oracle_acyclicity examples") {
  auto forest = oracle_acyclicity(acyc(fixtures::collinear(5, 1.5), 0.5, 0, 0.0));
  REQUIRE(forest.yes());
  CHECK(*forest.optimum_cost == 0.0);

  auto sq = acyc(fixtures::regular_polygon(4, 1.2), 0.5, 2, 1.0);
  auto v = oracle_acyclicity(sq);
  REQUIRE(v.yes());
  CHECK(*v.optimum_cost == doctest::Approx(0.8));
  CHECK(*grid_min_cost(sq, 0.01) == doctest::Approx(0.8).epsilon(1e-6));
  CHECK_FALSE(oracle_acyclicity(acyc(fixtures::regular_polygon(4, 1.2), 0.5, 1)).yes());
  CHECK(*oracle_acyclicity(acyc(fixtures::regular_polygon(4, 1.2), 0.5, 2)).optimum_count == 2);
  CHECK_FALSE(oracle_acyclicity(acyc(fixtures::regular_polygon(3, 0.9), 0.5, 3)).yes());
}

TEST_CASE("fpt_acyclicity examples") {
  auto hex = fpt_acyclicity(acyc(fixtures::regular_polygon(6, 1.9), 0.5, 1, 0.1));
  REQUIRE(hex.yes());
  CHECK(*hex.optimum_cost == doctest::Approx(0.1));
  CHECK_FALSE(fpt_acyclicity(acyc(fixtures::regular_polygon(6, 1.9), 0.5, 0)).yes());

  // Theta graph: hubs 2.4 apart, three bent two-hop paths, all hops nu = One.
  std::vector<Point> theta{{0, 0}, {2.4, 0}, {1.2, 0.0}, {1.2, 1.3}, {1.2, -1.3}};
  auto inst = acyc(theta, 0.3, 1);
  const auto want = oracle_acyclicity(inst);
  const auto got = fpt_acyclicity(inst);
  CHECK(got.yes() == want.yes());
  if (got.yes()) CHECK(validate(inst, *got.witness).ok);
}

TEST_CASE("fpt acyclicity agrees with the oracle") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = random_acyc(rng, 12, 18);
    AcyclicityStats st;
    const auto got = fpt_acyclicity(inst, &st);
    const auto want = oracle_acyclicity(inst);
    INFO("trial " << trial << " n=" << inst.size() << " k=" << inst.k << " alpha=" << inst.alpha);
    REQUIRE(got.yes() == want.yes());
    if (got.yes()) CHECK(validate(inst, *got.witness).ok);
    if (is_min_variant(inst.problem) && want.optimum_cost) {
      REQUIRE(got.optimum_cost.has_value());
      CHECK(std::abs(*got.optimum_cost - *want.optimum_cost) <= 1e-6);
    }
  }
}

TEST_CASE("monotonicity in k") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    auto pts = fixtures::random_points(rng, n, 1.5 * std::sqrt(n));
    for (int k = 0; k < 3; ++k) {
      if (oracle_independence(indep(pts, 0.5, k)).yes()) CHECK(fpt_independence(indep(pts, 0.5, k + 1)).yes());
      if (fixtures::count_edges(pts) <= 18 && oracle_acyclicity(acyc(pts, 0.5, k)).yes()) CHECK(fpt_acyclicity(acyc(pts, 0.5, k + 1)).yes());
    }
  }
}

namespace {

Instance conn(std::vector<Point> pts, double alpha, int k) {
  return make_instance(std::move(pts), Problem::ShrinkConnectivity, alpha, k);
}

}  // namespace

TEST_CASE("connectivity examples") {
  std::vector<Point> blob;
  for (int i = 0; i < 6; ++i) blob.emplace_back(0.05 * i, 0.0);
  auto all = solve_connectivity(conn(blob, 0.5, 6));
  REQUIRE(all.yes());
  CHECK(all.witness->shrunk.size() == 6);

  auto path = conn(fixtures::collinear(4, 2.0), 0.5, 1);
  CHECK_FALSE(solve_connectivity(path).yes());
  for (bool m : unshrinkable_points(path)) CHECK(m);

  std::vector<Point> star{{0, 0}};
  for (int i = 0; i < 6; ++i) {
    const double t = 2.0 * std::acos(-1.0) * i / 6;
    star.emplace_back(1.2 * std::cos(t), 1.2 * std::sin(t));
  }
  auto s6 = conn(star, 0.9, 6);
  CHECK(solve_connectivity(s6).yes() == (oracles::brute_connectivity(s6) >= 6));

  CHECK_FALSE(solve_connectivity(conn({{0, 0}, {5, 0}}, 0.5, 0)).yes());
  CHECK_THROWS(solve_connectivity(make_instance({{0, 0}}, Problem::ExpandConnectivity, 1.5, 1)));
}

TEST_CASE("connectivity matches exhaustive search") {
  std::mt19937_64 rng(5150);
  int checked = 0;
  while (checked < 120) {
    const int n = 2 + static_cast<int>(rng() % 11);
    auto pts = fixtures::random_points(rng, n, 1.3 * std::sqrt(n));
    const double alpha = 0.3 + 0.6 * (static_cast<double>(rng() % 100) / 100.0);
    auto inst = conn(pts, alpha, 1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
    if (!oracles::is_connected_probe(inst)) continue;
    ++checked;
    const int best = oracles::brute_connectivity(inst);
    const auto v = solve_connectivity(inst);
    CHECK(v.yes() == (best >= inst.k));
    if (v.yes()) CHECK(validate(inst, *v.witness).ok);
    const auto marked = unshrinkable_points(inst);
    for (int p = 0; p < n; ++p) {
      Instance probe = inst;
      probe.k = 0;
      CHECK(marked[static_cast<std::size_t>(p)] != validate(probe, uniform_solution(n, {p}, alpha)).ok);
    }
  }
}

TEST_CASE("connectivity node cap is inconclusive, not wrong") {
  std::mt19937_64 rng(9);
  auto pts = fixtures::random_points(rng, 12, 3.0);
  auto inst = conn(pts, 0.5, 12);
  ConnectivityOptions o;
  o.node_cap = 3;
  const auto v = solve_connectivity(inst, o);
  CHECK(v.answer != Answer::No);
}
