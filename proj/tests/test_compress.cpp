#include "doctest.h"

#include "diskscale/compress_acyc.hpp"
#include "diskscale/solvers.hpp"
#include "fixtures.hpp"

using namespace diskscale;

namespace {

Instance acyc(std::vector<Point> pts, double alpha, int k, std::optional<double> mu = std::nullopt) {
  return make_instance(std::move(pts), mu ? Problem::MinShrinkAcyclicity : Problem::ShrinkAcyclicity, alpha, k, mu);
}

// Two hubs 6 apart joined by a straight path and two arcs, none touching.
std::vector<Point> theta() {
  std::vector<Point> pts{{0, 0}, {6, 0}, {1.5, 0}, {3, 0}, {4.5, 0}};
  for (double s : {1.0, -1.0}) {
    for (const Point& p : {Point(0, 1.9), Point(1.5, 3.1), Point(3, 3.6), Point(4.5, 3.1), Point(6, 1.9)}) {
      pts.emplace_back(p.x(), s * p.y());
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("limits") {
  CHECK(degree_limit(1) == 75);
  CHECK(core_size_limit(1) == 77);
  CHECK(core_size_limit(0) == -1);
  CHECK(core_size_limit(2) == 2 * 100 + 5);
}

TEST_CASE("degree gate") {
  std::vector<Point> blob;
  for (int i = 0; i < 52; ++i) blob.emplace_back(0.001 * i, 0.0);
  CHECK_FALSE(degree_gate(acyc(blob, 0.5, 0)));
  CHECK(degree_gate(acyc(fixtures::collinear(10, 1.5), 0.5, 0)));

  // Star: center plus leaves on concentric rings, all within distance 2.
  auto star = [](int leaves) {
    std::vector<Point> pts{{0, 0}};
    for (int i = 0; i < leaves; ++i) {
      const double t = 2.0 * std::acos(-1.0) * i / leaves;
      const double r = 0.5 + 1.4 * (i % 3) / 2.0;
      pts.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return pts;
  };
  CHECK_FALSE(degree_gate(acyc(star(76), 0.5, 1)));
  CHECK(degree_gate(acyc(star(75), 0.5, 1)));
}

TEST_CASE("prune") {
  CHECK(prune(acyc(fixtures::collinear(10, 1.5), 0.5, 1)).empty());
  auto hex = fixtures::regular_polygon(6, 1.9);
  auto with_tail = hex;
  with_tail.push_back(hex[0] * (1.0 + 1.5 / hex[0].norm()));
  with_tail.push_back(hex[0] * (1.0 + 3.0 / hex[0].norm()));
  CHECK(prune(acyc(with_tail, 0.5, 1)).size() == 6);
  auto two = hex;
  for (const auto& p : fixtures::regular_polygon(6, 1.9, {20, 0})) two.push_back(p);
  CHECK(prune(acyc(two, 0.5, 2)).size() == 12);
}

TEST_CASE("isolated cycles") {
  auto hex = compress(acyc(fixtures::regular_polygon(6, 1.9), 0.5, 1));
  REQUIRE_FALSE(hex.short_circuit_no);
  REQUIRE(hex.graph.cycles.size() == 1);
  CHECK(hex.graph.cycles[0].count_needed == 1);
  CHECK(hex.graph.cycles[0].cost_needed == doctest::Approx(0.1));
  CHECK(hex.k_remaining == 0);

  // A square of side 1.2 has diagonals below 2 (it is K4); the hexagon is a bare cycle.
  auto sq = compress(acyc(fixtures::regular_polygon(6, 1.2), 0.5, 2));
  REQUIRE(sq.graph.cycles.size() == 1);
  CHECK(sq.graph.cycles[0].count_needed == 2);
  CHECK(sq.graph.cycles[0].cost_needed == doctest::Approx(0.8));

  CHECK(compress(acyc(fixtures::regular_polygon(3, 0.9), 0.5, 3)).short_circuit_no);
  CHECK(compress(acyc(fixtures::regular_polygon(6, 1.2), 0.5, 1)).short_circuit_no);
  CHECK(compress(acyc(fixtures::regular_polygon(6, 1.9), 0.5, 0)).short_circuit_no);
}

TEST_CASE("theta graph contracts to parallel reducible edges") {
  const auto pts = theta();
  const auto cr = compress(acyc(pts, 0.5, 2));
  REQUIRE_FALSE(cr.short_circuit_no);
  const auto& g = cr.graph;
  CHECK(g.core == std::vector<int>{0, 1});
  REQUIRE(g.edges.size() == 3);
  for (const auto& e : g.edges) {
    CHECK(e.kind == EdgeKind::Reducible);
    CHECK(e.u == 0);
    CHECK(e.v == 1);
    CHECK(e.path.size() >= 3);
    CHECK(e.d_max.has_value());
  }
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
}

TEST_CASE("original edge between hubs and one-interior path annotation") {
  // Two triangles-of-paths sharing a direct hub-hub edge at d = 1.7.
  std::vector<Point> pts{{0, 0}, {1.7, 0}, {0.85, 1.6}, {0.85, -1.6}};
  const auto cr = compress(acyc(pts, 0.5, 2));
  REQUIRE_FALSE(cr.short_circuit_no);
  int originals = 0;
  for (const auto& e : cr.graph.edges) {
    if (e.kind == EdgeKind::Original) {
      ++originals;
      CHECK(e.d == doctest::Approx(1.7));
    } else {
      CHECK(e.path.size() == 1);
      CHECK_FALSE(e.d_max.has_value());
      CHECK(e.d_start == doctest::Approx(std::hypot(0.85, 1.6)));
    }
  }
  CHECK(originals == 1);
  for (int p : cr.graph.core) CHECK(cr.graph.degree(p) == 3);
}

TEST_CASE("size gate") {
  AnnotatedMultigraph empty;
  CHECK(size_gate(empty, 0));
  AnnotatedMultigraph g;
  for (int i = 0; i < 77; ++i) g.core.push_back(i);
  CHECK(size_gate(g, 1));
  g.core.push_back(77);
  CHECK_FALSE(size_gate(g, 1));
  g.core = {0};
  CHECK_FALSE(size_gate(g, 0));
}

TEST_CASE("degree is preserved and self-loops have two interior points") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 11);
    auto inst = acyc(fixtures::random_points(rng, n, 1.5 * std::sqrt(n)), 0.5, 3);
    const auto cr = compress(inst);
    if (cr.short_circuit_no) continue;
    const auto kept = prune(inst);
    const auto h = unit_disk_graph(inst.points, DiskModel::Open);
    for (int p : cr.graph.core) {
      int deg = 0;
      for (int q : h.neighbors(p)) deg += std::find(kept.begin(), kept.end(), q) != kept.end();
      CHECK(cr.graph.degree(p) == deg);
      CHECK(deg >= 3);
    }
    for (const auto& e : cr.graph.edges) {
      CHECK(e.u <= e.v);
      if (e.self_loop()) CHECK(e.path.size() >= 2);
    }
  }
}
