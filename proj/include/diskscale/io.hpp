#pragma once

#include "diskscale/model.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diskscale {

/// Schema or syntax error; the message starts with the line or field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance parse_instance(std::string_view text);

/// Canonical form: keys problem, alpha, k, mu, points, planted in that order,
/// reals with 17 significant digits.
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// {answer, count, cost, shrunk, radii, note}; witness fields only on yes.
std::string serialize_verdict(const Verdict& v);

/// Witness back out of a serialized verdict; throws ParseError when absent.
Solution parse_verdict_witness(std::string_view text);

struct GenerateParams {
  std::string kind = "random";  // random | path | cycle | grid-cluster | planted
  Problem problem = Problem::ShrinkIndependence;
  int n = 12;
  double box = 6.0;      // random: side of the square
  double spacing = 1.9;  // path, cycle: neighbor distance; grid-cluster: cluster pitch
  int clusters = 4;      // grid-cluster
  double alpha = 0.5;
  int k = 1;
  std::optional<double> mu;
  std::uint64_t seed = 1;
};

/// Deterministic for a fixed seed: random coordinates are integers divided by 100.
/// `planted` places k far-apart gadgets with a known optimum recorded in
/// Instance::planted (independence: pairs at 1.8; acyclicity: triangles of side 1.8).
Instance generate(const GenerateParams& params);

/// SVG 1.1: one layer of unit circles, one of the assigned radii, and the
/// edges of the resulting graph.
std::string render_svg(const Instance& inst, const Solution* sol = nullptr);

}  // namespace diskscale
