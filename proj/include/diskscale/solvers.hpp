#pragma once

#include "diskscale/compress_acyc.hpp"
#include "diskscale/model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace diskscale {

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_points = 16;
  int max_edges = 18;  // acyclicity only
};

/// Brute force over every S with |S| <= k. Min variant: one LP per S.
/// optimum_cost / optimum_count are reported even when the answer is no.
Verdict oracle_independence(const Instance& inst, const OracleOptions& opts = {});

struct FptStats {
  long long guesses = 0;
  int kernel_size = 0;
};

/// Kernelize, then one LP per S' within T with |S'| <= k.
Verdict fpt_min_independence(const Instance& inst, FptStats* stats = nullptr);

/// Cardinality variant: kernel plus the forced-set vertex cover reduction.
/// Min variant: forwards to fpt_min_independence.
Verdict fpt_independence(const Instance& inst, FptStats* stats = nullptr);

/// Brute force for acyclicity (default caps 12 points, 18 edges).
Verdict oracle_acyclicity(const Instance& inst, OracleOptions opts = {.max_points = 12, .max_edges = 18});

struct AcyclicityStats {
  long long forests = 0;
  long long programs = 0;
};

/// Compression followed by forest guessing with one LP per guess.
Verdict fpt_acyclicity(const Instance& inst, AcyclicityStats* stats = nullptr);

struct ConnectivityOptions {
  long long node_cap = 1000000;
};

/// 9(4/alpha + 1)^2 + 9 + k.
double connectivity_degree_threshold(double alpha, int k);

/// marked[p] iff shrinking p alone (all others unit) disconnects G(P, r).
std::vector<bool> unshrinkable_points(const Instance& inst);

Verdict solve_connectivity(const Instance& inst, const ConnectivityOptions& opts = {});

}  // namespace diskscale
