#pragma once

#include <algorithm>
#include <vector>

namespace diskscale {

/// Calls fn(subset) for every subset of {0..n-1} with size in [lo, hi], by
/// increasing size and lexicographically within a size. Stops early when fn
/// returns false.
template <typename Fn>
void for_each_subset(int n, int lo, int hi, Fn&& fn) {
  if (hi > n) hi = n;
  for (int s = std::max(lo, 0); s <= hi; ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      if (!fn(static_cast<const std::vector<int>&>(idx))) return;
      int i = s - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Sum over s <= k of C(n, s), saturating.
inline long long binomial_prefix(int n, int k) {
  long long total = 0, c = 1;
  for (int s = 0; s <= k && s <= n; ++s) {
    total += c;
    c = c * (n - s) / (s + 1);
  }
  return total;
}

}  // namespace diskscale
