// Test-only oracles, kept independent of the library's production paths:
// the matrix exponential by truncated Taylor series and isomorphism-class
// counting by labeled brute force with a max-string reduction (the library
// minimizes, so agreement is meaningful).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "walkent/graph.hpp"

namespace oracles {

/// Sum of beta^k A^k / k! until the next term is negligible against the
/// running trace.
inline walkent::Matrix series_expm(const walkent::Matrix& a, double beta) {
  const auto n = a.rows();
  walkent::Matrix sum = walkent::Matrix::Identity(n, n);
  walkent::Matrix term = walkent::Matrix::Identity(n, n);
  for (int k = 1; k < 512; ++k) {
    term = (term * a * (beta / k)).eval();
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-16 * sum.trace()) break;
  }
  return sum;
}

/// Labeled brute force: every adjacency bitmask, connectivity by union of
/// reachable sets, class key = maximal bitmask over all permutations.
inline std::size_t count_connected_classes(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::vector<int> perm(n);
  std::unordered_set<std::uint32_t> classes;
  std::vector<std::uint32_t> pair_index(static_cast<std::size_t>(n) * n, 0);
  for (int b = 0; b < bits; ++b) {
    pair_index[pairs[b].first * n + pairs[b].second] = b;
    pair_index[pairs[b].second * n + pairs[b].first] = b;
  }

  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    // connectivity
    std::uint32_t reach = 1, frontier = 1;
    auto row = [&](int v) {
      std::uint32_t r = 0;
      for (int w = 0; w < n; ++w)
        if (w != v && ((mask >> pair_index[v * n + w]) & 1u)) r |= 1u << w;
      return r;
    };
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u) next |= row(v);
      next &= ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != (1u << n) - 1) continue;

    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = 0;
    do {
      std::uint32_t relabeled = 0;
      for (int b = 0; b < bits; ++b)
        if ((mask >> pair_index[perm[pairs[b].first] * n + perm[pairs[b].second]]) & 1u)
          relabeled |= 1u << b;
      best = std::max(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace oracles
