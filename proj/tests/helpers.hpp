#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oraclegram/functions.hpp"
#include "oraclegram/linalg.hpp"

namespace oraclegram::testing {

// int64 twin of the exact types for hot exhaustive loops. Entries stay far
// below overflow: Bareiss intermediates are minors of the small matrices
// involved (Hadamard-bounded by ~9^6 * 6^3 here).
using MatrixXll = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline MatrixXll gamma_ll(const std::vector<const FunctionTable*>& subset) {
  const int k = static_cast<int>(subset.size());
  const int m = subset.front()->domain_size();
  MatrixXll g(k, k);
  for (int a = 0; a < k; ++a) {
    g(a, a) = m;
    for (int b = a + 1; b < k; ++b) {
      std::int64_t count = 0;
      for (int x = 0; x < m; ++x)
        if ((*subset[a])(x) == (*subset[b])(x)) ++count;
      g(a, b) = g(b, a) = count;
    }
  }
  return g;
}

// Rows are vectorized standard oracles; length (m n)^2 each.
inline MatrixXll stacked_standard_ll(const std::vector<const FunctionTable*>& subset) {
  const int k = static_cast<int>(subset.size());
  const int m = subset.front()->domain_size();
  const int n = subset.front()->range_size();
  const int d = m * n;
  MatrixXll rows = MatrixXll::Zero(k, d * d);
  for (int a = 0; a < k; ++a)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < n; ++y) {
        const int row = x * n + (y + (*subset[a])(x)) % n;
        const int col = x * n + y;
        rows(a, row * d + col) = 1;
      }
  return rows;
}

// Rows are vectorized minimal oracles (permutations only); length m^2.
inline MatrixXll stacked_minimal_ll(const std::vector<const FunctionTable*>& subset) {
  const int k = static_cast<int>(subset.size());
  const int m = subset.front()->domain_size();
  MatrixXll rows = MatrixXll::Zero(k, m * m);
  for (int a = 0; a < k; ++a)
    for (int x = 0; x < m; ++x) rows(a, (*subset[a])(x)*m + x) = 1;
  return rows;
}

// Rows are vectorized Q tensor I oracles; length m^4.
inline MatrixXll stacked_assisted_ll(const std::vector<const FunctionTable*>& subset) {
  const int k = static_cast<int>(subset.size());
  const int m = subset.front()->domain_size();
  const int d = m * m;
  MatrixXll rows = MatrixXll::Zero(k, d * d);
  for (int a = 0; a < k; ++a)
    for (int x = 0; x < m; ++x)
      for (int t = 0; t < m; ++t) {
        const int row = (*subset[a])(x)*m + t;
        const int col = x * m + t;
        rows(a, row * d + col) = 1;
      }
  return rows;
}

// Calls visit(indices) for every subset of {0..total-1} with size in
// [min_k, max_k], in lexicographic index order.
template <typename Visit>
void for_each_subset(int total, int min_k, int max_k, Visit&& visit) {
  std::vector<int> pick;
  for (int k = min_k; k <= std::min(total, max_k); ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      visit(static_cast<const std::vector<int>&>(pick));
      int i = k - 1;
      while (i >= 0 && pick[i] == total - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
}

inline FunctionTable random_function(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  std::vector<int> values(m);
  for (int& v : values) v = dist(rng);
  return make_function(m, n, values);
}

inline FunctionSet random_function_set(std::mt19937_64& rng, int m, int n, int k) {
  std::set<std::vector<int>> seen;
  std::vector<FunctionTable> members;
  while (static_cast<int>(members.size()) < k) {
    FunctionTable f = random_function(rng, m, n);
    if (seen.insert(f.values()).second) members.push_back(std::move(f));
  }
  return FunctionSet(std::move(members));
}

inline FunctionSet random_permutation_set(std::mt19937_64& rng, int m, int k) {
  std::set<std::vector<int>> seen;
  std::vector<FunctionTable> members;
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i;
  while (static_cast<int>(members.size()) < k) {
    std::shuffle(base.begin(), base.end(), rng);
    if (seen.insert(base).second) members.push_back(make_function(m, m, base));
  }
  return FunctionSet(std::move(members));
}

}  // namespace oraclegram::testing
