#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination or polynomial code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

/// Univariate product of (1 - x^w) over the weights, by direct convolution.
inline std::vector<mpz_class> expand_weights(const std::vector<std::uint64_t>& weights) {
  std::vector<mpz_class> p{1};
  for (auto w : weights) {
    std::vector<mpz_class> q(p.size() + w);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + w] -= p[i];
    }
    p = std::move(q);
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline mpz_class sum_abs(const std::vector<mpz_class>& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += abs(c);
  return s;
}

/// Rank by textbook Gaussian elimination over Q on a dense copy.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261018);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace oracle
