#include "doctest.h"

#include "gnl/errors.hpp"
#include "gnl/linalg.hpp"
#include "oracles.hpp"

using namespace gnl;

namespace {

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST_CASE("kernel examples") {
  CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
  CHECK(kernel(RatMatrix(2, 3)).dim() == 3);
  const RatMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
  const Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("reduced echelon form is canonical") {
  const Subspace a = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 3, 4}, {2, 4, 6}, {1, 1, 2}});
  CHECK(a == b);
  CHECK(a.basis()[0] == RatVec{1, 0, 1});
  CHECK(a.basis()[1] == RatVec{0, 1, 1});
  CHECK(a.contains(RatVec{3, 5, 8}));
  CHECK_FALSE(a.contains(RatVec{0, 0, 1}));
  CHECK(a.intersection_dim(Subspace::span(3, {{0, 0, 1}, {1, 0, 0}})) == 1);
}

TEST_CASE("rational entries") {
  RatMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 4);
  m(1, 1) = Rational(1, 2);
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(inverse(m), InputError);
  m(1, 1) = 1;
  const RatMatrix inv = inverse(m);
  CHECK(m * inv == RatMatrix::identity(2));
}

TEST_CASE("inverse of a permutation and a non-square matrix") {
  const RatMatrix p = mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(inverse(p) * p == RatMatrix::identity(3));
  CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), InputError);
}

TEST_CASE("property: fraction-free rank equals the dense rational oracle") {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(oracle::uniform(1, 7));
    const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 7));
    std::vector<std::vector<mpq_class>> dense(rows, std::vector<mpq_class>(cols));
    RatMatrix m(rows, cols);
    // Low-rank products make dependent rows common.
    const std::size_t inner = static_cast<std::size_t>(oracle::uniform(1, 4));
    std::vector<std::vector<long>> a(rows, std::vector<long>(inner)), b(inner, std::vector<long>(cols));
    for (auto& r : a) for (auto& v : r) v = oracle::uniform(-3, 3);
    for (auto& r : b) for (auto& v : r) v = oracle::uniform(-3, 3);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
        const mpq_class q(s, oracle::uniform(1, 4));
        dense[i][j] = q;
        m(i, j) = q;
        m(i, j).canonicalize();
        dense[i][j].canonicalize();
      }
    }
    CHECK(rank(m) == oracle::dense_rank(dense));
    const Subspace k = kernel(m);
    CHECK(k.dim() == cols - rank(m));
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  }
}
