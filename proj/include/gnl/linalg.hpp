#pragma once

// Exact rational linear algebra.
//
// Elimination is fraction-free: rows are scaled to primitive integer vectors
// and combined as a*r - b*p, then divided by their content. Rational values
// only appear when a reduced echelon form is read out.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gnl/bigpoly.hpp"

namespace gnl {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntRow = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by column

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;
  bool is_zero() const;

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Primitive integer row proportional to v (zero entries dropped).
IntRow to_int_row(const RatVec& v);
IntRow to_int_row(const std::map<std::size_t, Rational>& v);

/// Incremental row echelon form over the integers.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(std::size_t cols);

  /// Reduces the row against the current pivots; returns true if it was
  /// independent (and is now stored as a new pivot row).
  bool insert(IntRow row);
  bool insert(const RatVec& row) { return insert(to_int_row(row)); }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  std::vector<std::size_t> pivot_columns() const;

  /// Reduced row echelon form: one row per pivot, ascending pivot column,
  /// leading entry 1, zeros in every other pivot column.
  std::vector<RatVec> reduced_rows() const;

  /// Basis of {v : M v = 0} where M is the matrix of inserted rows; one
  /// vector per free column.
  std::vector<RatVec> nullspace() const;

 private:
  using SparseRat = std::map<std::size_t, Rational>;
  std::vector<SparseRat> sparse_rref() const;

  std::size_t cols_;
  std::map<std::size_t, IntRow> pivots_;
};

/// A linear subspace of Q^n stored as its reduced row echelon basis, which
/// makes equality a plain comparison.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<RatVec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  /// Dimension of the intersection, via dim U + dim V - dim(U + V).
  std::size_t intersection_dim(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_;
  std::vector<RatVec> basis_;
};

Subspace kernel(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Throws InputError when m is singular or not square.
RatMatrix inverse(const RatMatrix& m);

RatVec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVec& v);

}  // namespace gnl
