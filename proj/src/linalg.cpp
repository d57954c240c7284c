#include "gnl/linalg.hpp"

#include <algorithm>

#include "gnl/errors.hpp"

namespace gnl {

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

RatVec RatMatrix::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product: shape mismatch");
  RatMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: shape mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + o.scaled(-1); }

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out = *this;
  for (auto& q : out.data_) q *= s;
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector product: shape mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

// ---------------------------------------------------------------- rows

namespace {

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

template <typename Range>
IntRow int_row_from(const Range& entries) {
  BigInt lcm = 1;
  for (const auto& [c, q] : entries) {
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow row;
  for (const auto& [c, q] : entries) {
    if (q == 0) continue;
    BigInt v = lcm / q.get_den();
    v *= q.get_num();
    row.emplace_back(c, std::move(v));
  }
  make_primitive(row);
  return row;
}

// out = a*r - b*p, merged by column.
IntRow combine(const BigInt& a, const IntRow& r, const BigInt& b, const IntRow& p) {
  IntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0;
  std::size_t j = 0;
  BigInt tmp;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(b * p[j].second));
      ++j;
    } else {
      mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), r[i].second.get_mpz_t());
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), p[j].second.get_mpz_t());
      if (tmp != 0) out.emplace_back(r[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntRow to_int_row(const RatVec& v) {
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] != 0) entries.emplace_back(c, v[c]);
  }
  return int_row_from(entries);
}

IntRow to_int_row(const std::map<std::size_t, Rational>& v) { return int_row_from(v); }

// ---------------------------------------------------------------- echelon

FractionFreeEchelon::FractionFreeEchelon(std::size_t cols) : cols_(cols) {}

bool FractionFreeEchelon::insert(IntRow row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  if (!row.empty() && row.back().first >= cols_) throw InputError("echelon: column out of range");
  make_primitive(row);
  BigInt a;
  BigInt b;
  BigInt g;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    const IntRow& piv = it->second;
    a = piv.front().second;
    b = row.front().second;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    row = combine(a, row, b, piv);
    make_primitive(row);
  }
  return false;
}

std::vector<std::size_t> FractionFreeEchelon::pivot_columns() const {
  std::vector<std::size_t> cols;
  cols.reserve(pivots_.size());
  for (const auto& [c, r] : pivots_) cols.push_back(c);
  return cols;
}

std::vector<FractionFreeEchelon::SparseRat> FractionFreeEchelon::sparse_rref() const {
  // Back substitution from the last pivot; rows already reduced are reused.
  std::map<std::size_t, SparseRat> done;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const IntRow& src = it->second;
    const BigInt& lead = src.front().second;
    SparseRat row;
    for (const auto& [c, v] : src) row.emplace(c, Rational(v, lead));
    for (auto& q : row) q.second.canonicalize();
    // Reduced rows are zero on every other pivot column, so subtracting them
    // never introduces new pivot entries.
    std::vector<std::size_t> to_clear;
    for (auto cit = std::next(row.begin()); cit != row.end(); ++cit) {
      if (done.count(cit->first) != 0) to_clear.push_back(cit->first);
    }
    for (const std::size_t col : to_clear) {
      const Rational factor = row.at(col);
      for (const auto& [c, v] : done.at(col)) {
        auto [pos, inserted] = row.try_emplace(c, -(factor * v));
        if (!inserted) pos->second -= factor * v;
      }
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseRat> out;
  out.reserve(done.size());
  for (auto& [c, r] : done) out.push_back(std::move(r));
  return out;
}

std::vector<RatVec> FractionFreeEchelon::reduced_rows() const {
  std::vector<RatVec> out;
  for (const auto& sparse : sparse_rref()) {
    RatVec v(cols_);
    for (const auto& [c, q] : sparse) v[c] = q;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVec> FractionFreeEchelon::nullspace() const {
  const auto rref = sparse_rref();
  std::vector<bool> is_pivot(cols_, false);
  std::vector<std::size_t> pivot_col;
  for (const auto& r : rref) {
    is_pivot[r.begin()->first] = true;
    pivot_col.push_back(r.begin()->first);
  }
  // Column view of the free entries of each pivot row.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_free(cols_);
  for (std::size_t k = 0; k < rref.size(); ++k) {
    for (const auto& [c, q] : rref[k]) {
      if (!is_pivot[c]) by_free[c].emplace_back(pivot_col[k], q);
    }
  }
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols_);
    v[f] = 1;
    for (const auto& [p, q] : by_free[f]) v[p] = -q;
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVec>& vectors) {
  FractionFreeEchelon ech(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InputError("span: vector has wrong length");
    ech.insert(v);
  }
  Subspace s(ambient);
  s.basis_ = ech.reduced_rows();
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (v.size() != ambient_) throw InputError("contains: vector has wrong length");
  RatVec r = v;
  for (const auto& b : basis_) {
    std::size_t lead = 0;
    while (b[lead] == 0) ++lead;
    if (r[lead] == 0) continue;
    const Rational f = r[lead];
    for (std::size_t c = lead; c < ambient_; ++c) {
      if (b[c] != 0) r[c] -= f * b[c];
    }
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const RatVec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InputError("subspace sum: ambient mismatch");
  std::vector<RatVec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - (*this + other).dim();
}

// ---------------------------------------------------------------- helpers

Subspace kernel(const RatMatrix& m) {
  FractionFreeEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return Subspace::span(m.cols(), ech.nullspace());
}

std::size_t rank(const RatMatrix& m) {
  FractionFreeEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse: matrix is not square");
  FractionFreeEchelon ech(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(2 * n);
    for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
    row[n + r] = 1;
    ech.insert(row);
  }
  const auto rref = ech.reduced_rows();
  const auto pivots = ech.pivot_columns();
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw InputError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rref[r][n + c];
  }
  return inv;
}

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace gnl
