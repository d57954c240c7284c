#include "gnl/liealg.hpp"

#include "gnl/errors.hpp"

namespace gnl {

namespace {

void add_scaled(SparseVec& acc, const SparseVec& v, const Rational& s) {
  for (const auto& [k, q] : v) {
    auto [it, inserted] = acc.try_emplace(k, s * q);
    if (!inserted) {
      it->second += s * q;
      if (it->second == 0) acc.erase(it);
    }
  }
}

RatVec to_dense(const SparseVec& v, std::size_t n) {
  RatVec out(n);
  for (const auto& [k, q] : v) out[k] = q;
  return out;
}

}  // namespace

StructureConstants::StructureConstants(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty basis label");
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate basis label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> StructureConstants::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StructureConstants::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw InputError("unknown basis label '" + label + "'");
  return *idx;
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const SparseVec& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw InputError("bracket index out of range");
  SparseVec clean;
  for (const auto& [k, q] : value) {
    if (k >= n) throw InputError("bracket coefficient index out of range");
    if (q != 0) clean.emplace(k, q);
  }
  if (i == j) {
    if (!clean.empty()) throw InputError("[b, b] must be zero for '" + labels_[i] + "'");
    return;
  }
  if (i > j) {
    std::swap(i, j);
    for (auto& [k, q] : clean) q = -q;
  }
  if (clean.empty()) {
    table_.erase({i, j});
  } else {
    table_[{i, j}] = std::move(clean);
  }
}

SparseVec StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const bool flip = i > j;
  auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == table_.end()) return {};
  if (!flip) return it->second;
  SparseVec neg = it->second;
  for (auto& [k, q] : neg) q = -q;
  return neg;
}

bool StructureConstants::same_table(const StructureConstants& other) const {
  return dim() == other.dim() && table_ == other.table_;
}

RatVec bracket(const StructureConstants& L, const RatVec& v, const RatVec& w) {
  const std::size_t n = L.dim();
  if (v.size() != n || w.size() != n) throw InputError("bracket: vector length does not match dimension");
  SparseVec acc;
  for (const auto& [ij, val] : L.table()) {
    const auto [i, j] = ij;
    const Rational s = v[i] * w[j] - v[j] * w[i];
    if (s != 0) add_scaled(acc, val, s);
  }
  return to_dense(acc, n);
}

std::vector<std::array<std::size_t, 3>> check_jacobi(const StructureConstants& L) {
  const std::size_t n = L.dim();
  // [[b_i, b_j], b_k] for all i < j and k, from the stored brackets.
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k) {
    SparseVec acc;
    for (const auto& [l, q] : L.bracket_basis(i, j)) add_scaled(acc, L.bracket_basis(l, k), q);
    return acc;
  };
  std::vector<std::array<std::size_t, 3>> bad;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVec sum = nested(i, j, k);
        add_scaled(sum, nested(j, k, i), 1);
        add_scaled(sum, nested(k, i, j), 1);
        if (!sum.empty()) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

RatMatrix adjoint(const StructureConstants& L, std::size_t i) {
  const std::size_t n = L.dim();
  RatMatrix ad(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [k, q] : L.bracket_basis(i, j)) ad(k, j) = q;
  }
  return ad;
}

Subspace center(const StructureConstants& L) {
  // v is central iff sum_i v_i [b_i, b_j] = 0 for every j.
  const std::size_t n = L.dim();
  FractionFreeEchelon ech(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::size_t, SparseVec> rows;  // output coordinate k -> row over i
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, q] : L.bracket_basis(i, j)) rows[k][i] = q;
    }
    for (const auto& [k, row] : rows) ech.insert(to_int_row(row));
  }
  return Subspace::span(n, ech.nullspace());
}

Subspace bracket_span(const StructureConstants& L, const Subspace& u, const Subspace& v) {
  std::vector<RatVec> gens;
  for (const auto& a : u.basis()) {
    for (const auto& b : v.basis()) {
      RatVec c = bracket(L, a, b);
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  }
  return Subspace::span(L.dim(), gens);
}

CentralSeries lower_central_series(const StructureConstants& L) {
  const std::size_t n = L.dim();
  std::vector<RatVec> unit;
  for (std::size_t i = 0; i < n; ++i) unit.push_back(unit_vector(n, i));
  const Subspace whole = Subspace::span(n, unit);

  CentralSeries out;
  if (n == 0) {
    out.nilpotent = true;
    return out;
  }
  out.terms.push_back(whole);
  for (std::size_t step = 0; step <= n; ++step) {
    Subspace next = bracket_span(L, whole, out.terms.back());
    if (next.dim() == 0) {
      out.nilpotent = true;
      out.nilpotency_class = out.terms.size();
      return out;
    }
    if (next == out.terms.back()) return out;  // stabilized at a nonzero term
    out.terms.push_back(std::move(next));
  }
  return out;
}

StructureConstants change_basis(const StructureConstants& L, const RatMatrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw InputError("change_basis: matrix shape does not match dimension");
  const RatMatrix Pinv = inverse(P);
  StructureConstants out(L.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec old = bracket(L, P.col(i), P.col(j));
      if (is_zero(old)) continue;
      const RatVec coords = Pinv.apply(old);
      SparseVec sv;
      for (std::size_t k = 0; k < n; ++k) {
        if (coords[k] != 0) sv.emplace(k, coords[k]);
      }
      out.set_bracket(i, j, sv);
    }
  }
  return out;
}

StructureConstants abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return StructureConstants(labels);
}

StructureConstants heisenberg(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("f" + std::to_string(i));
  labels.push_back("z");
  StructureConstants L(labels);
  for (std::size_t i = 0; i < m; ++i) L.set_bracket(i, m + i, {{2 * m, Rational(1)}});
  return L;
}

}  // namespace gnl
