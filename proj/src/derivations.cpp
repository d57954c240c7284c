#include "gnl/derivations.hpp"

#include "gnl/errors.hpp"

namespace gnl {

namespace {

using BracketTable = std::vector<std::vector<SparseVec>>;

BracketTable dense_table(const StructureConstants& L) {
  const std::size_t n = L.dim();
  BracketTable t(n, std::vector<SparseVec>(n));
  for (const auto& [ij, val] : L.table()) {
    const auto [i, j] = ij;
    t[i][j] = val;
    for (const auto& [k, q] : val) t[j][i][k] = -q;
  }
  return t;
}

void accumulate(std::map<std::size_t, Rational>& row, std::size_t col, const Rational& q) {
  auto [it, inserted] = row.try_emplace(col, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) row.erase(it);
  }
}

}  // namespace

bool is_derivation(const StructureConstants& L, const RatMatrix& D) {
  const std::size_t n = L.dim();
  if (D.rows() != n || D.cols() != n) throw InputError("derivation matrix has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec lhs(n);
      for (const auto& [l, q] : L.bracket_basis(i, j)) {
        for (std::size_t k = 0; k < n; ++k) lhs[k] += q * D(k, l);
      }
      const RatVec rhs1 = bracket(L, D.col(i), unit_vector(n, j));
      const RatVec rhs2 = bracket(L, unit_vector(n, i), D.col(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] != rhs1[k] + rhs2[k]) return false;
      }
    }
  }
  return true;
}

LeibnizSize leibniz_size(const StructureConstants& L) {
  const std::size_t n = L.dim();
  return {n * n, n * (n - 1) / 2 * n};
}

DerivationBasis derivation_space(const StructureConstants& L) {
  const std::size_t n = L.dim();
  const BracketTable br = dense_table(L);
  FractionFreeEchelon ech(n * n);
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Coordinate k of D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j].
      std::map<std::size_t, std::map<std::size_t, Rational>> rows;
      for (const auto& [l, q] : br[i][j]) {
        for (std::size_t k = 0; k < n; ++k) accumulate(rows[k], var(k, l), q);
      }
      for (std::size_t l = 0; l < n; ++l) {
        for (const auto& [k, q] : br[l][j]) accumulate(rows[k], var(l, i), -q);
        for (const auto& [k, q] : br[i][l]) accumulate(rows[k], var(l, j), -q);
      }
      for (const auto& [k, row] : rows) {
        if (!row.empty()) ech.insert(to_int_row(row));
      }
    }
  }
  DerivationBasis out;
  out.dim = n;
  for (const auto& v : ech.nullspace()) {
    RatMatrix D(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) D(r, c) = v[var(r, c)];
    }
    out.elements.push_back(std::move(D));
  }
  return out;
}

RatMatrix commutator(const RatMatrix& D, const RatMatrix& E) { return D * E - E * D; }

RatMatrix grading_derivation(const StructureConstants& L, const Grading& G) {
  if (G.vars() != 1) throw InputError("grading derivation needs a single-variable grading");
  require_valid(L, G);
  RatMatrix D(L.dim(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) D(i, i) = Rational(static_cast<unsigned long>(G.degree(i)[0]));
  return D;
}

SpectrumCheck spectrum_check(const StructureConstants& L, const RatMatrix& D) {
  const std::size_t n = L.dim();
  SpectrumCheck out;
  out.derivation = is_derivation(L, D);
  const RatMatrix I = RatMatrix::identity(n);
  const RatMatrix m1 = D - I;
  const RatMatrix m2 = D - I.scaled(2);
  const RatMatrix m3 = D - I.scaled(3);
  out.diagonalizable_123 = (m1 * m2 * m3).is_zero();
  out.multiplicities = {n - rank(m1), n - rank(m2), n - rank(m3)};
  return out;
}

namespace family {

RatMatrix lift_gl(const Layout& lay, const RatMatrix& A) {
  const std::size_t n = lay.n;
  if (A.rows() != n || A.cols() != n) throw InputError("gl(E) element must be n x n");
  RatMatrix D(lay.dim, lay.dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      D(lay.e[i], lay.e[j]) = A(i, j);
      D(lay.xs[i], lay.xs[j]) = A(i, j);
      D(lay.us[i], lay.us[j]) = A(i, j);
      D(lay.ys[i], lay.ys[j]) = A(i, j);
    }
  }
  // A e_i ^ e_j + e_i ^ A e_j.
  auto add_wedge = [&](std::size_t col, std::size_t k, std::size_t l, const Rational& q) {
    if (k == l || q == 0) return;
    const std::size_t row = lay.wedge_index(k, l);
    if (k < l) {
      D(row, col) += q;
    } else {
      D(row, col) -= q;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t col = lay.wedge_index(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        add_wedge(col, k, j, A(k, i));
        add_wedge(col, i, k, A(k, j));
      }
    }
  }
  return D;
}

bool maps_e_into_w(const Layout& lay, const RatMatrix& D) {
  for (auto r : lay.e) {
    for (auto c : lay.e) {
      if (D(r, c) != 0) return false;
    }
  }
  return true;
}

LeviSplit levi_split(const Built& built, const RatMatrix& D) {
  const Layout& lay = built.layout;
  if (!is_derivation(built.algebra, D)) throw InputError("levi_split: input is not a derivation");
  RatMatrix A(lay.n, lay.n);
  for (std::size_t i = 0; i < lay.n; ++i) {
    for (std::size_t j = 0; j < lay.n; ++j) A(i, j) = D(lay.e[i], lay.e[j]);
  }
  RatMatrix lifted = lift_gl(lay, A);
  RatMatrix residual = D - lifted;
  if (!maps_e_into_w(lay, residual)) throw std::logic_error("levi_split: residual does not map E into W");
  return {std::move(A), std::move(lifted), std::move(residual)};
}

bool check_triangular(const Layout& lay, const RatMatrix& D1) {
  if (!maps_e_into_w(lay, D1)) throw InputError("check_triangular: D does not map E into W");
  for (std::size_t r = 0; r < lay.dim; ++r) {
    for (std::size_t c = r + 1; c < lay.dim; ++c) {
      if (D1(r, c) != 0) return false;
    }
  }
  return true;
}

bool check_diagonal_relations(const Layout& lay, const RatMatrix& D1) {
  if (!maps_e_into_w(lay, D1)) throw InputError("check_diagonal_relations: D does not map E into W");
  auto lam = [&](std::size_t v) { return D1(v, v); };
  for (auto e : lay.e) {
    if (lam(e) != 0) return false;
  }
  const Rational base = lam(lay.a);
  const Rational twice = base * 2;
  const Rational thrice = base * 3;
  return lam(lay.b) == base && lam(lay.x) == base && lam(lay.u) == twice && lam(lay.y) == twice &&
         lam(lay.c) == twice && lam(lay.f) == thrice && lam(lay.h) == thrice;
}

DerivationStructure analyze_derivations(const Built& built, const DerivationBasis& der) {
  const Layout& lay = built.layout;
  const std::size_t N = lay.dim;
  auto flat = [&](const RatMatrix& m) {
    RatVec v;
    v.reserve(N * N);
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) v.push_back(m(r, c));
    }
    return v;
  };
  DerivationStructure out;
  out.der_dim = der.elements.size();
  out.levi = out.triangular = out.diagonal = true;
  std::vector<RatVec> all, lifted, residual;
  for (const auto& D : der.elements) {
    const LeviSplit s = levi_split(built, D);
    out.levi = out.levi && is_derivation(built.algebra, s.lifted) && is_derivation(built.algebra, s.residual);
    out.triangular = out.triangular && check_triangular(lay, s.residual);
    out.diagonal = out.diagonal && check_diagonal_relations(lay, s.residual);
    all.push_back(flat(D));
    lifted.push_back(flat(s.lifted));
    residual.push_back(flat(s.residual));
  }
  const Subspace span_all = Subspace::span(N * N, all);
  const Subspace span_lifted = Subspace::span(N * N, lifted);
  const Subspace span_res = Subspace::span(N * N, residual);
  out.gl_dim = span_lifted.dim();
  out.direct_sum = span_lifted.intersection_dim(span_res) == 0 && span_lifted + span_res == span_all;
  return out;
}

}  // namespace family

}  // namespace gnl
