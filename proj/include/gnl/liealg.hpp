#pragma once

// Lie algebras given by structure constants over a labeled basis.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnl/linalg.hpp"

namespace gnl {

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVec = std::map<std::size_t, Rational>;

class StructureConstants {
 public:
  explicit StructureConstants(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require_index(const std::string& label) const;

  /// Sets [b_i, b_j] = value. Setting (j, i) stores the negation; i == j is
  /// only allowed with a zero value.
  void set_bracket(std::size_t i, std::size_t j, const SparseVec& value);

  /// [b_i, b_j] in coordinates; antisymmetry is applied on lookup.
  SparseVec bracket_basis(std::size_t i, std::size_t j) const;

  /// Stored brackets keyed by (i, j) with i < j; zero brackets are absent.
  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& table() const { return table_; }

  /// Same dimension and identical brackets (labels are not compared).
  bool same_table(const StructureConstants& other) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> table_;
};

/// Bilinear extension of the bracket to coordinate vectors.
RatVec bracket(const StructureConstants& L, const RatVec& v, const RatVec& w);

/// Triples i < j < k whose Jacobi sum is nonzero.
std::vector<std::array<std::size_t, 3>> check_jacobi(const StructureConstants& L);

/// Adjoint matrix of basis vector i: column j holds [b_i, b_j].
RatMatrix adjoint(const StructureConstants& L, std::size_t i);

/// Elements commuting with every basis vector.
Subspace center(const StructureConstants& L);

/// [U, V] spanned by brackets of the two bases.
Subspace bracket_span(const StructureConstants& L, const Subspace& u, const Subspace& v);

struct CentralSeries {
  std::vector<Subspace> terms;  // C^1 = L, C^2 = [L, L], ..., ending at the last nonzero term
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful only when nilpotent
};

CentralSeries lower_central_series(const StructureConstants& L);

/// Structure constants in the basis b'_j = sum_i P(i, j) b_i (columns of P).
/// Throws InputError if P is singular.
StructureConstants change_basis(const StructureConstants& L, const RatMatrix& P);

/// Some small algebras used by tests and examples.
StructureConstants abelian(std::size_t n);
/// Heisenberg algebra of dimension 2m+1: [e_i, f_i] = z.
StructureConstants heisenberg(std::size_t m);

}  // namespace gnl
