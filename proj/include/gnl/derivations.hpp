#pragma once

// Derivation algebras. A matrix D acts on column vectors: D(b_c) is column c.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnl/family.hpp"
#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"

namespace gnl {

/// D[b_i, b_j] == [D b_i, b_j] + [b_i, D b_j] for every pair.
bool is_derivation(const StructureConstants& L, const RatMatrix& D);

struct DerivationBasis {
  std::size_t dim = 0;                // dimension of the algebra
  std::vector<RatMatrix> elements;    // a basis of Der(L)
};

/// Exact basis of Der(L) from the kernel of the Leibniz system in the N^2
/// matrix entries.
DerivationBasis derivation_space(const StructureConstants& L);

/// Rough memory/size estimate for the Leibniz system, in unknowns and rows.
struct LeibnizSize {
  std::size_t unknowns;
  std::size_t equations;
};
LeibnizSize leibniz_size(const StructureConstants& L);

/// Commutator DE - ED.
RatMatrix commutator(const RatMatrix& D, const RatMatrix& E);

/// Diagonal map v -> deg(v) v of a single-variable grading.
RatMatrix grading_derivation(const StructureConstants& L, const Grading& G);

struct SpectrumCheck {
  bool derivation = false;
  bool diagonalizable_123 = false;     // (D-1)(D-2)(D-3) == 0
  std::array<std::size_t, 3> multiplicities{};  // dims of the 1, 2, 3 eigenspaces
};

SpectrumCheck spectrum_check(const StructureConstants& L, const RatMatrix& D);

namespace family {

/// The derivation D_A acting by A on E, X, U, Y and by the induced map on
/// the wedge block; zero on a, b, x, u, y, c, f, h.
RatMatrix lift_gl(const Layout& lay, const RatMatrix& A);

struct LeviSplit {
  RatMatrix A;        // E-block of D
  RatMatrix lifted;   // D_A
  RatMatrix residual; // D - D_A, maps E into W
};

/// Splits a derivation of n(n). Throws InputError for non-derivations.
LeviSplit levi_split(const Built& built, const RatMatrix& D);

/// True iff D maps E into W (the E-block vanishes).
bool maps_e_into_w(const Layout& lay, const RatMatrix& D);

/// Lower triangular in the ordered basis. Requires maps_e_into_w.
bool check_triangular(const Layout& lay, const RatMatrix& D1);

/// lambda_e = 0; lambda_a = lambda_b = lambda_x; lambda_u = lambda_y =
/// lambda_c = 2 lambda_a; lambda_f = lambda_h = 3 lambda_a.
bool check_diagonal_relations(const Layout& lay, const RatMatrix& D1);

struct DerivationStructure {
  std::size_t der_dim = 0;
  bool levi = false;        // every element splits as D_A + D_1, both derivations
  std::size_t gl_dim = 0;   // dimension of the span of the lifted parts
  bool direct_sum = false;  // lifted span + residual span = Der, meeting in 0
  bool triangular = false;  // every residual is lower triangular
  bool diagonal = false;    // every residual satisfies the diagonal relations
};

DerivationStructure analyze_derivations(const Built& built, const DerivationBasis& der);

}  // namespace family

}  // namespace gnl
