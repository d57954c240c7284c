#pragma once

// The three-step nilpotent family n(n): basis E, a, b, x | u, y, L2E, c, X |
// U, Y, f, h, with the canonical grading 1 | 2 | 3.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"

namespace gnl::family {

/// Basis indices of every block, in the ordered basis B1 u B2 u B3.
struct Layout {
  std::size_t n = 0;
  std::vector<std::size_t> e;          // e_1..e_n
  std::size_t a = 0, b = 0, x = 0;
  std::size_t u = 0, y = 0;
  std::vector<std::size_t> wedge;      // e_i^e_j, lexicographic i < j
  std::size_t c = 0;
  std::vector<std::size_t> xs, us, ys;  // x_i, u_i, y_i
  std::size_t f = 0, h = 0;
  std::size_t dim = 0;

  /// Position of e_i^e_j (0-based, i < j) in `wedge`.
  std::size_t wedge_slot(std::size_t i, std::size_t j) const;
  /// Index of e_i^e_j in the basis (0-based i != j); the sign of e_j^e_i is
  /// the caller's concern.
  std::size_t wedge_index(std::size_t i, std::size_t j) const;

  /// Basis vectors outside E, i.e. the complement W.
  std::vector<std::size_t> w_indices() const;
  /// Indices of the three layers of the canonical grading.
  std::vector<std::size_t> layer(int k) const;
};

Layout layout(std::size_t n);

struct Built {
  StructureConstants algebra;
  Grading grading;
  Layout layout;
};

/// Constructs n(n) with its canonical grading. When `check` is set, asserts
/// Jacobi, nilpotency class 3, grading validity and the center dimension.
Built build(std::size_t n, bool check = true);

struct Dims {
  std::uint64_t d1, d2, d3, z, z2, d2_0, d2_1;
  bool operator==(const Dims&) const = default;
};

/// Closed-form block dimensions.
Dims dims(std::uint64_t n);

/// Dimensions measured on the built algebra: layer sizes, the center, the
/// center inside layer 2, and the candidate reading of d2_0 / d2_1
/// (n_2 modulo [n,n], and the non-central part of n_2 inside [n,n]).
Dims measured_dims(const Built& built);

/// Change of basis on the whole algebra induced by a basis change on E whose
/// new vectors are the columns of P.
RatMatrix induced_basis(const Layout& lay, const RatMatrix& P);

/// True iff the bracket table in the induced basis equals the original one.
/// Throws InputError for a singular P.
bool rebase_check(std::size_t n, const RatMatrix& P);

/// Weights of the single-variable fine grading: 1/2/3 on the a,b,x / u,y,c /
/// f,h layers and super-increasing t_i on e_i.
std::vector<std::uint64_t> fine_weights(std::size_t n);
Grading fine_grading(std::size_t n);

}  // namespace gnl::family
