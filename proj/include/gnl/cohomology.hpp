#pragma once

// Chevalley-Eilenberg cohomology with trivial coefficients.
//
// Basis k-forms are k-subsets of the dual basis, stored as bitmasks and
// ranked in colexicographic order.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"

namespace gnl {

inline constexpr std::size_t kDefaultMaxCohomologyDim = 14;

struct BettiVector {
  std::vector<std::uint64_t> b;  // b_0 .. b_N
  std::uint64_t total = 0;
};

/// Sparse matrix of d_k : Lambda^k -> Lambda^{k+1}, stored by columns (one
/// column per basis k-form).
struct CochainMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, Rational>> columns;

  RatMatrix dense() const;
};

/// The k-subsets of {0..n-1} as bitmasks, in the order used for indexing.
std::vector<std::uint64_t> k_subsets(std::size_t n, std::size_t k);

CochainMap ce_differential(const StructureConstants& L, std::size_t k,
                           std::size_t max_dim = kDefaultMaxCohomologyDim);

/// Ranks of d_0 .. d_{N-1}.
std::vector<std::size_t> differential_ranks(const StructureConstants& L,
                                            std::size_t max_dim = kDefaultMaxCohomologyDim);

BettiVector betti(const StructureConstants& L, std::size_t max_dim = kDefaultMaxCohomologyDim);

struct BoundCheck {
  BettiVector betti;
  BigInt length;      // L(p) of the grading
  bool holds = false; // total betti >= length
  std::uint64_t center_dim = 0;
  bool trc_holds = false;  // total betti >= 2^{dim center}, informational
};

BoundCheck check_ds_bound(const StructureConstants& L, const Grading& G,
                          std::size_t max_dim = kDefaultMaxCohomologyDim, const Limits& limits = {});

}  // namespace gnl
