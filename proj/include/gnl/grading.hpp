#pragma once

// Basis-aligned Z_+^d gradings, their associated polynomials, and the
// reduction of a multi-variable grading to a single variable that keeps the
// polynomial's length.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnl/bigpoly.hpp"
#include "gnl/liealg.hpp"

namespace gnl {

class Grading {
 public:
  /// degrees[i] is the degree vector of basis vector i; all must have length
  /// d and be nonzero.
  Grading(std::size_t d, std::vector<ExpVec> degrees);

  std::size_t vars() const { return d_; }
  std::size_t size() const { return degrees_.size(); }
  const ExpVec& degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<ExpVec>& degrees() const { return degrees_; }

  /// Factor list {(alpha, d_alpha)} in ascending order of alpha.
  FactorList factors() const;

  bool operator==(const Grading&) const = default;

 private:
  std::size_t d_;
  std::vector<ExpVec> degrees_;
};

/// Single-variable grading from integer weights.
Grading line_grading(const std::vector<std::uint64_t>& weights);

struct GradingViolation {
  std::size_t i;
  std::size_t j;
  std::size_t k;  // coordinate of [b_i, b_j] whose degree is not deg i + deg j
};

std::vector<GradingViolation> validate(const StructureConstants& L, const Grading& G);

/// Throws InputError describing the first violation, if any.
void require_valid(const StructureConstants& L, const Grading& G);

MultiPoly associated_polynomial(const StructureConstants& L, const Grading& G, const Limits& limits = {});

/// 1 + the largest x_1 exponent in the support of p. Requires d >= 2.
std::uint64_t min_safe_m(const MultiPoly& p);

/// 1 + sum over basis vectors of the first degree coordinate; an upper bound
/// for min_safe_m that needs no expansion.
std::uint64_t degree_bound_m(const Grading& G);

enum class CollapseStrategy { minimal, degree_bound, explicit_m };

struct CollapseResult {
  Grading grading;
  std::uint64_t m;
  std::optional<std::string> warning;
};

/// The grading with degrees (a_1 + m*a_d, a_2, ..., a_{d-1}).
Grading collapse_with(const Grading& G, std::uint64_t m);

/// One elimination of the last variable. `explicit_m` is only read for
/// CollapseStrategy::explicit_m.
CollapseResult collapse_once(const StructureConstants& L, const Grading& G, CollapseStrategy strategy,
                             std::uint64_t explicit_m = 0, const Limits& limits = {});

struct LineCollapse {
  Grading grading;
  std::vector<std::uint64_t> ms;
  BigInt length;
};

/// Collapses to d = 1 with the minimal strategy and checks the length is kept.
LineCollapse collapse_to_line(const StructureConstants& L, const Grading& G, const Limits& limits = {});

/// Reorders variables: new coordinate t takes old coordinate perm[t].
Grading permute_variables(const Grading& G, const std::vector<std::size_t>& perm);

}  // namespace gnl
