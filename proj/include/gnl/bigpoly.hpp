#pragma once

// Exact integer polynomials: sparse multivariate and dense univariate.
//
// Coefficients are GMP integers throughout. A MultiPoly never stores a zero
// coefficient; a DensePoly never has a zero leading coefficient.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gnl {

using BigInt = mpz_class;
using ExpVec = std::vector<std::uint64_t>;

/// Default cap on the number of stored terms of a sparse product.
inline constexpr std::size_t kDefaultMaxTerms = std::size_t{1} << 24;

struct Limits {
  std::size_t max_terms = kDefaultMaxTerms;

  /// Reads GNL_MAX_TERMS from the environment, falling back to the default.
  static Limits from_env();
};

bool is_zero_vec(const ExpVec& e);

/// One factor (1 - x^exponent)^multiplicity.
struct Factor {
  ExpVec exponent;
  std::uint64_t multiplicity = 1;

  bool operator==(const Factor&) const = default;
};

using FactorList = std::vector<Factor>;

/// Throws InputError unless every factor has a nonzero exponent of length d
/// and positive multiplicity.
void check_factors(const FactorList& factors, std::size_t d);

class MultiPoly {
 public:
  using Terms = std::map<ExpVec, BigInt>;

  explicit MultiPoly(std::size_t d = 1);
  MultiPoly(std::size_t d, Terms terms);

  static MultiPoly one(std::size_t d);
  static MultiPoly monomial(const ExpVec& e, const BigInt& c);

  std::size_t vars() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at e; zero when e is not in the support.
  BigInt coeff(const ExpVec& e) const;

  /// Adds c·x^e, dropping the term if it cancels.
  void add_term(const ExpVec& e, const BigInt& c);

  /// Degree in variable `var` over the support (0 for the zero polynomial).
  std::uint64_t degree_in(std::size_t var) const;

  bool operator==(const MultiPoly&) const = default;

 private:
  std::size_t d_;
  Terms terms_;
};

/// (1 - x^alpha)^m expanded directly from signed binomial coefficients.
MultiPoly binomial_pow(const ExpVec& alpha, std::uint64_t m);

MultiPoly mul(const MultiPoly& p, const MultiPoly& q, const Limits& limits = {});

/// Fully expanded product of the factor list.
MultiPoly expand(const FactorList& factors, std::size_t d, const Limits& limits = {});

/// Sum of absolute values of the coefficients.
BigInt length(const MultiPoly& p);

/// p(x_1, ..., x_{d-1}, x_1^m). Requires d >= 2.
MultiPoly substitute_last(const MultiPoly& p, std::uint64_t m);

/// Dense univariate polynomial, coefficient i is the coefficient of x^i.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<BigInt> coeffs);

  static DensePoly one();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  /// In place multiplication by (1 - x^step)^times, one shifted difference
  /// pass per power.
  void mul_binomial(std::uint64_t step, std::uint64_t times);

  bool operator==(const DensePoly&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// (1 - x^step)^m as a dense polynomial.
DensePoly dense_binomial_pow(std::uint64_t step, std::uint64_t m);

/// Schoolbook product.
DensePoly mul(const DensePoly& p, const DensePoly& q);

BigInt length(const DensePoly& p);

DensePoly to_dense(const MultiPoly& p);
MultiPoly to_multi(const DensePoly& p);

/// Exact length of a univariate factor product without always expanding.
///
/// Factors are taken in order of increasing exponent. While the next exponent
/// exceeds the degree accumulated so far, the product's blocks stay disjoint
/// and the length just doubles per power; otherwise the pending factors are
/// materialized and the factor is folded in densely.
BigInt staircase_length(const FactorList& factors);

/// Human-readable rendering, e.g. "1 - 2*x1 + x1^2*x2".
std::string to_string(const MultiPoly& p);

}  // namespace gnl
