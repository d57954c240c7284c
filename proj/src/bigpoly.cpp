#include "gnl/bigpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "gnl/errors.hpp"

namespace gnl {

namespace {

std::uint64_t checked_mul_add(std::uint64_t base, std::uint64_t m, std::uint64_t k) {
  std::uint64_t prod = 0;
  std::uint64_t sum = 0;
  if (__builtin_mul_overflow(m, k, &prod) || __builtin_add_overflow(base, prod, &sum)) {
    throw CapacityError("exponent overflow");
  }
  return sum;
}

ExpVec scaled(const ExpVec& alpha, std::uint64_t k) {
  ExpVec out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = checked_mul_add(0, alpha[i], k);
  return out;
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("GNL_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_terms = static_cast<std::size_t>(v);
  }
  return limits;
}

bool is_zero_vec(const ExpVec& e) {
  return std::all_of(e.begin(), e.end(), [](std::uint64_t v) { return v == 0; });
}

void check_factors(const FactorList& factors, std::size_t d) {
  for (const auto& f : factors) {
    if (f.exponent.size() != d) throw InputError("factor exponent has wrong length");
    if (is_zero_vec(f.exponent)) throw InputError("factor exponent must be nonzero");
    if (f.multiplicity == 0) throw InputError("factor multiplicity must be positive");
  }
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::size_t d) : d_(d) {
  if (d == 0) throw InputError("polynomial needs at least one variable");
}

MultiPoly::MultiPoly(std::size_t d, Terms terms) : MultiPoly(d) {
  for (auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::one(std::size_t d) {
  MultiPoly p(d);
  p.add_term(ExpVec(d, 0), 1);
  return p;
}

MultiPoly MultiPoly::monomial(const ExpVec& e, const BigInt& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

BigInt MultiPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const ExpVec& e, const BigInt& c) {
  if (e.size() != d_) throw InputError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t MultiPoly::degree_in(std::size_t var) const {
  std::uint64_t deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.at(var));
  return deg;
}

MultiPoly binomial_pow(const ExpVec& alpha, std::uint64_t m) {
  if (alpha.empty() || is_zero_vec(alpha)) throw InputError("binomial_pow: exponent must be nonzero");
  if (m == 0) throw InputError("binomial_pow: multiplicity must be positive");
  MultiPoly p(alpha.size());
  BigInt c = 1;
  for (std::uint64_t k = 0; k <= m; ++k) {
    p.add_term(scaled(alpha, k), (k % 2 == 0) ? BigInt(c) : BigInt(-c));
    c *= (m - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return p;
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q, const Limits& limits) {
  if (p.vars() != q.vars()) throw InputError("mul: variable counts differ");
  const std::size_t d = p.vars();
  MultiPoly::Terms acc;
  ExpVec e(d);
  BigInt prod;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < d; ++i) e[i] = checked_mul_add(ep[i], eq[i], 1);
      mpz_mul(prod.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(e, prod);
      if (!inserted) it->second += prod;
      if (acc.size() > limits.max_terms) {
        throw CapacityError("product exceeds the term limit of " + std::to_string(limits.max_terms) +
                            " (set GNL_MAX_TERMS to raise it)");
      }
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return MultiPoly(d, std::move(acc));
}

MultiPoly expand(const FactorList& factors, std::size_t d, const Limits& limits) {
  check_factors(factors, d);
  MultiPoly acc = MultiPoly::one(d);
  for (const auto& f : factors) acc = mul(acc, binomial_pow(f.exponent, f.multiplicity), limits);
  return acc;
}

BigInt length(const MultiPoly& p) {
  BigInt total = 0;
  for (const auto& [e, c] : p.terms()) total += abs(c);
  return total;
}

MultiPoly substitute_last(const MultiPoly& p, std::uint64_t m) {
  const std::size_t d = p.vars();
  if (d < 2) throw InputError("substitute_last needs at least two variables");
  MultiPoly out(d - 1);
  ExpVec e(d - 1);
  for (const auto& [src, c] : p.terms()) {
    e[0] = checked_mul_add(src[0], m, src[d - 1]);
    for (std::size_t i = 1; i + 1 < d; ++i) e[i] = src[i];
    out.add_term(e, c);
  }
  return out;
}

// ---------------------------------------------------------------- DensePoly

DensePoly::DensePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::one() { return DensePoly({BigInt(1)}); }

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void DensePoly::mul_binomial(std::uint64_t step, std::uint64_t times) {
  if (step == 0) throw InputError("mul_binomial: step must be positive");
  if (coeffs_.empty() || times == 0) return;
  coeffs_.reserve(coeffs_.size() + step * times);
  for (std::uint64_t t = 0; t < times; ++t) {
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + step);
    for (std::size_t i = old + step - 1; i >= step; --i) {
      mpz_sub(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), coeffs_[i - step].get_mpz_t());
    }
  }
  trim();
}

DensePoly dense_binomial_pow(std::uint64_t step, std::uint64_t m) {
  if (step == 0) throw InputError("dense_binomial_pow: step must be positive");
  std::vector<BigInt> coeffs(step * m + 1);
  BigInt c = 1;
  for (std::uint64_t k = 0; k <= m; ++k) {
    coeffs[k * step] = (k % 2 == 0) ? BigInt(c) : BigInt(-c);
    c *= (m - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return DensePoly(std::move(coeffs));
}

DensePoly mul(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), p[i].get_mpz_t(), q[j].get_mpz_t());
    }
  }
  return DensePoly(std::move(out));
}

BigInt length(const DensePoly& p) {
  BigInt total = 0;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) >= 0) {
      total += c;
    } else {
      total -= c;
    }
  }
  return total;
}

DensePoly to_dense(const MultiPoly& p) {
  if (p.vars() != 1) throw InputError("to_dense needs a univariate polynomial");
  std::vector<BigInt> coeffs(p.is_zero() ? 0 : p.degree_in(0) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return DensePoly(std::move(coeffs));
}

MultiPoly to_multi(const DensePoly& p) {
  MultiPoly out(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term({i}, p[i]);
  return out;
}

BigInt staircase_length(const FactorList& factors) {
  check_factors(factors, 1);
  FactorList sorted = factors;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Factor& a, const Factor& b) { return a.exponent[0] < b.exponent[0]; });

  DensePoly folded = DensePoly::one();
  FactorList pending;
  std::uint64_t degree = 0;
  std::uint64_t doublings = 0;
  for (const auto& f : sorted) {
    const std::uint64_t step = f.exponent[0];
    if (step > degree) {
      pending.push_back(f);
      doublings += f.multiplicity;
    } else {
      for (const auto& p : pending) folded.mul_binomial(p.exponent[0], p.multiplicity);
      pending.clear();
      doublings = 0;
      folded.mul_binomial(step, f.multiplicity);
    }
    degree = checked_mul_add(degree, step, f.multiplicity);
  }
  BigInt result = length(folded);
  mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), doublings);
  return result;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool constant = is_zero_vec(e);
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x";
      if (p.vars() > 1) os << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace gnl
