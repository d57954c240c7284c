#pragma once

// Exact integer checks of the length inequalities for n(n).
//
// Every normalized statement L(q / 2^k) < c is checked as L(q) < c * 2^k,
// using that the length is absolutely homogeneous.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gnl/bigpoly.hpp"

namespace gnl::verify {

inline constexpr const char* kToolVersion = "0.1.0";

struct Verdict {
  std::uint64_t n = 0;
  BigInt length;
  BigInt bound;
  bool holds = false;
  std::chrono::milliseconds elapsed{0};
};

/// (1-x)^{n+3} (1-x^2)^{n(n+1)/2+3} (1-x^3)^{2n+2}.
DensePoly three_part_polynomial(std::uint64_t n);

/// (1-x)^n (1-x^2)^{2n} (1-x^3)^{2n}: the numerator of p_n.
DensePoly pn_polynomial(std::uint64_t n);

BigInt pow2(std::uint64_t k);

/// L(three_part_polynomial(n)) < 2^{(n+4)(n+1)/2}.
Verdict check_trc3(std::uint64_t n);

/// L(pn_polynomial(n)) < 2^{4n-1}, i.e. L(p_n) < 1/2.
Verdict check_pn(std::uint64_t n);

struct TailCheck {
  BigInt value;          // 2 * L((1-x)^3 (1-x^3)^2)
  bool holds = false;    // value <= 64
  BigInt middle_length;  // L((1-x^2)^k) for the sample k
  std::uint64_t middle_k = 0;
  bool middle_holds = false;  // middle_length == 2^k, i.e. normalized length 1
};

TailCheck check_tail_constant(std::uint64_t middle_k = 20);

struct InductionCheck {
  std::uint64_t n = 0;
  std::uint64_t base = 30;
  bool identity_holds = false;       // q_n == q_base^5 * q_{n-5 base}
  BigInt length_n;                   // L(q_n)
  BigInt product_bound;              // L(q_base)^5 * L(q_{n-5 base})
  bool submultiplicative = false;    // length_n <= product_bound
  bool base_cases = false;           // L(q_m) < 2^{4m-1} for m = base and m = n - 5 base
  bool chain_holds = false;          // product_bound < 2^{4n-6}, i.e. L(p_n) < 1/64
  bool full_bound = false;           // product_bound * 2^{n(n-3)/2+3} * 32 < 2^z
  bool holds = false;
};

/// The induction step q_n = q_base^5 q_{n - 5 base}. Needs n > 5 base + 30,
/// i.e. n > 180 for the default base; throws InputError otherwise.
///
/// With base 30 the identity and submultiplicativity hold but L(p_30) is
/// slightly above 1/2, so the base case and the 1/64 chain fail. Base 31
/// closes the chain for n >= 186.
InductionCheck check_induction_chain(std::uint64_t n, std::uint64_t base = 30);

struct FineCheck {
  std::uint64_t n = 0;
  bool verified = false;  // false when n is beyond the exact-expansion scale
  BigInt length;
  BigInt bound;           // 2^z
  bool holds = false;     // length > bound
};

inline constexpr std::uint64_t kMaxFineN = 3;

/// Exact length of the fine grading of n(n) against 2^z. For n above
/// `max_n` nothing is computed and `verified` stays false.
FineCheck check_fine_exceeds(std::uint64_t n, std::uint64_t max_n = kMaxFineN, const Limits& limits = {});

enum class Claim { trc3, pn };

std::string claim_name(Claim c);
Claim parse_claim(const std::string& s);

struct Report {
  std::string tool_version = kToolVersion;
  std::string claim;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<Verdict> verdicts;  // ascending n
  bool pass = false;
};

struct SweepOptions {
  unsigned jobs = 1;
  /// Append-only file of finished verdicts (one JSON object per line);
  /// verdicts already present are reused.
  std::optional<std::filesystem::path> checkpoint;
  std::function<void(const Verdict&)> on_verdict;
};

/// Runs the claim for every n in `ns`; the report content does not depend on
/// the number of jobs.
Report sweep(Claim claim, const std::vector<std::uint64_t>& ns, const SweepOptions& options = {});

}  // namespace gnl::verify
