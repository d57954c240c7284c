#include "gnl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "gnl/errors.hpp"
#include "gnl/family.hpp"
#include "gnl/grading.hpp"

namespace gnl::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// (1-x)^a (1-x^2)^b (1-x^3)^c, starting from the largest block.
DensePoly three_factor(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  DensePoly p = b > 0 ? dense_binomial_pow(2, b) : DensePoly::one();
  p.mul_binomial(3, c);
  p.mul_binomial(1, a);
  return p;
}

}  // namespace

BigInt pow2(std::uint64_t k) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

DensePoly three_part_polynomial(std::uint64_t n) {
  const auto d = family::dims(n);
  return three_factor(d.d1, d.d2, d.d3);
}

DensePoly pn_polynomial(std::uint64_t n) { return three_factor(n, 2 * n, 2 * n); }

Verdict check_trc3(std::uint64_t n) {
  const auto start = Clock::now();
  Verdict v;
  v.n = n;
  v.length = length(three_part_polynomial(n));
  v.bound = pow2(family::dims(n).z);
  v.holds = v.length < v.bound;
  v.elapsed = since(start);
  return v;
}

Verdict check_pn(std::uint64_t n) {
  if (n < 1) throw InputError("check_pn needs n >= 1");
  const auto start = Clock::now();
  Verdict v;
  v.n = n;
  v.length = length(pn_polynomial(n));
  v.bound = pow2(4 * n - 1);
  v.holds = v.length < v.bound;
  v.elapsed = since(start);
  return v;
}

TailCheck check_tail_constant(std::uint64_t middle_k) {
  TailCheck t;
  t.value = 2 * length(three_factor(3, 0, 2));
  t.holds = t.value <= 64;
  t.middle_k = middle_k;
  t.middle_length = length(dense_binomial_pow(2, middle_k));
  t.middle_holds = t.middle_length == pow2(middle_k);
  return t;
}

InductionCheck check_induction_chain(std::uint64_t n, std::uint64_t base) {
  if (base < 1) throw InputError("induction base must be >= 1");
  if (n <= 5 * base + 30) {
    throw InputError("the induction step with base " + std::to_string(base) + " applies to n > " +
                     std::to_string(5 * base + 30));
  }
  InductionCheck c;
  c.n = n;
  c.base = base;
  const std::uint64_t r = n - 5 * base;
  const DensePoly qb = pn_polynomial(base);
  const DensePoly rest = pn_polynomial(r);
  const DensePoly qn = pn_polynomial(n);
  DensePoly prod = rest;
  for (int i = 0; i < 5; ++i) prod = mul(prod, qb);
  c.identity_holds = prod == qn;

  const BigInt l30 = length(qb);
  const BigInt lrest = length(rest);
  c.length_n = length(qn);
  BigInt l30_5;
  mpz_pow_ui(l30_5.get_mpz_t(), l30.get_mpz_t(), 5);
  c.product_bound = l30_5 * lrest;
  c.submultiplicative = c.length_n <= c.product_bound;
  c.base_cases = l30 < pow2(4 * base - 1) && lrest < pow2(4 * r - 1);
  c.chain_holds = c.product_bound < pow2(4 * n - 6);
  // Three normalized factors: p_n, (1-x^2)^{n(n-3)/2+3} / 2^{same}, and
  // 2(1-x)^3(1-x^3)^2 with length 64; their denominators add up to 2^z.
  const std::uint64_t middle = n * (n - 3) / 2 + 3;
  const BigInt tail = length(three_factor(3, 0, 2));
  c.full_bound = c.product_bound * pow2(middle) * tail < pow2(family::dims(n).z);
  c.holds = c.identity_holds && c.submultiplicative && c.base_cases && c.chain_holds && c.full_bound;
  return c;
}

FineCheck check_fine_exceeds(std::uint64_t n, std::uint64_t max_n, const Limits& limits) {
  FineCheck f;
  f.n = n;
  f.bound = pow2(family::dims(n).z);
  if (n > max_n) return f;
  const auto built = family::build(n, false);
  const Grading g = family::fine_grading(n);
  f.length = length(associated_polynomial(built.algebra, g, limits));
  f.verified = true;
  f.holds = f.length > f.bound;
  return f;
}

std::string claim_name(Claim c) { return c == Claim::trc3 ? "trc3" : "pn"; }

Claim parse_claim(const std::string& s) {
  if (s == "trc3") return Claim::trc3;
  if (s == "pn") return Claim::pn;
  throw InputError("unknown claim '" + s + "' (expected trc3 or pn)");
}

namespace {

nlohmann::json checkpoint_line(const std::string& claim, const Verdict& v) {
  return {{"claim", claim},
          {"n", v.n},
          {"holds", v.holds},
          {"length", v.length.get_str()},
          {"bound", v.bound.get_str()},
          {"elapsed_ms", v.elapsed.count()}};
}

std::map<std::uint64_t, Verdict> read_checkpoint(const std::filesystem::path& path, const std::string& claim) {
  std::map<std::uint64_t, Verdict> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("claim", "") != claim) continue;
    Verdict v;
    v.n = j.at("n").get<std::uint64_t>();
    v.length = BigInt(j.at("length").get<std::string>());
    v.bound = BigInt(j.at("bound").get<std::string>());
    v.holds = v.length < v.bound;
    v.elapsed = std::chrono::milliseconds(j.value("elapsed_ms", 0));
    done[v.n] = std::move(v);
  }
  return done;
}

}  // namespace

Report sweep(Claim claim, const std::vector<std::uint64_t>& ns, const SweepOptions& options) {
  const std::string name = claim_name(claim);
  std::vector<std::uint64_t> todo = ns;
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

  std::map<std::uint64_t, Verdict> results;
  if (options.checkpoint) {
    for (auto& [n, v] : read_checkpoint(*options.checkpoint, name)) {
      if (std::binary_search(todo.begin(), todo.end(), n)) results[n] = std::move(v);
    }
  }
  std::vector<std::uint64_t> pending;
  for (auto n : todo) {
    if (!results.count(n)) pending.push_back(n);
  }

  std::mutex mu;
  std::ofstream checkpoint_out;
  if (options.checkpoint) checkpoint_out.open(*options.checkpoint, std::ios::app);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= pending.size()) return;
      const std::uint64_t n = pending[idx];
      Verdict v = claim == Claim::trc3 ? check_trc3(n) : check_pn(n);
      std::lock_guard lock(mu);
      if (checkpoint_out) checkpoint_out << checkpoint_line(name, v).dump() << '\n' << std::flush;
      if (options.on_verdict) options.on_verdict(v);
      results[n] = std::move(v);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  Report r;
  r.claim = name;
  if (!todo.empty()) {
    r.from = todo.front();
    r.to = todo.back();
  }
  r.pass = true;
  for (auto& [n, v] : results) {
    r.pass = r.pass && v.holds;
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

}  // namespace gnl::verify
