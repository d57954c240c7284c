// Acceptance run: one line per criterion.
//
//   PASS / FAIL        the criterion as stated
//   KNOWN-FAIL         a literal claim that the exact computation contradicts;
//                      the line checks the computed value instead and turns
//                      into FAIL if that value ever changes
//
// Exit status is nonzero iff some line is FAIL. `--long` adds the full
// 17..200 trc3 sweep.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "gnl/bigpoly.hpp"
#include "gnl/cohomology.hpp"
#include "gnl/derivations.hpp"
#include "gnl/family.hpp"
#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"
#include "gnl/verify.hpp"
#include "oracles.hpp"
#include "random_algebras.hpp"

using namespace gnl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(s < 10 ? 2 : 1) << s << " s";
  return o.str();
}

void report(const std::string& id, bool ok, const std::string& text) {
  std::cout << (ok ? "PASS       " : "FAIL       ") << std::setw(4) << std::left << id << text << std::endl;
  if (!ok) ++failures;
}

void known(const std::string& id, bool as_documented, const std::string& text) {
  std::cout << (as_documented ? "KNOWN-FAIL " : "FAIL       ") << std::setw(4) << std::left << id << text
            << std::endl;
  if (!as_documented) ++failures;
}

// Runs `body`, turning exceptions into a FAIL line.
void criterion(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

double ratio(const BigInt& num, const BigInt& den) { return mpq_class(num, den).get_d(); }

bool square_zero(const StructureConstants& L) {
  const std::size_t n = L.dim();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto dk = ce_differential(L, k);
    const auto dk1 = ce_differential(L, k + 1);
    for (const auto& column : dk.columns) {
      std::map<std::size_t, Rational> image;
      for (const auto& [r, q] : column) {
        for (const auto& [r2, q2] : dk1.columns[r]) image[r2] += q * q2;
      }
      for (const auto& [r2, q2] : image) {
        if (q2 != 0) return false;
      }
    }
  }
  return true;
}

bool complex_ok(const StructureConstants& L) {
  const auto b = betti(L);
  const std::size_t n = L.dim();
  long euler = 0;
  bool dual = true;
  for (std::size_t k = 0; k <= n; ++k) {
    euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b.b[k]);
    dual = dual && b.b[k] == b.b[n - k];
  }
  return square_zero(L) && dual && euler == 0 && b.b[0] == 1;
}

MultiPoly random_sparse(std::size_t d, int terms, int max_exp, long max_coeff) {
  MultiPoly p(d);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(d);
    for (auto& v : e) v = static_cast<std::uint64_t>(oracle::uniform(0, max_exp));
    p.add_term(e, oracle::uniform(-max_coeff, max_coeff));
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_mode = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) long_mode = true;
  }

  criterion("1", [] {
    bool ok = true;
    double first = 0, worst = 0;
    for (std::uint64_t n : {17, 30, 64, 128, 200}) {
      const auto v = verify::check_trc3(n);
      const double s = std::chrono::duration<double>(v.elapsed).count();
      if (n == 17) first = s;
      worst = std::max(worst, s);
      ok = ok && v.holds;
    }
    ok = ok && first <= 5 && worst <= 900;
    report("1", ok, "trc3 holds for n in {17,30,64,128,200}; n=17 in " + secs(first) + ", slowest " + secs(worst));
  });

  if (long_mode) {
    criterion("1L", [] {
      const auto start = Clock::now();
      std::vector<std::uint64_t> ns;
      for (std::uint64_t n = 17; n <= 200; ++n) ns.push_back(n);
      const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
      const auto r = verify::sweep(verify::Claim::trc3, ns, {.jobs = jobs});
      report("1L", r.pass && r.verdicts.size() == ns.size(),
             "trc3 holds for every n in 17..200 (" + secs(seconds_since(start)) + ")");
    });
  }

  criterion("2", [] {
    bool ok = true;
    double worst = 0;
    for (std::uint64_t n : {31, 100, 180}) {
      const auto v = verify::check_pn(n);
      worst = std::max(worst, std::chrono::duration<double>(v.elapsed).count());
      ok = ok && v.holds;
    }
    report("2", ok && worst <= 60, "L(p_n) < 1/2 for n in {31,100,180}; slowest " + secs(worst));
    const auto v30 = verify::check_pn(30);
    const double l30 = ratio(v30.length, verify::pow2(120));
    std::ostringstream t;
    t << std::setprecision(6) << "L(p_30) = " << l30 << " is not < 1/2, so the stated range 30..180 starts at 31";
    known("2b", !v30.holds && l30 > 0.507 && l30 < 0.508, t.str());
  });

  criterion("3", [] {
    const auto t = verify::check_tail_constant();
    report("3", t.value == 64 && t.holds && t.middle_holds,
           "2 L((1-x)^3 (1-x^3)^2) = " + t.value.get_str() + "; L((1-x^2)^k) = 2^k");
  });

  criterion("4", [] {
    const auto start = Clock::now();
    const auto c = verify::check_induction_chain(181);
    const double s = seconds_since(start);
    report("4", c.identity_holds && c.submultiplicative && s <= 120,
           "p_181 = p_30^5 p_31 exactly and L(p_181) <= L(p_30)^5 L(p_31) (" + secs(s) + ")");
    const double bound = ratio(c.product_bound, verify::pow2(4 * 181));
    std::ostringstream t;
    t << std::setprecision(5) << "base 30 gives L(p_30)^5 L(p_31) = " << bound << " > 1/64, so the (1/2)^6 step fails";
    known("4b", !c.chain_holds && !c.base_cases && bound > 1.0 / 64, t.str());
    const auto d = verify::check_induction_chain(201, 31);
    report("4c", d.holds, "with base 31 the chain closes: L(p_201) <= L(p_31)^5 L(p_46) < 1/64, full bound holds");
  });

  criterion("5", [] {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto built = family::build(n, false);
      const auto& L = built.algebra;
      const auto series = lower_central_series(L);
      const auto d = family::dims(n);
      const auto m = family::measured_dims(built);
      ok = ok && check_jacobi(L).empty() && series.nilpotent && series.nilpotency_class == 3 &&
           validate(L, built.grading).empty();
      ok = ok && d.d1 == n + 3 && d.d2 == n * (n + 1) / 2 + 3 && d.d3 == 2 * n + 2 &&
           d.z == (n + 4) * (n + 1) / 2 && d.z2 == n * (n + 1) / 2;
      ok = ok && m.d1 == d.d1 && m.d2 == d.d2 && m.d3 == d.d3 && m.z == d.z && m.z2 == d.z2;
    }
    const double s = seconds_since(start);
    report("5", ok && s <= 10, "n(n) for n = 1..10: Jacobi, class 3, grading, dims (" + secs(s) + ")");
  });

  criterion("6", [] {
    const auto start = Clock::now();
    bool ok = true;
    for (int t = 0; t < 200; ++t) {
      const auto d = static_cast<std::size_t>(oracle::uniform(1, 3));
      const auto dim = static_cast<std::size_t>(oracle::uniform(2, 8));
      const auto g = testgen::random_graded(dim, d, 4);
      if (!validate(g.algebra, g.grading).empty()) {
        ok = false;
        continue;
      }
      const BigInt before = length(associated_polynomial(g.algebra, g.grading));
      const auto line = collapse_to_line(g.algebra, g.grading);
      const BigInt after = length(associated_polynomial(g.algebra, line.grading));
      ok = ok && line.grading.vars() == 1 && after == before && line.length == before;
    }
    const auto A = abelian(3);
    const Grading adv(2, {{1, 0}, {2, 0}, {0, 1}});
    const BigInt l = length(associated_polynomial(A, adv));
    const auto lossy = collapse_once(A, adv, CollapseStrategy::explicit_m, 1);
    const auto safe = collapse_once(A, adv, CollapseStrategy::minimal);
    const BigInt l1 = length(associated_polynomial(A, lossy.grading));
    const BigInt lm = length(associated_polynomial(A, safe.grading));
    ok = ok && l == 8 && l1 == 6 && lossy.warning.has_value() && lm == 8;
    const double s = seconds_since(start);
    report("6", ok && s <= 30,
           "200 random gradings keep their length; m=1 gives " + l1.get_str() + " < 8, minimal m=" +
               std::to_string(safe.m) + " keeps " + lm.get_str() + " (" + secs(s) + ")");
  });

  criterion("7", [] {
    bool ok = true;
    std::ostringstream t;
    t << "Der(n(n)) = gl(E) + D_1, D_1 triangular with the diagonal relations:";
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto start = Clock::now();
      const auto built = family::build(n);
      const auto der = derivation_space(built.algebra);
      const auto s = family::analyze_derivations(built, der);
      const double el = seconds_since(start);
      ok = ok && s.levi && s.direct_sum && s.triangular && s.diagonal && s.gl_dim == n * n && el <= 300;
      t << " n=" << n << " dim " << s.der_dim << " (" << secs(el) << ")";
    }
    report("7", ok, t.str());
  });

  criterion("8", [] {
    bool ok = true;
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto built = family::build(n, false);
      const auto sc = spectrum_check(built.algebra, grading_derivation(built.algebra, built.grading));
      const auto d = family::dims(n);
      ok = ok && sc.derivation && sc.diagonalizable_123 && sc.multiplicities[0] == d.d1 &&
           sc.multiplicities[1] == d.d2 && sc.multiplicities[2] == d.d3;
    }
    report("8", ok, "grading derivation has eigenvalue multiplicities (d1,d2,d3) for n = 1..5");
  });

  criterion("9", [] {
    const auto start = Clock::now();
    StructureConstants h1({"e1", "e2", "e3"});
    h1.set_bracket(0, 1, {{2, Rational(1)}});
    const auto c1 = check_ds_bound(h1, line_grading({1, 1, 2}));
    const auto h2 = heisenberg(2);
    const auto c2 = check_ds_bound(h2, line_grading({1, 1, 1, 1, 2}));
    bool ok = c1.betti.b == std::vector<std::uint64_t>{1, 2, 2, 1} && c1.betti.total == 6 && c1.length == 6;
    ok = ok && c2.betti.total == 20 && c2.length == 20;
    for (std::size_t n = 1; n <= 10; ++n) ok = ok && betti(abelian(n)).total == (std::uint64_t{1} << n);
    std::vector<StructureConstants> algebras{h1, h2, heisenberg(3), heisenberg(5), abelian(6),
                                             family::build(1, false).algebra};
    for (int t = 0; t < 10; ++t) {
      algebras.push_back(testgen::random_graded(static_cast<std::size_t>(oracle::uniform(3, 9)), 2, 2).algebra);
    }
    for (const auto& L : algebras) ok = ok && complex_ok(L);
    const auto n1 = family::build(1, false);
    const auto c = check_ds_bound(n1.algebra, n1.grading);
    ok = ok && c.holds;
    const double s = seconds_since(start);
    report("9", ok && s <= 600,
           "betti(h1) total 6 = L, betti(h2) total 20 = L, abelian 2^N, d^2 = 0 / duality / Euler; n(1): " +
               std::to_string(c.betti.total) + " >= " + c.length.get_str() + " (" + secs(s) + ")");
  });

  criterion("10", [] {
    bool ok = true;
    std::ostringstream t;
    t << "fine grading length > 2^z:";
    for (std::uint64_t n = 1; n <= 3; ++n) {
      const auto start = Clock::now();
      const auto f = verify::check_fine_exceeds(n);
      const double s = seconds_since(start);
      ok = ok && f.verified && f.holds && s <= 300;
      t << " n=" << n << " " << f.length.get_str() << " > " << f.bound.get_str();
    }
    const auto f4 = verify::check_fine_exceeds(4);
    ok = ok && !f4.verified;
    t << "; n=4 not verified at this scale";
    report("10", ok, t.str());
  });

  criterion("11", [] {
    const auto start = Clock::now();
    bool sub = true;
    for (int t = 0; t < 1000; ++t) {
      const auto d = static_cast<std::size_t>(oracle::uniform(1, 3));
      const auto p = random_sparse(d, static_cast<int>(oracle::uniform(1, 8)), 5, 9);
      const auto q = random_sparse(d, static_cast<int>(oracle::uniform(1, 8)), 5, 9);
      sub = sub && length(mul(p, q)) <= length(p) * length(q);
    }
    bool dbl = true;
    for (int t = 0; t < 500; ++t) {
      const auto p = random_sparse(1, static_cast<int>(oracle::uniform(1, 10)), 12, 20);
      const std::uint64_t k = p.degree_in(0) + 1 + static_cast<std::uint64_t>(oracle::uniform(0, 5));
      dbl = dbl && length(mul(p, binomial_pow({k}, 1))) == 2 * length(p);
    }
    bool stair = true;
    for (int t = 0; t < 200; ++t) {
      FactorList f;
      const int count = static_cast<int>(oracle::uniform(1, 7));
      for (int i = 0; i < count; ++i) {
        f.push_back({{static_cast<std::uint64_t>(oracle::uniform(1, 40))},
                     static_cast<std::uint64_t>(oracle::uniform(1, 4))});
      }
      stair = stair && staircase_length(f) == length(expand(f, 1));
    }
    bool rebase = true;
    for (int t = 0; t < 50; ++t) {
      RatMatrix P(2, 2);
      do {
        for (std::size_t r = 0; r < 2; ++r) {
          for (std::size_t c = 0; c < 2; ++c) P(r, c) = oracle::uniform(-4, 4);
        }
      } while (rank(P) < 2);
      rebase = rebase && family::rebase_check(2, P);
    }
    const double s = seconds_since(start);
    report("11", sub && dbl && stair && rebase,
           "submultiplicativity x1000, doubling x500, staircase x200, rebase x50 (" + secs(s) + ")");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion line(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
