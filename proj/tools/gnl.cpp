// gnl: command-line front end for the graded nilpotent Lie algebra toolkit.
//
// Exit codes: 0 all checks passed, 1 a checked claim failed or violations
// were found, 2 usage, input or capacity errors.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gnl/cohomology.hpp"
#include "gnl/derivations.hpp"
#include "gnl/errors.hpp"
#include "gnl/family.hpp"
#include "gnl/grading.hpp"
#include "gnl/io.hpp"
#include "gnl/liealg.hpp"
#include "gnl/verify.hpp"

namespace {

using gnl::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Largest algebra dimension the derivation solver handles without
// --allow-large; n(3) has dimension 23.
constexpr std::size_t kDerDefaultMaxDim = 23;

struct Output {
  bool json = false;
  bool quiet = false;

  void emit(const Json& j, const std::string& text) const {
    if (quiet) return;
    if (json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
    }
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

gnl::StructureConstants load_algebra(const std::string& path) {
  return gnl::io::algebra_from_json(gnl::io::read_file(path));
}

gnl::Grading load_grading(const std::string& path, const gnl::StructureConstants& L) {
  return gnl::io::grading_from_json(gnl::io::read_file(path), L);
}

Json labels_of(const gnl::StructureConstants& L, std::initializer_list<std::size_t> idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(L.label(i));
  return out;
}

// ---- check -----------------------------------------------------------------

int run_check(const Output& out, const std::string& path) {
  const auto L = load_algebra(path);
  const auto violations = gnl::check_jacobi(L);
  const auto series = gnl::lower_central_series(L);
  const auto z = gnl::center(L);
  Json v = Json::array();
  std::ostringstream text;
  for (const auto& t : violations) v.push_back(labels_of(L, {t[0], t[1], t[2]}));
  Json j = {{"dim", L.dim()},
            {"jacobi_violations", v},
            {"nilpotent", series.nilpotent},
            {"nilpotency_class", series.nilpotency_class},
            {"center_dim", z.dim()}};
  text << "dim " << L.dim() << "\n";
  if (violations.empty()) {
    text << "Jacobi identity: ok\n";
  } else {
    text << "Jacobi identity fails on " << violations.size() << " triple(s):\n";
    for (const auto& t : violations) {
      text << "  (" << L.label(t[0]) << ", " << L.label(t[1]) << ", " << L.label(t[2]) << ")\n";
    }
  }
  text << "nilpotent: " << yes_no(series.nilpotent);
  if (series.nilpotent) text << " (class " << series.nilpotency_class << ")";
  text << "\ncenter dim " << z.dim() << "\n";
  out.emit(j, text.str());
  return violations.empty() ? kOk : kFailed;
}

// ---- grading ---------------------------------------------------------------

int run_grading_check(const Output& out, const std::string& alg, const std::string& grad) {
  const auto L = load_algebra(alg);
  const auto G = load_grading(grad, L);
  const auto bad = gnl::validate(L, G);
  Json v = Json::array();
  std::ostringstream text;
  for (const auto& b : bad) {
    v.push_back({{"i", L.label(b.i)}, {"j", L.label(b.j)}, {"k", L.label(b.k)}});
    text << "[" << L.label(b.i) << ", " << L.label(b.j) << "] has a " << L.label(b.k)
         << " component of the wrong degree\n";
  }
  if (bad.empty()) text << "grading is valid\n";
  out.emit({{"valid", bad.empty()}, {"violations", v}}, text.str());
  return bad.empty() ? kOk : kFailed;
}

int run_grading_poly(const Output& out, const std::string& alg, const std::string& grad, const gnl::Limits& limits) {
  const auto L = load_algebra(alg);
  const auto G = load_grading(grad, L);
  gnl::require_valid(L, G);
  const auto p = gnl::associated_polynomial(L, G, limits);
  Json j = gnl::io::to_json(p);
  j["length"] = gnl::length(p).get_str();
  out.emit(j, gnl::to_string(p) + "\nlength " + gnl::length(p).get_str() + "\n");
  return kOk;
}

int run_grading_collapse(const Output& out, const std::string& alg, const std::string& grad,
                         const std::string& strategy, std::uint64_t m, bool to_line, const std::string& save,
                         const gnl::Limits& limits) {
  const auto L = load_algebra(alg);
  const auto G = load_grading(grad, L);
  gnl::require_valid(L, G);
  const auto before = gnl::length(gnl::associated_polynomial(L, G, limits));
  Json j;
  std::ostringstream text;
  gnl::Grading result = G;
  if (to_line) {
    auto line = gnl::collapse_to_line(L, G, limits);
    j = {{"ms", line.ms}, {"length_before", before.get_str()}, {"length_after", line.length.get_str()}};
    text << "collapsed to one variable with m = ";
    for (std::size_t i = 0; i < line.ms.size(); ++i) text << (i ? ", " : "") << line.ms[i];
    text << "\nlength " << before.get_str() << " -> " << line.length.get_str() << "\n";
    result = std::move(line.grading);
  } else {
    gnl::CollapseStrategy s;
    if (strategy == "minimal") {
      s = gnl::CollapseStrategy::minimal;
    } else if (strategy == "degree-bound") {
      s = gnl::CollapseStrategy::degree_bound;
    } else {
      s = gnl::CollapseStrategy::explicit_m;
    }
    auto r = gnl::collapse_once(L, G, s, m, limits);
    const auto after = gnl::length(gnl::associated_polynomial(L, r.grading, limits));
    j = {{"m", r.m}, {"length_before", before.get_str()}, {"length_after", after.get_str()}};
    if (r.warning) j["warning"] = *r.warning;
    text << "m = " << r.m << "\nlength " << before.get_str() << " -> " << after.get_str() << "\n";
    if (r.warning) std::cerr << "warning: " << *r.warning << "\n";
    result = std::move(r.grading);
  }
  j["grading"] = gnl::io::to_json(L, result);
  if (!save.empty()) gnl::io::write_file(save, gnl::io::to_json(L, result));
  out.emit(j, text.str());
  return kOk;
}

// ---- family ----------------------------------------------------------------

int run_family_build(const Output& out, std::size_t n, const std::string& alg_out, const std::string& grad_out) {
  const auto built = gnl::family::build(n);
  const Json alg = gnl::io::to_json(built.algebra);
  const Json grad = gnl::io::to_json(built.algebra, built.grading);
  if (!alg_out.empty()) gnl::io::write_file(alg_out, alg);
  if (!grad_out.empty()) gnl::io::write_file(grad_out, grad);
  std::ostringstream text;
  if (alg_out.empty() && grad_out.empty()) {
    text << alg.dump(2) << "\n";
  } else {
    text << "n(" << n << "): dim " << built.algebra.dim();
    if (!alg_out.empty()) text << ", algebra -> " << alg_out;
    if (!grad_out.empty()) text << ", grading -> " << grad_out;
    text << "\n";
  }
  out.emit({{"algebra", alg}, {"grading", grad}}, text.str());
  return kOk;
}

int run_family_dims(const Output& out, std::size_t n) {
  const Json j = gnl::io::to_json(gnl::family::dims(n));
  out.emit(j, j.dump());
  return kOk;
}

int run_family_fine(const Output& out, std::size_t n, const std::string& save) {
  const auto built = gnl::family::build(n, false);
  const auto G = gnl::family::fine_grading(n);
  gnl::require_valid(built.algebra, G);
  const Json j = gnl::io::to_json(built.algebra, G);
  if (!save.empty()) gnl::io::write_file(save, j);
  std::ostringstream text;
  const auto w = gnl::family::fine_weights(n);
  for (std::size_t i = 0; i < w.size(); ++i) text << built.algebra.label(i) << " " << w[i] << "\n";
  out.emit(j, text.str());
  return kOk;
}

gnl::RatMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-3, 3);
  for (;;) {
    gnl::RatMatrix P(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) P(r, c) = entry(rng);
    }
    if (gnl::rank(P) == n) return P;
  }
}

int run_family_rebase(const Output& out, std::size_t n, unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  unsigned ok = 0;
  for (unsigned t = 0; t < trials; ++t) ok += gnl::family::rebase_check(n, random_invertible(n, rng)) ? 1 : 0;
  std::ostringstream text;
  text << ok << "/" << trials << " random invertible maps on E give the same bracket table\n";
  out.emit({{"n", n}, {"trials", trials}, {"seed", seed}, {"passed", ok}}, text.str());
  return ok == trials ? kOk : kFailed;
}

// ---- der -------------------------------------------------------------------

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json matrix_json(const gnl::RatMatrix& M) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (M(r, c) != 0) entries.push_back({r, c, M(r, c).get_str()});
    }
  }
  return entries;
}

int run_der(const Output& out, const std::string& path, std::optional<std::size_t> family_n,
            const std::string& checks, const std::string& save, bool allow_large) {
  const auto L = load_algebra(path);
  if (L.dim() > kDerDefaultMaxDim && !allow_large) {
    const auto size = gnl::leibniz_size(L);
    throw gnl::InputError("derivation system has " + std::to_string(size.unknowns) + " unknowns and up to " +
                          std::to_string(size.equations) + " equations; pass --allow-large to run it");
  }
  const auto der = gnl::derivation_space(L);
  Json j = {{"dim", L.dim()}, {"der_dim", der.elements.size()}};
  std::ostringstream text;
  text << "dim Der = " << der.elements.size() << " (algebra dim " << L.dim() << ")\n";
  bool ok = true;

  const auto wanted = split_list(checks);
  if (!wanted.empty() && !family_n) throw gnl::InputError("--check needs --family-n");
  if (family_n) {
    const auto built = gnl::family::build(*family_n);
    if (!built.algebra.same_table(L)) {
      throw gnl::InputError("algebra does not match n(" + std::to_string(*family_n) + ") in its basis order");
    }
    Json results = Json::object();
    std::optional<gnl::family::DerivationStructure> st;
    auto structure = [&]() -> const gnl::family::DerivationStructure& {
      if (!st) st = gnl::family::analyze_derivations(built, der);
      return *st;
    };
    for (const auto& c : wanted) {
      bool pass;
      if (c == "levi") {
        const auto& s = structure();
        pass = s.levi && s.direct_sum && s.gl_dim == *family_n * *family_n;
        results["gl_dim"] = s.gl_dim;
      } else if (c == "triangular") {
        pass = structure().triangular;
      } else if (c == "diagonal") {
        pass = structure().diagonal;
      } else if (c == "multiplicity") {
        const auto sc = gnl::spectrum_check(L, gnl::grading_derivation(L, built.grading));
        const auto d = gnl::family::dims(*family_n);
        pass = sc.derivation && sc.diagonalizable_123 && sc.multiplicities[0] == d.d1 &&
               sc.multiplicities[1] == d.d2 && sc.multiplicities[2] == d.d3;
        results["multiplicities"] = sc.multiplicities;
      } else {
        throw gnl::InputError("unknown check '" + c + "' (expected levi, triangular, diagonal, multiplicity)");
      }
      results[c] = pass;
      text << c << ": " << pass_fail(pass) << "\n";
      ok = ok && pass;
    }
    j["checks"] = results;
  }
  if (!save.empty()) {
    Json full = j;
    Json elems = Json::array();
    for (const auto& D : der.elements) elems.push_back(matrix_json(D));
    full["basis"] = L.labels();
    full["elements"] = elems;
    gnl::io::write_file(save, full);
  }
  out.emit(j, text.str());
  return ok ? kOk : kFailed;
}

// ---- cohomology ------------------------------------------------------------

int run_cohomology(const Output& out, const std::string& path, std::size_t max_dim, const std::string& grad,
                   const std::string& save, const gnl::Limits& limits) {
  const auto L = load_algebra(path);
  Json j;
  std::ostringstream text;
  bool ok = true;
  if (grad.empty()) {
    const auto b = gnl::betti(L, max_dim);
    j = gnl::io::to_json(b);
  } else {
    const auto G = load_grading(grad, L);
    gnl::require_valid(L, G);
    const auto c = gnl::check_ds_bound(L, G, max_dim, limits);
    j = gnl::io::to_json(c.betti);
    j["length"] = c.length.get_str();
    j["holds"] = c.holds;
    j["center_dim"] = c.center_dim;
    j["total_at_least_2_pow_center"] = c.trc_holds;
    ok = c.holds;
  }
  text << "betti";
  for (const auto& b : j["betti"]) text << " " << b.get<std::uint64_t>();
  text << "\ntotal " << j["total"].get<std::uint64_t>() << "\n";
  if (j.contains("length")) {
    text << "L(p) " << j["length"].get<std::string>() << ": total >= L(p) " << pass_fail(ok) << "\n";
  }
  if (!save.empty()) gnl::io::write_file(save, j);
  out.emit(j, text.str());
  return ok ? kOk : kFailed;
}

// ---- verify ----------------------------------------------------------------

struct SweepArgs {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string list;
  unsigned jobs = 1;
  std::string report;
  std::string checkpoint;
  bool beyond = false;
  bool no_timing = false;
};

int run_verify_sweep(const Output& out, gnl::verify::Claim claim, const SweepArgs& a) {
  std::vector<std::uint64_t> ns;
  if (!a.list.empty()) {
    for (const auto& s : split_list(a.list)) {
      try {
        ns.push_back(std::stoull(s));
      } catch (const std::exception&) {
        throw gnl::InputError("bad entry '" + s + "' in --n-list");
      }
    }
  } else {
    if (a.from == 0 || a.to < a.from) throw gnl::InputError("need 1 <= --n-from <= --n-to, or --n-list");
    for (auto n = a.from; n <= a.to; ++n) ns.push_back(n);
  }
  // The claims start at 17 (trc3) and 30 (pn); smaller n are reported only.
  const std::uint64_t start = claim == gnl::verify::Claim::trc3 ? 17 : 30;
  for (auto n : ns) {
    if (n == 0) throw gnl::InputError("n must be >= 1");
    if (n > 200 && !a.beyond) throw gnl::InputError("n > 200 needs --beyond (no claim is attached there)");
  }
  gnl::verify::SweepOptions opts;
  opts.jobs = a.jobs;
  if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;
  if (!out.quiet && !out.json) {
    opts.on_verdict = [](const gnl::verify::Verdict& v) {
      std::cerr << "n=" << v.n << " " << (v.holds ? "holds" : "FAILS") << " (" << v.elapsed.count() << " ms)\n";
    };
  }
  auto r = gnl::verify::sweep(claim, ns, opts);
  bool pass = true;
  Json exploratory = Json::array();
  for (const auto& v : r.verdicts) {
    if (v.n < start) {
      exploratory.push_back(v.n);
    } else {
      pass = pass && v.holds;
    }
  }
  r.pass = pass;
  Json j = gnl::io::to_json(r, !a.no_timing);
  j["exploratory"] = exploratory;
  if (!a.report.empty()) gnl::io::write_file(a.report, j);
  std::ostringstream text;
  text << gnl::verify::claim_name(claim) << " over " << r.verdicts.size() << " value(s) of n: " << pass_fail(pass)
       << "\n";
  for (const auto& v : r.verdicts) {
    if (!v.holds) {
      text << "  n=" << v.n << " does not hold" << (v.n < start ? " (exploratory)" : "") << "\n";
    }
  }
  out.emit(j, text.str());
  return pass ? kOk : kFailed;
}

int run_verify_tail(const Output& out) {
  const auto t = gnl::verify::check_tail_constant();
  Json j = {{"value", t.value.get_str()},
            {"holds", t.holds},
            {"middle_k", t.middle_k},
            {"middle_length", t.middle_length.get_str()},
            {"middle_holds", t.middle_holds}};
  std::ostringstream text;
  text << "2*L((1-x)^3(1-x^3)^2) = " << t.value.get_str() << " (<= 64: " << pass_fail(t.holds) << ")\n"
       << "L((1-x^2)^" << t.middle_k << ") = 2^" << t.middle_k << ": " << pass_fail(t.middle_holds) << "\n";
  out.emit(j, text.str());
  return t.holds && t.middle_holds ? kOk : kFailed;
}

int run_verify_induction(const Output& out, std::uint64_t n, std::uint64_t base) {
  const auto c = gnl::verify::check_induction_chain(n, base);
  Json j = {{"n", n},
            {"base", base},
            {"identity", c.identity_holds},
            {"length", c.length_n.get_str()},
            {"product_bound", c.product_bound.get_str()},
            {"submultiplicative", c.submultiplicative},
            {"base_cases", c.base_cases},
            {"chain", c.chain_holds},
            {"full_bound", c.full_bound},
            {"holds", c.holds}};
  std::ostringstream text;
  const auto r = n - 5 * base;
  text << "q_" << n << " = q_" << base << "^5 q_" << r << ": " << pass_fail(c.identity_holds) << "\n"
       << "L(q_" << n << ") <= L(q_" << base << ")^5 L(q_" << r << "): " << pass_fail(c.submultiplicative) << "\n"
       << "L(p_" << base << ") < 1/2 and L(p_" << r << ") < 1/2: " << pass_fail(c.base_cases) << "\n"
       << "bound < 1/64: " << pass_fail(c.chain_holds) << "\n"
       << "full inequality from the bound: " << pass_fail(c.full_bound) << "\n";
  out.emit(j, text.str());
  return c.holds ? kOk : kFailed;
}

int run_verify_fine(const Output& out, std::uint64_t n, const gnl::Limits& limits) {
  const auto f = gnl::verify::check_fine_exceeds(n, gnl::verify::kMaxFineN, limits);
  Json j = {{"n", n}, {"verified", f.verified}, {"bound", f.bound.get_str()}};
  std::ostringstream text;
  if (f.verified) {
    j["length"] = f.length.get_str();
    j["holds"] = f.holds;
    text << "L = " << f.length.get_str() << " vs 2^z = " << f.bound.get_str() << ": " << pass_fail(f.holds) << "\n";
  } else {
    j["status"] = "claimed, not verified at this scale";
    text << "n=" << n << ": claimed, not verified at this scale\n";
  }
  out.emit(j, text.str());
  return !f.verified || f.holds ? kOk : kFailed;
}

// ---- poly ------------------------------------------------------------------

int run_poly_expand(const Output& out, const std::string& path, const std::string& save, const gnl::Limits& limits) {
  const auto [factors, d] = gnl::io::factors_from_json(gnl::io::read_file(path));
  const auto p = gnl::expand(factors, d, limits);
  Json j = gnl::io::to_json(p);
  j["length"] = gnl::length(p).get_str();
  if (!save.empty()) gnl::io::write_file(save, j);
  out.emit(j, gnl::to_string(p) + "\nlength " + gnl::length(p).get_str() + "\n");
  return kOk;
}

int run_poly_length(const Output& out, const std::string& path, const gnl::Limits& limits) {
  const auto [factors, d] = gnl::io::factors_from_json(gnl::io::read_file(path));
  const gnl::BigInt L = d == 1 ? gnl::staircase_length(factors) : gnl::length(gnl::expand(factors, d, limits));
  out.emit({{"length", L.get_str()}}, L.get_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded nilpotent Lie algebras: associated polynomials, the family n(n) and exact length checks"};
  app.set_version_flag("--version", std::string(gnl::verify::kToolVersion));
  app.require_subcommand(1, 1);

  Output out;
  std::size_t max_terms = 0;
  app.add_flag("--json", out.json, "Print JSON instead of a text summary");
  app.add_flag("-q,--quiet", out.quiet, "Print nothing on success; rely on the exit code");
  app.add_option("--max-terms", max_terms, "Term cap for sparse products (default: GNL_MAX_TERMS or 2^24)");

  int status = kOk;
  auto limits = [&]() {
    gnl::Limits l = gnl::Limits::from_env();
    if (max_terms > 0) l.max_terms = max_terms;
    return l;
  };

  // check
  std::string alg, grad, save;
  auto* check = app.add_subcommand("check", "Jacobi identity, nilpotency and center of an algebra");
  check->add_option("algebra", alg, "Algebra JSON")->required();
  check->callback([&]() { status = run_check(out, alg); });

  // grading
  auto* grading = app.add_subcommand("grading", "Gradings and their associated polynomials");
  grading->require_subcommand(1, 1);
  auto* g_check = grading->add_subcommand("check", "Validate a grading against the bracket");
  auto* g_poly = grading->add_subcommand("poly", "Associated polynomial and its length");
  auto* g_collapse = grading->add_subcommand("collapse", "Eliminate the last grading variable");
  for (auto* sub : {g_check, g_poly, g_collapse}) {
    sub->add_option("algebra", alg, "Algebra JSON")->required();
    sub->add_option("grading", grad, "Grading JSON")->required();
  }
  std::string strategy = "minimal";
  std::uint64_t m = 0;
  bool to_line = false;
  g_collapse->add_option("--strategy", strategy, "minimal, degree-bound or explicit")
      ->check(CLI::IsMember({"minimal", "degree-bound", "explicit"}));
  auto* m_opt = g_collapse->add_option("--m", m, "Substitution exponent for --strategy explicit");
  g_collapse->add_flag("--to-line", to_line, "Collapse repeatedly down to one variable");
  g_collapse->add_option("--out", save, "Write the collapsed grading here");
  g_check->callback([&]() { status = run_grading_check(out, alg, grad); });
  g_poly->callback([&]() { status = run_grading_poly(out, alg, grad, limits()); });
  g_collapse->callback([&]() {
    if (strategy == "explicit" && m_opt->count() == 0) throw CLI::ValidationError("--m", "required with --strategy explicit");
    status = run_grading_collapse(out, alg, grad, strategy, m, to_line, save, limits());
  });

  // family
  std::size_t n = 1;
  std::string alg_out, grad_out;
  auto* family = app.add_subcommand("family", "The family n(n)");
  family->require_subcommand(0, 1);
  family->add_option("--n", n, "Family parameter")->check(CLI::PositiveNumber);
  family->add_option("--out", alg_out, "Write the algebra JSON here");
  family->add_option("--grading-out", grad_out, "Write the canonical grading JSON here");
  auto* f_build = family->add_subcommand("build", "Build n(n) with its canonical grading");
  f_build->add_option("--n", n, "Family parameter")->required()->check(CLI::PositiveNumber);
  f_build->add_option("--out", alg_out, "Write the algebra JSON here");
  f_build->add_option("--grading-out", grad_out, "Write the canonical grading JSON here");
  auto* f_dims = family->add_subcommand("dims", "Closed-form dimensions");
  f_dims->add_option("--n", n, "Family parameter")->required()->check(CLI::PositiveNumber);
  auto* f_fine = family->add_subcommand("fine-grading", "The single-variable fine grading");
  f_fine->add_option("--n", n, "Family parameter")->required()->check(CLI::PositiveNumber);
  f_fine->add_option("--out", save, "Write the grading JSON here");
  auto* f_rebase = family->add_subcommand("rebase-check", "Bracket table invariance under random maps of E");
  unsigned trials = 50;
  std::uint64_t seed = 1;
  f_rebase->add_option("--n", n, "Family parameter")->required()->check(CLI::PositiveNumber);
  f_rebase->add_option("--trials", trials, "Number of random maps");
  f_rebase->add_option("--seed", seed, "Random seed");
  f_build->callback([&]() { status = run_family_build(out, n, alg_out, grad_out); });
  f_dims->callback([&]() { status = run_family_dims(out, n); });
  f_fine->callback([&]() { status = run_family_fine(out, n, save); });
  f_rebase->callback([&]() { status = run_family_rebase(out, n, trials, seed); });
  family->callback([&]() {
    if (family->get_subcommands().empty()) status = run_family_build(out, n, alg_out, grad_out);
  });

  // der
  std::size_t family_n = 0;
  std::string checks;
  bool allow_large = false;
  auto* der = app.add_subcommand("der", "Derivation algebra");
  der->add_option("algebra", alg, "Algebra JSON")->required();
  auto* fam_opt = der->add_option("--family-n", family_n, "Treat the algebra as n(N) in its standard basis");
  der->add_option("--check", checks, "Comma list of levi, triangular, diagonal, multiplicity");
  der->add_option("--json", save, "Write the derivation basis here");
  der->add_flag("--allow-large", allow_large, "Run above the default size limit");
  der->callback([&]() {
    std::optional<std::size_t> fn;
    if (fam_opt->count() > 0) fn = family_n;
    status = run_der(out, alg, fn, checks, save, allow_large);
  });

  // cohomology
  std::size_t max_dim = gnl::kDefaultMaxCohomologyDim;
  auto* coh = app.add_subcommand("cohomology", "Betti numbers of the Chevalley-Eilenberg complex");
  coh->add_option("algebra", alg, "Algebra JSON")->required();
  coh->add_option("--max-dim", max_dim, "Refuse algebras above this dimension");
  coh->add_option("--grading", grad, "Also compare the total against L(p) of this grading");
  coh->add_option("--json", save, "Write the result here");
  coh->callback([&]() { status = run_cohomology(out, alg, max_dim, grad, save, limits()); });

  // verify
  auto* verify = app.add_subcommand("verify", "Exact checks of the length inequalities");
  verify->require_subcommand(1, 1);
  SweepArgs sweep_args;
  for (const char* name : {"trc3", "pn"}) {
    auto* sub = verify->add_subcommand(name, std::string(name) == "trc3"
                                                 ? "L of the three-part polynomial below 2^z"
                                                 : "L(p_n) below 1/2");
    sub->add_option("--n-from", sweep_args.from, "First n");
    sub->add_option("--n-to", sweep_args.to, "Last n");
    sub->add_option("--n-list", sweep_args.list, "Comma separated values of n (overrides the range)");
    sub->add_option("-j,--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--report", sweep_args.report, "Write the JSON report here");
    sub->add_option("--checkpoint", sweep_args.checkpoint, "Append verdicts here and reuse earlier ones");
    sub->add_flag("--beyond", sweep_args.beyond, "Allow n > 200");
    sub->add_flag("--no-timing", sweep_args.no_timing, "Leave timings out of the report");
    const auto claim = gnl::verify::parse_claim(name);
    sub->callback([&, claim]() { status = run_verify_sweep(out, claim, sweep_args); });
  }
  auto* v_tail = verify->add_subcommand("tail", "The constant 64 and the middle factor");
  v_tail->callback([&]() { status = run_verify_tail(out); });
  std::uint64_t ind_n = 181, base = 30;
  auto* v_ind = verify->add_subcommand("induction", "The induction step q_n = q_base^5 q_{n - 5 base}");
  v_ind->add_option("--n", ind_n, "n");
  v_ind->add_option("--base", base, "Induction base")->check(CLI::PositiveNumber);
  v_ind->callback([&]() { status = run_verify_induction(out, ind_n, base); });
  std::uint64_t fine_n = 1;
  auto* v_fine = verify->add_subcommand("fine", "Fine grading length against 2^z");
  v_fine->add_option("--n", fine_n, "Family parameter")->required()->check(CLI::PositiveNumber);
  v_fine->callback([&]() { status = run_verify_fine(out, fine_n, limits()); });

  // poly
  auto* poly = app.add_subcommand("poly", "Products of (1 - x^alpha)^m");
  poly->require_subcommand(1, 1);
  auto* p_expand = poly->add_subcommand("expand", "Expand a factor list");
  p_expand->add_option("factors", alg, "Factors JSON")->required();
  p_expand->add_option("--out", save, "Write the polynomial here");
  auto* p_length = poly->add_subcommand("length", "Length of a factor product");
  p_length->add_option("factors", alg, "Factors JSON")->required();
  p_expand->callback([&]() { status = run_poly_expand(out, alg, save, limits()); });
  p_length->callback([&]() { status = run_poly_length(out, alg, limits()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const gnl::CapacityError& e) {
    std::cerr << "error: " << e.what() << " (raise the cap with --max-terms or GNL_MAX_TERMS)\n";
    return kUsage;
  } catch (const gnl::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
