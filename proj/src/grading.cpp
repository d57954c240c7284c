#include "gnl/grading.hpp"

#include <algorithm>
#include <map>

#include "gnl/errors.hpp"

namespace gnl {

Grading::Grading(std::size_t d, std::vector<ExpVec> degrees) : d_(d), degrees_(std::move(degrees)) {
  if (d == 0) throw InputError("grading needs at least one variable");
  for (const auto& e : degrees_) {
    if (e.size() != d) throw InputError("degree vector has wrong length");
    if (is_zero_vec(e)) throw InputError("degree vectors must be nonzero");
  }
}

FactorList Grading::factors() const {
  std::map<ExpVec, std::uint64_t> counts;
  for (const auto& e : degrees_) ++counts[e];
  FactorList out;
  for (const auto& [e, m] : counts) out.push_back({e, m});
  return out;
}

Grading line_grading(const std::vector<std::uint64_t>& weights) {
  std::vector<ExpVec> degrees;
  degrees.reserve(weights.size());
  for (auto w : weights) degrees.push_back({w});
  return Grading(1, std::move(degrees));
}

std::vector<GradingViolation> validate(const StructureConstants& L, const Grading& G) {
  if (G.size() != L.dim()) throw InputError("grading does not cover the basis");
  std::vector<GradingViolation> bad;
  const std::size_t d = G.vars();
  ExpVec sum(d);
  for (const auto& [ij, val] : L.table()) {
    const auto [i, j] = ij;
    for (std::size_t t = 0; t < d; ++t) sum[t] = G.degree(i)[t] + G.degree(j)[t];
    for (const auto& [k, q] : val) {
      if (G.degree(k) != sum) bad.push_back({i, j, k});
    }
  }
  return bad;
}

void require_valid(const StructureConstants& L, const Grading& G) {
  const auto bad = validate(L, G);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw InputError("not a grading: [" + L.label(v.i) + ", " + L.label(v.j) + "] has a component along " +
                     L.label(v.k) + " of the wrong degree");
  }
}

MultiPoly associated_polynomial(const StructureConstants& L, const Grading& G, const Limits& limits) {
  require_valid(L, G);
  return expand(G.factors(), G.vars(), limits);
}

std::uint64_t min_safe_m(const MultiPoly& p) {
  if (p.vars() < 2) throw InputError("min_safe_m needs at least two variables");
  return p.degree_in(0) + 1;
}

std::uint64_t degree_bound_m(const Grading& G) {
  std::uint64_t total = 1;
  for (const auto& e : G.degrees()) total += e[0];
  return total;
}

Grading collapse_with(const Grading& G, std::uint64_t m) {
  const std::size_t d = G.vars();
  if (d < 2) throw InputError("collapse needs at least two variables");
  if (m < 1) throw InputError("collapse parameter m must be at least 1");
  std::vector<ExpVec> out;
  out.reserve(G.size());
  for (const auto& e : G.degrees()) {
    ExpVec f(e.begin(), e.end() - 1);
    f[0] += m * e[d - 1];
    out.push_back(std::move(f));
  }
  return Grading(d - 1, std::move(out));
}

CollapseResult collapse_once(const StructureConstants& L, const Grading& G, CollapseStrategy strategy,
                             std::uint64_t explicit_m, const Limits& limits) {
  if (G.vars() < 2) throw InputError("collapse needs at least two variables");
  require_valid(L, G);
  std::optional<MultiPoly> p;
  std::uint64_t m = 0;
  switch (strategy) {
    case CollapseStrategy::minimal:
      p = associated_polynomial(L, G, limits);
      m = min_safe_m(*p);
      break;
    case CollapseStrategy::degree_bound:
      m = degree_bound_m(G);
      break;
    case CollapseStrategy::explicit_m:
      if (explicit_m < 1) throw InputError("collapse parameter m must be at least 1");
      m = explicit_m;
      break;
  }
  CollapseResult result{collapse_with(G, m), m, std::nullopt};
  if (strategy == CollapseStrategy::explicit_m) {
    p = associated_polynomial(L, G, limits);
    if (m < min_safe_m(*p)) {
      const BigInt before = length(*p);
      const BigInt after = length(associated_polynomial(L, result.grading, limits));
      if (after != before) {
        result.warning = "m = " + std::to_string(m) + " is below the safe bound " + std::to_string(min_safe_m(*p)) +
                         "; length drops from " + before.get_str() + " to " + after.get_str();
      }
    }
  }
  return result;
}

LineCollapse collapse_to_line(const StructureConstants& L, const Grading& G, const Limits& limits) {
  const BigInt target = length(associated_polynomial(L, G, limits));
  LineCollapse out{G, {}, target};
  while (out.grading.vars() > 1) {
    auto step = collapse_once(L, out.grading, CollapseStrategy::minimal, 0, limits);
    out.ms.push_back(step.m);
    out.grading = std::move(step.grading);
  }
  out.length = length(associated_polynomial(L, out.grading, limits));
  if (out.length != target) throw std::logic_error("collapse changed the length of the associated polynomial");
  return out;
}

Grading permute_variables(const Grading& G, const std::vector<std::size_t>& perm) {
  const std::size_t d = G.vars();
  std::vector<std::size_t> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t t = 0; t < check.size(); ++t) {
    if (check.size() != d || check[t] != t) throw InputError("not a permutation of the grading variables");
  }
  std::vector<ExpVec> out;
  for (const auto& e : G.degrees()) {
    ExpVec f(d);
    for (std::size_t t = 0; t < d; ++t) f[t] = e[perm[t]];
    out.push_back(std::move(f));
  }
  return Grading(d, std::move(out));
}

}  // namespace gnl
