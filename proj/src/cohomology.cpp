#include "gnl/cohomology.hpp"

#include <bit>
#include <unordered_map>

#include "gnl/errors.hpp"

namespace gnl {

namespace {

void require_dim(const StructureConstants& L, std::size_t max_dim) {
  if (L.dim() > max_dim) {
    throw CapacityError("cohomology of a " + std::to_string(L.dim()) + "-dimensional algebra exceeds the cap of " +
                        std::to_string(max_dim) + " (raise --max-dim)");
  }
  if (L.dim() > 62) throw CapacityError("cohomology is limited to dimension 62");
}

// (-1)^{number of set bits of mask strictly below bit}.
int sign_below(std::uint64_t mask, std::size_t bit) {
  const std::uint64_t below = mask & ((std::uint64_t{1} << bit) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

}  // namespace

RatMatrix CochainMap::dense() const {
  RatMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [r, q] : columns[c]) m(r, c) = q;
  }
  return m;
}

std::vector<std::uint64_t> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k > n) return out;
  if (k == 0) return {0};
  // Gosper's hack enumerates k-subsets in increasing numeric order.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    out.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

CochainMap ce_differential(const StructureConstants& L, std::size_t k, std::size_t max_dim) {
  require_dim(L, max_dim);
  const std::size_t n = L.dim();
  if (k > n) throw InputError("form degree exceeds the dimension");
  const auto src = k_subsets(n, k);
  const auto dst = k_subsets(n, k + 1);
  std::unordered_map<std::uint64_t, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);

  // d e^l = - sum_{i<j} c_{ij}^l e^i ^ e^j.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> d_one(n);
  for (const auto& [ij, val] : L.table()) {
    for (const auto& [l, q] : val) d_one[l].emplace_back(ij.first, ij.second, -q);
  }

  CochainMap out;
  out.rows = dst.size();
  out.cols = src.size();
  out.columns.resize(src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const std::uint64_t form = src[col];
    auto& column = out.columns[col];
    // d(e^{l_1} ^ ... ^ e^{l_k}) = sum_s (-1)^{s-1} e^{l_1} ^ .. d e^{l_s} .. ^ e^{l_k};
    // moving the 2-form to the front costs no sign.
    int pos_sign = 1;
    for (std::size_t l = 0; l < n; ++l) {
      if (!(form >> l & 1)) continue;
      const std::uint64_t rest = form & ~(std::uint64_t{1} << l);
      for (const auto& [i, j, q] : d_one[l]) {
        if ((rest >> i & 1) || (rest >> j & 1)) continue;
        const int s = pos_sign * sign_below(rest, j) * sign_below(rest, i);
        const std::uint64_t target = rest | (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        const std::size_t row = dst_index.at(target);
        auto [it, inserted] = column.try_emplace(row, s > 0 ? q : Rational(-q));
        if (!inserted) {
          it->second += s > 0 ? q : Rational(-q);
          if (it->second == 0) column.erase(it);
        }
      }
      pos_sign = -pos_sign;
    }
  }
  return out;
}

std::vector<std::size_t> differential_ranks(const StructureConstants& L, std::size_t max_dim) {
  require_dim(L, max_dim);
  const std::size_t n = L.dim();
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < n; ++k) {
    const CochainMap d = ce_differential(L, k, max_dim);
    FractionFreeEchelon ech(d.rows);
    for (const auto& column : d.columns) {
      if (!column.empty()) ech.insert(to_int_row(column));
    }
    ranks.push_back(ech.rank());
  }
  return ranks;
}

BettiVector betti(const StructureConstants& L, std::size_t max_dim) {
  const std::size_t n = L.dim();
  const auto ranks = differential_ranks(L, max_dim);
  BettiVector out;
  std::uint64_t binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t r_out = k < n ? ranks[k] : 0;
    const std::uint64_t r_in = k > 0 ? ranks[k - 1] : 0;
    out.b.push_back(binom - r_out - r_in);
    out.total += out.b.back();
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

BoundCheck check_ds_bound(const StructureConstants& L, const Grading& G, std::size_t max_dim, const Limits& limits) {
  BoundCheck out;
  out.length = length(associated_polynomial(L, G, limits));
  out.betti = betti(L, max_dim);
  out.holds = BigInt(static_cast<unsigned long>(out.betti.total)) >= out.length;
  out.center_dim = center(L).dim();
  BigInt trc = 1;
  mpz_mul_2exp(trc.get_mpz_t(), trc.get_mpz_t(), out.center_dim);
  out.trc_holds = BigInt(static_cast<unsigned long>(out.betti.total)) >= trc;
  return out;
}

}  // namespace gnl
