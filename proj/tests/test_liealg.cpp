#include "doctest.h"

#include "gnl/errors.hpp"
#include "gnl/family.hpp"
#include "gnl/liealg.hpp"
#include "oracles.hpp"

using namespace gnl;

namespace {

// h1 with basis e1, e2, e3 and [e1, e2] = e3.
StructureConstants h1() {
  StructureConstants L({"e1", "e2", "e3"});
  L.set_bracket(0, 1, {{2, Rational(1)}});
  return L;
}

RatVec random_vec(std::size_t n) {
  RatVec v(n);
  for (auto& q : v) q = Rational(oracle::uniform(-5, 5), oracle::uniform(1, 3)), q.canonicalize();
  return v;
}

RatMatrix random_invertible(std::size_t n) {
  for (;;) {
    RatMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = oracle::uniform(-2, 2);
    }
    if (rank(p) == n) return p;
  }
}

}  // namespace

TEST_CASE("bracket") {
  const auto L = h1();
  CHECK(bracket(L, unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
  CHECK(bracket(L, unit_vector(3, 1), unit_vector(3, 0)) == RatVec{0, 0, -1});
  for (int t = 0; t < 20; ++t) {
    const RatVec v = random_vec(3);
    CHECK(is_zero(bracket(L, v, v)));
  }
  const auto n1 = family::build(1);
  const auto& A = n1.algebra;
  const RatVec c = bracket(A, unit_vector(A.dim(), n1.layout.a), unit_vector(A.dim(), n1.layout.b));
  CHECK(c == unit_vector(A.dim(), n1.layout.c));
  CHECK_THROWS_AS(bracket(L, RatVec(2), RatVec(3)), InputError);
}

TEST_CASE("structure constant bookkeeping") {
  StructureConstants L({"p", "q", "r"});
  L.set_bracket(2, 0, {{1, Rational(3)}});
  CHECK(L.bracket_basis(0, 2) == SparseVec{{1, Rational(-3)}});
  CHECK(L.table().count({0, 2}) == 1);
  CHECK_THROWS_AS(L.set_bracket(1, 1, {{0, Rational(1)}}), InputError);
  CHECK_THROWS_AS(StructureConstants({"p", "p"}), InputError);
  CHECK(L.require_index("q") == 1);
  CHECK_THROWS_AS(L.require_index("nope"), InputError);
}

TEST_CASE("check_jacobi") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_jacobi(family::build(n, false).algebra).empty());
  CHECK(check_jacobi(abelian(4)).empty());

  // Replacing [a, c] = h by [a, c] = f is invisible to Jacobi: the only
  // nonzero double brackets repeat a vector, so every distinct triple
  // still sums to zero.
  auto swapped = family::build(1, false);
  swapped.algebra.set_bracket(swapped.layout.a, swapped.layout.c, {{swapped.layout.f, Rational(1)}});
  CHECK(check_jacobi(swapped.algebra).empty());

  // Adding [c, x] = f breaks the triple (a, b, x): [[a,b],x] = f.
  auto bad = family::build(1, false);
  const auto& lay = bad.layout;
  bad.algebra.set_bracket(lay.c, lay.x, {{lay.f, Rational(1)}});
  const auto violations = check_jacobi(bad.algebra);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == std::array<std::size_t, 3>{lay.a, lay.b, lay.x});
}

TEST_CASE("center") {
  const Subspace z = center(h1());
  CHECK(z.dim() == 1);
  CHECK(z.contains(unit_vector(3, 2)));
  CHECK(center(family::build(1, false).algebra).dim() == 5);
  CHECK(center(family::build(4, false).algebra).dim() == 20);
  CHECK(center(abelian(3)).dim() == 3);
}

TEST_CASE("lower central series") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto s = lower_central_series(family::build(n, false).algebra);
    CHECK(s.nilpotent);
    CHECK(s.nilpotency_class == 3);
    // [n, n] = span(L2E, X, c, f, h, U, Y).
    CHECK(s.terms[1].dim() == n * (n - 1) / 2 + n + 3 + 2 * n);
  }
  const auto ab = lower_central_series(abelian(3));
  CHECK(ab.nilpotency_class == 1);
  CHECK(lower_central_series(h1()).nilpotency_class == 2);

  // sl2-like: [e, f] = h, [h, e] = 2e, [h, f] = -2f is not nilpotent.
  StructureConstants sl2({"e", "f", "h"});
  sl2.set_bracket(0, 1, {{2, Rational(1)}});
  sl2.set_bracket(2, 0, {{0, Rational(2)}});
  sl2.set_bracket(2, 1, {{1, Rational(-2)}});
  CHECK(check_jacobi(sl2).empty());
  CHECK_FALSE(lower_central_series(sl2).nilpotent);
}

TEST_CASE("change_basis") {
  const auto L = h1();
  CHECK(change_basis(L, RatMatrix::identity(3)).same_table(L));
  RatMatrix P = RatMatrix::identity(3);
  P(0, 0) = 2;
  const auto scaled = change_basis(L, P);
  CHECK(scaled.bracket_basis(0, 1) == SparseVec{{2, Rational(2)}});
  CHECK_THROWS_AS(change_basis(L, RatMatrix(3, 3)), InputError);
}

TEST_CASE("property: Jacobi and center are basis covariant") {
  const auto built = family::build(2, false);
  const auto& L = built.algebra;
  const std::size_t N = L.dim();
  const Subspace z = center(L);
  const auto lcs = lower_central_series(L);
  for (int t = 0; t < 5; ++t) {
    const RatMatrix P = random_invertible(N);
    const auto M = change_basis(L, P);
    CHECK(check_jacobi(M).empty());
    // Map the center computed in the new basis back through P.
    std::vector<RatVec> back;
    const Subspace zM = center(M);
    for (const auto& v : zM.basis()) back.push_back(P.apply(v));
    CHECK(Subspace::span(N, back) == z);
    const auto lcs_new = lower_central_series(M);
    REQUIRE(lcs_new.terms.size() == lcs.terms.size());
    for (std::size_t k = 0; k < lcs.terms.size(); ++k) {
      std::vector<RatVec> mapped;
      for (const auto& v : lcs_new.terms[k].basis()) mapped.push_back(P.apply(v));
      CHECK(Subspace::span(N, mapped) == lcs.terms[k]);
    }
  }
}
