#include "doctest.h"

#include <set>

#include "gnl/errors.hpp"
#include "gnl/family.hpp"
#include "oracles.hpp"

using namespace gnl;

TEST_CASE("build: small instances") {
  const auto n1 = family::build(1);
  CHECK(n1.algebra.dim() == 12);
  CHECK(n1.layout.wedge.empty());
  CHECK(center(n1.algebra).dim() == 5);

  const auto n2 = family::build(2);
  const auto& lay = n2.layout;
  const auto w = lay.wedge_index(0, 1);
  CHECK(n2.algebra.label(w) == "e1^e2");
  CHECK(n2.algebra.bracket_basis(lay.e[0], lay.e[1]) == SparseVec{{w, Rational(1)}});
  CHECK(n2.algebra.bracket_basis(lay.e[1], lay.e[0]) == SparseVec{{w, Rational(-1)}});
  CHECK_THROWS_AS(family::build(0), InputError);
}

TEST_CASE("basis order follows B1, B2, B3") {
  const auto n3 = family::build(3, false);
  const std::vector<std::string> expect = {"e1", "e2", "e3", "a",  "b",  "x",  "u",  "y",     "e1^e2",
                                           "e1^e3", "e2^e3", "c", "x1", "x2", "x3", "u1", "u2", "u3",
                                           "y1", "y2", "y3", "f", "h"};
  CHECK(n3.algebra.labels() == expect);
  CHECK(n3.layout.layer(1).size() == 6);
  CHECK(n3.layout.layer(2).size() == 9);
  CHECK(n3.layout.layer(3).size() == 8);
}

TEST_CASE("dims closed form") {
  CHECK(family::dims(1) == family::Dims{4, 4, 4, 5, 1, 2, 1});
  CHECK(family::dims(4) == family::Dims{7, 13, 10, 20, 10, 2, 1});
  const auto d17 = family::dims(17);
  CHECK(d17.d1 == 20);
  CHECK(d17.d2 == 156);
  CHECK(d17.d3 == 36);
  CHECK(d17.z == 189);
  CHECK(family::dims(200).z == 20502);
}

TEST_CASE("measured dims agree with the closed form") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto built = family::build(n);
    CHECK(family::measured_dims(built) == family::dims(n));
  }
}

TEST_CASE("only [[a,b],a] and [[b,a],a] are nonzero double brackets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto built = family::build(n, false);
    const auto& L = built.algebra;
    const auto& lay = built.layout;
    std::set<std::array<std::size_t, 3>> nonzero;
    for (std::size_t t = 0; t < L.dim(); ++t) {
      for (std::size_t v = 0; v < L.dim(); ++v) {
        const auto tv = L.bracket_basis(t, v);
        for (std::size_t w = 0; w < L.dim(); ++w) {
          SparseVec acc;
          for (const auto& [k, q] : tv) {
            for (const auto& [l, r] : L.bracket_basis(k, w)) acc[l] += q * r;
          }
          std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
          if (!acc.empty()) nonzero.insert({t, v, w});
        }
      }
    }
    const std::set<std::array<std::size_t, 3>> expect = {{lay.a, lay.b, lay.a}, {lay.b, lay.a, lay.a}};
    CHECK(nonzero == expect);
  }
}

TEST_CASE("center is spanned by L2E, X, U, Y, f, h") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto built = family::build(n, false);
    const auto& lay = built.layout;
    std::vector<RatVec> gens;
    auto add = [&](std::size_t i) { gens.push_back(unit_vector(lay.dim, i)); };
    for (auto i : lay.wedge) add(i);
    for (auto i : lay.xs) add(i);
    for (auto i : lay.us) add(i);
    for (auto i : lay.ys) add(i);
    add(lay.f);
    add(lay.h);
    CHECK(center(built.algebra) == Subspace::span(lay.dim, gens));
  }
}

TEST_CASE("canonical grading polynomial is the three-part product") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto built = family::build(n, false);
    const auto d = family::dims(n);
    const auto expect = expand({{{1}, d.d1}, {{2}, d.d2}, {{3}, d.d3}}, 1);
    CHECK(associated_polynomial(built.algebra, built.grading) == expect);
  }
}

TEST_CASE("rebase_check") {
  CHECK(family::rebase_check(2, RatMatrix::identity(2)));
  RatMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(family::rebase_check(2, swap));
  RatMatrix rot(3, 3);
  rot(0, 1) = Rational(1, 2);
  rot(1, 2) = -3;
  rot(2, 0) = 1;
  rot(0, 0) = 5;
  CHECK(family::rebase_check(3, rot));
  CHECK_THROWS_AS(family::rebase_check(2, RatMatrix(2, 2)), InputError);
}

TEST_CASE("fine grading") {
  const auto w1 = family::fine_weights(1);
  const auto n1 = family::build(1, false);
  const auto& lay = n1.layout;
  CHECK(w1[lay.e[0]] == 16);
  CHECK(w1[lay.xs[0]] == w1[lay.e[0]] + w1[lay.x]);
  CHECK(w1[lay.us[0]] == 18);
  CHECK(w1[lay.ys[0]] == 18);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto built = family::build(n, false);
    CHECK(validate(built.algebra, family::fine_grading(n)).empty());
  }
  const auto w2 = family::fine_weights(2);
  const auto lay2 = family::layout(2);
  CHECK(w2[lay2.e[1]] == 85);
  CHECK(w2[lay2.wedge[0]] == 101);
}

TEST_CASE("fine grading lengths against the convolution oracle") {
  // Frozen from oracle::expand_weights; recomputed here as well.
  const std::vector<long> expect = {500, 8370, 286756};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto built = family::build(n, false);
    const auto len = length(associated_polynomial(built.algebra, family::fine_grading(n)));
    CHECK(len == oracle::sum_abs(oracle::expand_weights(family::fine_weights(n))));
    CHECK(len == expect[n - 1]);
    CHECK(len > mpz_class(1) << family::dims(n).z);
  }
}
