#include <doctest.h>

#include "currentrep/error.hpp"
#include "currentrep/invariants.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

TEST_CASE("generator indices") {
  CHECK(invariant_indices(make_descriptor(AlgebraKind::GL, 3, 3, 1)) == std::vector<int>{1, 2, 3});
  CHECK(invariant_indices(make_descriptor(AlgebraKind::SL, 3, 2, 1)) == std::vector<int>{2, 3});
}

TEST_CASE("invariants of simple elements of (sl_2)_1") {
  Sl2 s(3);
  for (int j = 0; j <= 1; ++j) CHECK(eval_invariant(2, j, s.at(s.e, 0)) == 0);
  const auto h = s.at(s.h, 0);
  CHECK(eval_invariant(2, 0, h) == 2);  // det h = -1
  CHECK(eval_invariant(2, 1, h) == 0);
  const auto hh = h + s.at(s.h, 1);
  CHECK(eval_invariant(2, 0, hh) == 2);
  CHECK(eval_invariant(2, 1, hh) == 1);  // -2 mod 3
  CHECK_THROWS_AS(eval_invariant(1, 0, h), Error);
  CHECK_THROWS_AS(eval_invariant(2, 2, h), Error);
}

TEST_CASE("characteristic coefficients against Leibniz over R_m") {
  auto a = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 5, 2));
  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    auto x = CurrentElement::random(a, rng);
    auto c = characteristic_invariants(x);
    std::vector<std::vector<TruncPoly>> m(3, std::vector<TruncPoly>(3));
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) m[r][col] = x.entry(r, col);
    CHECK(c[3] == testing::leibniz(m, TruncPoly(5, 2), TruncPoly::constant(5, 2, 1)));
    TruncPoly tr(5, 2);
    for (int i = 0; i < 3; ++i) tr = tr + m[i][i];
    CHECK(c[1] == tr);
    // p_{i,0} depends only on x_0
    auto x0 = CurrentElement::homogeneous(a, x.coeff(0), 0);
    for (int i = 1; i <= 3; ++i) CHECK(eval_invariant(i, 0, x) == eval_invariant(i, 0, x0));
  }
}

TEST_CASE("conjugation invariance") {
  for (auto d : {make_descriptor(AlgebraKind::SL, 2, 3, 1), make_descriptor(AlgebraKind::GL, 2, 2, 1),
                 make_descriptor(AlgebraKind::GL, 3, 3, 2)}) {
    auto a = CurrentAlgebra::make(d);
    std::mt19937_64 rng(7);
    auto x = CurrentElement::random(a, rng);
    std::vector<FpMatrix> id(d.m + 1, FpMatrix(d.n, d.n, d.p));
    id[0] = FpMatrix::identity(d.n, d.p);
    CHECK(conjugate_element(x, id) == x);
    for (int s = 0; s < 20; ++s) {
      auto g = random_conjugator(*a, rng, s % 2 == 1);
      auto gi = inverse_over_ring(g, d.m);
      // g g^-1 = 1 over R_m
      auto prod = truncated_product(g, gi, d.m);
      CHECK(prod[0].is_identity());
      for (int i = 1; i <= d.m; ++i) CHECK(prod[i].is_zero());
      CHECK(invariant_vector(conjugate_element(x, g)) == invariant_vector(x));
    }
    auto rep = invariance_check(a, 100, 3);
    CHECK(rep.failures == 0);
    CHECK(rep.ad_failures == 0);
  }
}

TEST_CASE("independence") {
  auto a = CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, 3, 1));
  auto r = independence_check(a, 50, 1);
  CHECK(r.functions == 2);
  CHECK(r.full_rank());
  CHECK(r.rank_at_zero == 0);
  auto b = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 2, 2, 1));
  auto rb = independence_check(b, 50, 1);
  CHECK(rb.functions == 4);
  CHECK(rb.full_rank());
  CHECK(invariant_jacobian(CurrentElement(a)).is_zero());
}

TEST_CASE("derivatives from dual numbers and from the t-adic difference") {
  for (auto d : {make_descriptor(AlgebraKind::SL, 3, 2, 1), make_descriptor(AlgebraKind::GL, 2, 5, 2)}) {
    auto a = CurrentAlgebra::make(d);
    CHECK(derivative_selftest(a, 30, 2).mismatches == 0);
    std::mt19937_64 rng(4);
    auto x = CurrentElement::random(a, rng), y = CurrentElement::random(a, rng);
    // linearity in the direction
    auto d1 = invariant_derivative(x, y), d2 = invariant_derivative(x, y.scaled(2));
    for (std::size_t i = 0; i < d1.size(); ++i) CHECK(d2[i] == fp_mul(2, d1[i], d.p));
  }
}
