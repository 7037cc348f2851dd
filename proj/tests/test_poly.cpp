#include <doctest.h>

#include "currentrep/fppoly.hpp"
#include "currentrep/truncpoly.hpp"
#include "helpers.hpp"

using namespace currentrep;

TEST_CASE("truncated ring examples") {
  const TruncPoly one_plus_t(3, 1, {1, 1}), one_minus_t(3, 1, {1, -1});
  CHECK(one_plus_t * one_minus_t == TruncPoly::constant(3, 1, 1));
  for (int m : {0, 1, 3}) CHECK((TruncPoly::t_power(5, m, 1) * TruncPoly::t_power(5, m, m)).is_zero());
  CHECK(invert(TruncPoly(3, 2, {1, 1})) == TruncPoly(3, 2, {1, -1, 1}));
  CHECK(poly_arith(PolyOp::Invert, TruncPoly(3, 2, {1, 1})) == TruncPoly(3, 2, {1, -1, 1}));
  CHECK(TruncPoly(3, 2, {0, 0, 2}).valuation() == 2);
  CHECK(TruncPoly(3, 2).valuation() == 3);
}

TEST_CASE("units, inverses and powers in R_m") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int m = 0; m <= 4; ++m) {
      for (int s = 0; s < 20; ++s) {
        std::vector<long long> c(m + 1);
        for (auto& v : c) v = rng() % p;
        if (c[0] == 0) c[0] = 1;
        TruncPoly a(p, m, c);
        CHECK(a * invert(a) == TruncPoly::constant(p, m, 1));
        TruncPoly slow = TruncPoly::constant(p, m, 1);
        for (int k = 0; k < 5; ++k) slow = slow * a;
        CHECK(pow(a, 5) == slow);
        // multiplication matrix is a ring map
        TruncPoly b(p, m, std::vector<long long>(m + 1, 1));
        CHECK(regular_matrix(a * b) == regular_matrix(a) * regular_matrix(b));
      }
    }
  }
  CHECK_THROWS(invert(TruncPoly(3, 2, {0, 1})));
}

TEST_CASE("Berkowitz over R_m agrees with Leibniz") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const int m = 2;
    for (int n = 1; n <= 4; ++n) {
      std::vector<std::vector<TruncPoly>> a(n, std::vector<TruncPoly>(n, TruncPoly(p, m)));
      for (auto& row : a)
        for (auto& x : row) x = TruncPoly(p, m, {(long long)(rng() % p), (long long)(rng() % p), (long long)(rng() % p)});
      const TruncPoly zero(p, m), one = TruncPoly::constant(p, m, 1);
      auto c = berkowitz(a, zero, one);
      REQUIRE(c.size() == std::size_t(n + 1));
      // det(-A) = c_n
      auto neg = a;
      for (auto& row : neg)
        for (auto& x : row) x = -x;
      CHECK(c[n] == testing::leibniz(neg, zero, one));
      // trace
      TruncPoly tr = zero;
      for (int i = 0; i < n; ++i) tr = tr + a[i][i];
      CHECK(c[1] == -tr);
    }
  }
}

TEST_CASE("charpoly and minpoly against determinants") {
  std::mt19937_64 rng(8);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int s = 0; s < 20; ++s) {
      auto a = testing::random_matrix(1 + s % 5, 1 + s % 5, p, rng);
      auto cp = charpoly(a);
      CHECK(cp.degree() == (int)a.rows());
      for (Fp x = 0; x < p; ++x) {
        auto xa = FpMatrix::identity(a.rows(), p).scaled(x) - a;
        CHECK(evaluate(cp, x) == testing::leibniz_det(xa));
      }
      CHECK(evaluate(cp, a).is_zero());
      auto mp = minpoly(a);
      CHECK(evaluate(mp, a).is_zero());
      CHECK((cp % mp).is_zero());
    }
  }
}

TEST_CASE("factorization into irreducibles") {
  std::mt19937_64 rng(10);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int s = 0; s < 25; ++s) {
      std::vector<Fp> c(2 + s % 9);
      for (auto& v : c) v = rng() % p;
      c.back() = 1;
      FpPoly f(p, c);
      auto fac = factor(f, rng);
      FpPoly prod = FpPoly::constant(p, 1);
      for (auto& [g, e] : fac) {
        CHECK(is_irreducible(g));
        CHECK(g.lead() == 1);
        for (int k = 0; k < e; ++k) prod = prod * g;
      }
      CHECK(prod == f);
    }
  }
  // degree <= 3: irreducible iff no root
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int s = 0; s < 40; ++s) {
      FpPoly f(p, {(Fp)(rng() % p), (Fp)(rng() % p), (Fp)(rng() % p), 1});
      bool root = false;
      for (Fp x = 0; x < p; ++x) root |= evaluate(f, x) == 0;
      CHECK(is_irreducible(f) == !root);
    }
  }
  // x^p - x splits into linear factors
  auto fac = factor(FpPoly::monomial(5, 5) - FpPoly::x(5), rng);
  CHECK(fac.size() == 5);
}

TEST_CASE("gcd and division") {
  const std::uint32_t p = 7;
  FpPoly a(p, {1, 2, 3, 1}), b(p, {3, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(monic(gcd(a * b, b * b)) == monic(b));
  CHECK(derivative(FpPoly::monomial(p, 7)).is_zero());
}
