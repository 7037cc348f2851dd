#include <doctest.h>

#include <set>

#include "currentrep/fpmatrix.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::random_matrix;

TEST_CASE("prime field arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u}) {
    CHECK(is_prime(p));
    for (Fp a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
    // Fermat
    for (Fp a = 0; a < std::min<Fp>(p, 20); ++a) CHECK(fp_pow(a, p, p) == a);
  }
  CHECK(!is_prime(1));
  CHECK(!is_prime(4));
  CHECK(!is_prime(255));
  CHECK(fp_reduce(-1, 5) == 4);
}

TEST_CASE("identity and zero") {
  auto id = FpMatrix::identity(5, 7);
  CHECK(rank(id) == 5);
  CHECK(nullspace(id).rows() == 0);
  CHECK(rank(FpMatrix(4, 6, 3)) == 0);
  CHECK(nullspace(FpMatrix(4, 6, 3)).rows() == 6);
}

TEST_CASE("ad(e) on sl_2 has rank 2 and kernel spanned by e") {
  // basis order e, h, f; [e,e]=0, [e,h]=-2e, [e,f]=h; columns are images
  FpMatrix ad(3, {{0, -2, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(rank(ad) == 2);
  auto k = nullspace(ad);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 1) == 0);
  CHECK(k(0, 2) == 0);
  CHECK(k(0, 0) != 0);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int s = 0; s < 40; ++s) {
      auto a = random_matrix(1 + s % 5, 1 + s % 5, p, rng);
      CHECK(determinant(a) == testing::leibniz_det(a));
      CHECK((determinant(a) != 0) == (rank(a) == a.rows()));
    }
  }
}

TEST_CASE("rank against row-space enumeration over F_2 and F_3") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    for (int s = 0; s < 30; ++s) {
      auto a = random_matrix(3, 4, p, rng);
      std::set<std::vector<Fp>> span;
      for (int c0 = 0; c0 < (int)p; ++c0)
        for (int c1 = 0; c1 < (int)p; ++c1)
          for (int c2 = 0; c2 < (int)p; ++c2) {
            std::vector<Fp> v(4);
            for (int j = 0; j < 4; ++j) v[j] = (c0 * a(0, j) + c1 * a(1, j) + c2 * a(2, j)) % p;
            span.insert(v);
          }
      std::size_t expect = 0;
      for (std::size_t sz = span.size(); sz > 1; sz /= p) ++expect;
      CHECK(rank(a) == expect);
    }
  }
}

TEST_CASE("nullspace, left nullspace, solve and inverse") {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 50; ++s) {
    const std::uint32_t p = s % 2 ? 5 : 2;
    auto a = random_matrix(4, 6, p, rng);
    auto k = nullspace(a);
    CHECK(k.rows() + rank(a) == 6);
    CHECK((a * k.transpose()).is_zero());
    auto l = left_nullspace(a);
    CHECK(l.rows() + rank(a) == 4);
    CHECK((l * a).is_zero());
    FpVec x(6);
    for (auto& v : x) v = rng() % p;
    auto b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol);
    CHECK(a.apply(*sol) == b);
    auto sq = random_matrix(5, 5, p, rng);
    if (determinant(sq) != 0) CHECK((sq * inverse(sq)).is_identity());
  }
}

TEST_CASE("matmul kernel against the naive product") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 251u}) {
    auto a = random_matrix(17, 33, p, rng), b = random_matrix(33, 9, p, rng);
    auto c = a * b;
    for (std::size_t i = 0; i < 17; ++i)
      for (std::size_t j = 0; j < 9; ++j) {
        unsigned long long s = 0;
        for (std::size_t k = 0; k < 33; ++k) s += (unsigned long long)a(i, k) * b(k, j);
        CHECK(c(i, j) == s % p);
      }
  }
}

TEST_CASE("echelon basis coordinates and containment") {
  std::mt19937_64 rng(2);
  const std::uint32_t p = 7;
  auto a = random_matrix(5, 9, p, rng);
  EchelonBasis eb(9, p);
  for (std::size_t i = 0; i < a.rows(); ++i) eb.insert(a.row_vec(i));
  CHECK(eb.dim() == rank(a));
  FpVec v(9, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) kernel::axpy(v.data(), a.row(i), (Fp)(i + 1), 9, p);
  CHECK(eb.contains(v));
  auto c = eb.coordinates(v);
  REQUIRE(c);
  FpVec back(9, 0);
  for (std::size_t i = 0; i < eb.dim(); ++i) kernel::axpy(back.data(), eb.rows().row(i), (*c)[i], 9, p);
  CHECK(back == v);
  CHECK(eb.insert(v) == -1);
  CHECK(eb.free_columns().size() == 9 - eb.dim());
}
