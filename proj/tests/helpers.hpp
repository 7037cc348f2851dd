#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "currentrep/algebra.hpp"
#include "currentrep/element.hpp"

namespace testing {

using namespace currentrep;

// Leibniz expansion, the slow independent oracle for determinants over any commutative ring.
template <class Ring>
Ring leibniz(const std::vector<std::vector<Ring>>& a, const Ring& zero, const Ring& one) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Ring total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Ring term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct ModP {
  long long v;
  std::uint32_t p;
  ModP operator+(const ModP& o) const { return {(v + o.v) % p, p}; }
  ModP operator-(const ModP& o) const { return {((v - o.v) % (long long)p + p) % p, p}; }
  ModP operator*(const ModP& o) const { return {(v * o.v) % p, p}; }
};

inline Fp leibniz_det(const FpMatrix& a) {
  std::vector<std::vector<ModP>> b(a.rows(), std::vector<ModP>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b[i][j] = {(long long)a(i, j), a.p()};
  return static_cast<Fp>(leibniz(b, ModP{0, a.p()}, ModP{1, a.p()}).v);
}

inline FpMatrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng) {
  FpMatrix a(r, c, p);
  std::uniform_int_distribution<Fp> d(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a.set(i, j, d(rng));
  return a;
}

struct Sl2 {
  AlgebraPtr alg;
  FpMatrix e, f, h;
  explicit Sl2(std::uint32_t p, int m = 1)
      : alg(CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, p, m))),
        e(p, {{0, 1}, {0, 0}}),
        f(p, {{0, 0}, {1, 0}}),
        h(p, {{1, 0}, {0, -1}}) {}
  CurrentElement at(const FpMatrix& x, int degree) const { return CurrentElement::homogeneous(alg, x, degree); }
};

}  // namespace testing
