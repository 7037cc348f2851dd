#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "currentrep/fpmatrix.hpp"

namespace currentrep {

// Element of R_m = F_p[t]/(t^{m+1}); coeffs[i] multiplies t^i.
class TruncPoly {
 public:
  TruncPoly() = default;
  TruncPoly(std::uint32_t p, int m);
  TruncPoly(std::uint32_t p, int m, const std::vector<long long>& coeffs);
  static TruncPoly constant(std::uint32_t p, int m, Fp v);
  static TruncPoly t_power(std::uint32_t p, int m, int k);

  std::uint32_t p() const { return p_; }
  int m() const { return m_; }
  Fp operator[](int i) const { return c_[i]; }
  void set(int i, Fp v) { c_[i] = v % p_; }
  const std::vector<Fp>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_unit() const { return c_[0] != 0; }
  // Smallest i with a nonzero t^i coefficient, or m+1 for zero.
  int valuation() const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator-(const TruncPoly& a);
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  TruncPoly scaled(Fp s) const;
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.c_ == b.c_;
  }
  std::string to_string() const;

 private:
  void check(const TruncPoly& o) const;
  std::uint32_t p_ = 2;
  int m_ = 0;
  std::vector<Fp> c_{0};
};

enum class PolyOp { Add, Sub, Mul, Invert, Pow };
// Dispatcher over the ring operations; unary ops ignore b, Pow uses `exponent`.
TruncPoly poly_arith(PolyOp op, const TruncPoly& a, const TruncPoly& b = {}, std::uint64_t exponent = 0);
TruncPoly invert(const TruncPoly& a);
TruncPoly pow(const TruncPoly& a, std::uint64_t e);
// Multiplication by a as an F_p-linear map of R_m in the basis 1, t, ..., t^m.
FpMatrix regular_matrix(const TruncPoly& a);

// R_m[eps]/(eps^2), used for directional derivatives.
struct DualTrunc {
  TruncPoly re, eps;
  DualTrunc() = default;
  DualTrunc(TruncPoly r, TruncPoly e) : re(std::move(r)), eps(std::move(e)) {}
  friend DualTrunc operator+(const DualTrunc& a, const DualTrunc& b) { return {a.re + b.re, a.eps + b.eps}; }
  friend DualTrunc operator-(const DualTrunc& a, const DualTrunc& b) { return {a.re - b.re, a.eps - b.eps}; }
  friend DualTrunc operator-(const DualTrunc& a) { return {-a.re, -a.eps}; }
  friend DualTrunc operator*(const DualTrunc& a, const DualTrunc& b) {
    return {a.re * b.re, a.re * b.eps + a.eps * b.re};
  }
  friend bool operator==(const DualTrunc& a, const DualTrunc& b) = default;
};

// Coefficients of det(x I - A) for a square matrix over a commutative ring, index k holding
// the coefficient of x^{n-k} (index 0 is 1). Division free (Samuelson-Berkowitz).
template <class Ring>
std::vector<Ring> berkowitz(const std::vector<std::vector<Ring>>& a, const Ring& zero, const Ring& one) {
  const std::size_t n = a.size();
  std::vector<Ring> c{one};
  for (std::size_t k = 1; k <= n; ++k) {
    // leading k x k block: M = a[0..k-1)x[0..k-1), column C, row R, corner a[k-1][k-1]
    const std::size_t s = k - 1;
    std::vector<Ring> t(k + 1, zero);
    t[0] = one;
    t[1] = -a[s][s];
    std::vector<Ring> col(s, zero);
    for (std::size_t i = 0; i < s; ++i) col[i] = a[i][s];
    for (std::size_t j = 2; j <= k; ++j) {
      Ring dotv = zero;
      for (std::size_t i = 0; i < s; ++i) dotv = dotv + a[s][i] * col[i];
      t[j] = -dotv;
      std::vector<Ring> next(s, zero);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t l = 0; l < s; ++l) next[i] = next[i] + a[i][l] * col[l];
      col = std::move(next);
    }
    std::vector<Ring> nc(k + 1, zero);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) nc[i] = nc[i] + t[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

}  // namespace currentrep
