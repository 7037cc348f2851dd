#include "currentrep/truncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "currentrep/error.hpp"

namespace currentrep {

TruncPoly::TruncPoly(std::uint32_t p, int m) : p_(p), m_(m), c_(static_cast<std::size_t>(m) + 1, 0) {
  if (m < 0) raise(ErrorKind::InvalidDescriptor, "truncation order must be nonnegative");
  if (!is_prime(p)) raise(ErrorKind::InvalidDescriptor, "characteristic must be prime");
}

TruncPoly::TruncPoly(std::uint32_t p, int m, const std::vector<long long>& coeffs) : TruncPoly(p, m) {
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(m); ++i) c_[i] = fp_reduce(coeffs[i], p);
}

TruncPoly TruncPoly::constant(std::uint32_t p, int m, Fp v) {
  TruncPoly r(p, m);
  r.c_[0] = v % p;
  return r;
}

TruncPoly TruncPoly::t_power(std::uint32_t p, int m, int k) {
  TruncPoly r(p, m);
  if (k <= m) r.c_[k] = 1;
  return r;
}

bool TruncPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Fp v) { return v == 0; });
}

int TruncPoly::valuation() const {
  for (int i = 0; i <= m_; ++i)
    if (c_[i]) return i;
  return m_ + 1;
}

void TruncPoly::check(const TruncPoly& o) const {
  if (p_ != o.p_ || m_ != o.m_) raise(ErrorKind::AlgebraMismatch, "truncated polynomials over different rings");
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  check(o);
  for (int i = 0; i <= m_; ++i) c_[i] = fp_add(c_[i], o.c_[i], p_);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  check(o);
  for (int i = 0; i <= m_; ++i) c_[i] = fp_sub(c_[i], o.c_[i], p_);
  return *this;
}

TruncPoly operator-(const TruncPoly& a) {
  TruncPoly r = a;
  for (auto& v : r.c_) v = fp_neg(v, a.p_);
  return r;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  a.check(b);
  TruncPoly r(a.p_, a.m_);
  for (int i = 0; i <= a.m_; ++i) {
    if (!a.c_[i]) continue;
    for (int j = 0; i + j <= a.m_; ++j) r.c_[i + j] = fp_add(r.c_[i + j], fp_mul(a.c_[i], b.c_[j], a.p_), a.p_);
  }
  return r;
}

TruncPoly TruncPoly::scaled(Fp s) const {
  TruncPoly r = *this;
  for (auto& v : r.c_) v = fp_mul(v, s, p_);
  return r;
}

std::string TruncPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= m_; ++i) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  if (first) os << "0";
  return os.str();
}

TruncPoly invert(const TruncPoly& a) {
  if (!a.is_unit()) raise(ErrorKind::NotInvertible, "element of R_m with zero constant term");
  const std::uint32_t p = a.p();
  const int m = a.m();
  // b_0 = a_0^{-1}, b_k = -a_0^{-1} sum_{j=1}^{k} a_j b_{k-j}
  TruncPoly b(p, m);
  Fp inv0 = fp_inv(a[0], p);
  b.set(0, inv0);
  for (int k = 1; k <= m; ++k) {
    Fp s = 0;
    for (int j = 1; j <= k; ++j) s = fp_add(s, fp_mul(a[j], b[k - j], p), p);
    b.set(k, fp_neg(fp_mul(inv0, s, p), p));
  }
  return b;
}

TruncPoly pow(const TruncPoly& a, std::uint64_t e) {
  TruncPoly r = TruncPoly::constant(a.p(), a.m(), 1);
  TruncPoly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

TruncPoly poly_arith(PolyOp op, const TruncPoly& a, const TruncPoly& b, std::uint64_t exponent) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    case PolyOp::Invert: return invert(a);
    case PolyOp::Pow: return pow(a, exponent);
  }
  raise(ErrorKind::InternalError, "unknown ring operation");
}

FpMatrix regular_matrix(const TruncPoly& a) {
  const int m = a.m();
  FpMatrix r(m + 1, m + 1, a.p());
  for (int j = 0; j <= m; ++j)
    for (int i = j; i <= m; ++i) r.set(i, j, a[i - j]);
  return r;
}

}  // namespace currentrep
