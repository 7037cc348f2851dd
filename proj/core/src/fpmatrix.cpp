#include "currentrep/fpmatrix.hpp"

#include <algorithm>
#include <limits>

#include "currentrep/error.hpp"

namespace currentrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp fp_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Fp>(r < 0 ? r + p : r);
}

Fp fp_pow(Fp a, std::uint64_t e, std::uint32_t p) {
  Fp r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

Fp fp_inv(Fp a, std::uint32_t p) {
  if (a % p == 0) raise(ErrorKind::NotInvertible, "zero has no inverse in F_p");
  return fp_pow(a, p - 2, p);
}

namespace kernel {
namespace {

template <std::uint32_t P>
struct FixedMod {
  static constexpr std::uint32_t p() { return P; }
  static std::uint32_t reduce(std::uint32_t x) { return x % P; }
};

struct DynMod {
  std::uint32_t q;
  std::uint32_t p() const { return q; }
  std::uint32_t reduce(std::uint32_t x) const { return x % q; }
};

template <class F>
decltype(auto) dispatch(std::uint32_t p, F&& f) {
  switch (p) {
    case 2: return f(FixedMod<2>{});
    case 3: return f(FixedMod<3>{});
    case 5: return f(FixedMod<5>{});
    case 7: return f(FixedMod<7>{});
    case 11: return f(FixedMod<11>{});
    case 13: return f(FixedMod<13>{});
    default: return f(DynMod{p});
  }
}

template <class M>
void axpy_impl(std::uint8_t* __restrict dst, const std::uint8_t* __restrict src, std::uint32_t c,
               std::size_t n, M mod) {
  for (std::size_t k = 0; k < n; ++k)
    dst[k] = static_cast<std::uint8_t>(mod.reduce(dst[k] + c * static_cast<std::uint32_t>(src[k])));
}

template <class M>
void scale_impl(std::uint8_t* __restrict dst, std::uint32_t c, std::size_t n, M mod) {
  for (std::size_t k = 0; k < n; ++k)
    dst[k] = static_cast<std::uint8_t>(mod.reduce(c * static_cast<std::uint32_t>(dst[k])));
}

template <class Acc, class M>
void matmul_impl(const std::uint8_t* __restrict a, const std::uint8_t* __restrict b,
                 std::uint8_t* __restrict out, std::size_t r, std::size_t k, std::size_t c, M mod) {
  const std::uint64_t q = mod.p() - 1;
  const std::uint64_t step = q * q == 0 ? 1 : q * q;
  const std::uint64_t cap = std::numeric_limits<Acc>::max() - q;
  const std::size_t limit = static_cast<std::size_t>(std::max<std::uint64_t>(1, cap / step));
  std::vector<Acc> acc(c);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(acc.begin(), acc.end(), Acc{0});
    Acc* __restrict ac = acc.data();
    std::size_t count = 0;
    const std::uint8_t* arow = a + i * k;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const Acc x = arow[kk];
      if (!x) continue;
      const std::uint8_t* __restrict brow = b + kk * c;
      for (std::size_t j = 0; j < c; ++j) ac[j] = static_cast<Acc>(ac[j] + x * brow[j]);
      if (++count == limit) {
        for (std::size_t j = 0; j < c; ++j) ac[j] = static_cast<Acc>(mod.reduce(ac[j]));
        count = 0;
      }
    }
    std::uint8_t* orow = out + i * c;
    for (std::size_t j = 0; j < c; ++j) orow[j] = static_cast<std::uint8_t>(mod.reduce(ac[j]));
  }
}

template <class M>
Fp dot_impl(const std::uint8_t* __restrict a, const std::uint8_t* __restrict b, std::size_t n,
            M mod) {
  std::uint64_t total = 0;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = std::min(n, k + 4096);
    std::uint32_t s = 0;
    for (std::size_t j = k; j < end; ++j) s += static_cast<std::uint32_t>(a[j]) * b[j];
    total += s;
    k = end;
  }
  return static_cast<Fp>(total % mod.p());
}

}  // namespace

void axpy(std::uint8_t* dst, const std::uint8_t* src, Fp c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  dispatch(p, [&](auto mod) { axpy_impl(dst, src, c, n, mod); });
}

void scale(std::uint8_t* dst, Fp c, std::size_t n, std::uint32_t p) {
  if (c == 1) return;
  dispatch(p, [&](auto mod) { scale_impl(dst, c, n, mod); });
}

void matmul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t r,
            std::size_t k, std::size_t c, std::uint32_t p) {
  const std::uint64_t q = p - 1;
  const bool narrow = q * q * k + q < 65536;
  dispatch(p, [&](auto mod) {
    if (narrow)
      matmul_impl<std::uint16_t>(a, b, out, r, k, c, mod);
    else
      matmul_impl<std::uint32_t>(a, b, out, r, k, c, mod);
  });
}

Fp dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint32_t p) {
  return dispatch(p, [&](auto mod) { return dot_impl(a, b, n, mod); });
}

}  // namespace kernel

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p > 255) raise(ErrorKind::InvalidDescriptor, "field characteristic must be below 256");
}

FpMatrix::FpMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows)
    : FpMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, p) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) raise(ErrorKind::InternalError, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : r) set(i, j++, fp_reduce(v, p));
    ++i;
  }
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVec>& rows, std::size_t cols, std::uint32_t p) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  return m;
}

FpVec FpMatrix::col_vec(std::size_t j) const {
  FpVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + j];
  return v;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

bool FpMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  constexpr std::size_t B = 32;
  for (std::size_t i0 = 0; i0 < rows_; i0 += B)
    for (std::size_t j0 = 0; j0 < cols_; j0 += B)
      for (std::size_t i = i0; i < std::min(rows_, i0 + B); ++i)
        for (std::size_t j = j0; j < std::min(cols_, j0 + B); ++j)
          t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

FpMatrix FpMatrix::scaled(Fp c) const {
  FpMatrix r = *this;
  if (c == 0) {
    std::fill(r.data_.begin(), r.data_.end(), 0);
    return r;
  }
  kernel::scale(r.data_.data(), c, r.data_.size(), p_);
  return r;
}

FpVec FpMatrix::apply(const FpVec& v) const {
  if (v.size() != cols_) raise(ErrorKind::InternalError, "apply: dimension mismatch");
  FpVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i] = static_cast<std::uint8_t>(kernel::dot(row(i), v.data(), cols_, p_));
  return out;
}

FpMatrix FpMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  FpMatrix s(nr, nc, p_);
  for (std::size_t i = 0; i < nr; ++i) std::copy(row(r0 + i) + c0, row(r0 + i) + c0 + nc, s.row(i));
  return s;
}

void FpMatrix::append_row(const std::uint8_t* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InternalError, "matrix add: shape mismatch");
  kernel::axpy(data_.data(), o.data_.data(), 1, data_.size(), p_);
  return *this;
}

FpMatrix& FpMatrix::operator-=(const FpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InternalError, "matrix sub: shape mismatch");
  kernel::axpy(data_.data(), o.data_.data(), p_ - 1, data_.size(), p_);
  return *this;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_) raise(ErrorKind::InternalError, "matrix mul: shape mismatch");
  FpMatrix c(a.rows_, b.cols_, a.p_);
  kernel::matmul(a.data(), b.data(), c.data(), a.rows_, a.cols_, b.cols_, a.p_);
  return c;
}

FpMatrix power(const FpMatrix& a, std::uint64_t e) {
  FpMatrix r = FpMatrix::identity(a.rows(), a.p());
  FpMatrix b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FpMatrix commutator(const FpMatrix& a, const FpMatrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(FpMatrix& a) {
  const std::uint32_t p = a.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv), a.row(piv) + a.cols(), a.row(r));
    kernel::scale(a.row(r), fp_inv(a(r, c), p), a.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Fp f = a(i, c);
      if (f) kernel::axpy(a.row(i), a.row(r), p - f, a.cols(), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FpMatrix a) {
  EchelonBasis e(a.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  return e.dim();
}

FpMatrix nullspace(const FpMatrix& a) {
  FpMatrix r = a;
  auto piv = rref(r);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  FpMatrix k(a.cols() - piv.size(), a.cols(), a.p());
  std::size_t idx = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    k.set(idx, f, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) k.set(idx, piv[i], fp_neg(r(i, f), a.p()));
    ++idx;
  }
  return k;
}

FpMatrix left_nullspace(const FpMatrix& a) { return nullspace(a.transpose()); }

std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b) {
  if (b.size() != a.rows()) raise(ErrorKind::InternalError, "solve: dimension mismatch");
  FpMatrix aug(a.rows(), a.cols() + 1, a.p());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + a.cols(), aug.row(i));
    aug.set(i, a.cols(), b[i]);
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  FpVec x(a.cols(), 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

FpMatrix inverse(const FpMatrix& a) {
  if (!a.square()) raise(ErrorKind::NotInvertible, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FpMatrix aug(n, 2 * n, a.p());
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i), a.row(i) + n, aug.row(i));
    aug.set(i, n + i, 1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) raise(ErrorKind::NotInvertible, "singular matrix");
  return aug.submatrix(0, n, n, n);
}

Fp determinant(FpMatrix a) {
  if (!a.square()) raise(ErrorKind::InternalError, "determinant of a non-square matrix");
  const std::uint32_t p = a.p();
  const std::size_t n = a.rows();
  Fp det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(a.row(piv), a.row(piv) + n, a.row(c));
      det = fp_neg(det, p);
    }
    Fp d = a(c, c);
    det = fp_mul(det, d, p);
    Fp inv = fp_inv(d, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      Fp f = fp_mul(a(i, c), inv, p);
      if (f) kernel::axpy(a.row(i), a.row(c), p - f, n, p);
    }
  }
  return det;
}

bool row_space_contains(const FpMatrix& big, const FpMatrix& small) {
  EchelonBasis e(big.cols(), big.p());
  for (std::size_t i = 0; i < big.rows(); ++i) e.insert(big.row(i));
  for (std::size_t i = 0; i < small.rows(); ++i)
    if (!e.contains(small.row_vec(i))) return false;
  return true;
}

void EchelonBasis::reduce(std::uint8_t* v, std::uint8_t* coeffs) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Fp c = v[pivots_[i]];
    if (coeffs) coeffs[i] = static_cast<std::uint8_t>(c);
    if (c) kernel::axpy(v, rows_.row(i), p_ - c, n_, p_);
  }
}

bool EchelonBasis::contains(const FpVec& v) const {
  FpVec w = v;
  reduce(w.data());
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

long EchelonBasis::insert(const std::uint8_t* v) {
  FpVec w(v, v + n_);
  reduce(w.data());
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return -1;
  kernel::scale(w.data(), fp_inv(w[piv], p_), n_, p_);
  rows_.append_row(w.data());
  pivots_.push_back(piv);
  return static_cast<long>(pivots_.size() - 1);
}

std::optional<FpVec> EchelonBasis::coordinates(const FpVec& v) const {
  FpVec w = v;
  FpVec c(pivots_.size(), 0);
  reduce(w.data(), c.data());
  if (!std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; })) return std::nullopt;
  return c;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<bool> used(n_, false);
  for (auto c : pivots_) used[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (!used[j]) out.push_back(j);
  return out;
}

}  // namespace currentrep
