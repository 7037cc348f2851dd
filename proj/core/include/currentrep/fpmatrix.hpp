#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace currentrep {

// Elements of F_p are stored reduced in [0, p). Primes below 256 are supported.
using Fp = std::uint32_t;
using FpVec = std::vector<std::uint8_t>;

bool is_prime(std::uint64_t n);
Fp fp_reduce(long long v, std::uint32_t p);
Fp fp_inv(Fp a, std::uint32_t p);
Fp fp_pow(Fp a, std::uint64_t e, std::uint32_t p);
inline Fp fp_add(Fp a, Fp b, std::uint32_t p) { Fp s = a + b; return s >= p ? s - p : s; }
inline Fp fp_sub(Fp a, Fp b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
inline Fp fp_neg(Fp a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline Fp fp_mul(Fp a, Fp b, std::uint32_t p) { return (a * b) % p; }

namespace kernel {
// dst[k] = dst[k] + c * src[k]
void axpy(std::uint8_t* dst, const std::uint8_t* src, Fp c, std::size_t n, std::uint32_t p);
void scale(std::uint8_t* dst, Fp c, std::size_t n, std::uint32_t p);
// C (r x c) = A (r x k) * B (k x c), all row-major
void matmul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t r,
            std::size_t k, std::size_t c, std::uint32_t p);
Fp dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint32_t p);
}  // namespace kernel

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  FpMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows);
  static FpMatrix identity(std::size_t n, std::uint32_t p);
  static FpMatrix from_rows(const std::vector<FpVec>& rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }
  bool square() const { return rows_ == cols_; }

  Fp operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Fp v) { data_[i * cols_ + j] = static_cast<std::uint8_t>(v); }
  void add_to(std::size_t i, std::size_t j, Fp v) { set(i, j, fp_add((*this)(i, j), v, p_)); }
  std::uint8_t* row(std::size_t i) { return data_.data() + i * cols_; }
  const std::uint8_t* row(std::size_t i) const { return data_.data() + i * cols_; }
  FpVec row_vec(std::size_t i) const { return FpVec(row(i), row(i) + cols_); }
  FpVec col_vec(std::size_t j) const;
  std::uint8_t* data() { return data_.data(); }
  const std::uint8_t* data() const { return data_.data(); }
  const std::vector<std::uint8_t>& storage() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  FpMatrix transpose() const;
  FpMatrix scaled(Fp c) const;
  FpMatrix negated() const { return scaled(fp_neg(1, p_)); }
  FpVec apply(const FpVec& v) const;  // column convention A v
  FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void append_row(const std::uint8_t* v);
  void resize_rows(std::size_t r) { rows_ = r; data_.resize(r * cols_); }

  FpMatrix& operator+=(const FpMatrix& o);
  FpMatrix& operator-=(const FpMatrix& o);
  friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
  friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint8_t> data_;
};

FpMatrix power(const FpMatrix& a, std::uint64_t e);
FpMatrix commutator(const FpMatrix& a, const FpMatrix& b);
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(FpMatrix& a);
std::size_t rank(FpMatrix a);
// Rows of the result span { v : a v = 0 }.
FpMatrix nullspace(const FpMatrix& a);
// Rows of the result span { u : u a = 0 }.
FpMatrix left_nullspace(const FpMatrix& a);
std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b);
FpMatrix inverse(const FpMatrix& a);
Fp determinant(FpMatrix a);
// Is the row space of `small` contained in the row space of `big`?
bool row_space_contains(const FpMatrix& big, const FpMatrix& small);

// Incrementally built basis in semi-echelon form: each row has a pivot equal to 1 and
// vanishes at the pivots of all earlier rows.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(std::size_t n, std::uint32_t p) : n_(n), p_(p), rows_(0, n, p) {}

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return n_; }
  std::uint32_t p() const { return p_; }
  const FpMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v modulo the span. Optionally records the multipliers used for each row.
  void reduce(std::uint8_t* v, std::uint8_t* coeffs = nullptr) const;
  bool contains(const FpVec& v) const;
  // Inserts v (after reduction) if independent; returns the new row index or -1.
  long insert(const std::uint8_t* v);
  long insert(const FpVec& v) { return insert(v.data()); }
  // Coordinates of v with respect to the rows; v must lie in the span.
  std::optional<FpVec> coordinates(const FpVec& v) const;
  // Non-pivot columns, in increasing order.
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t n_ = 0;
  std::uint32_t p_ = 2;
  FpMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace currentrep
