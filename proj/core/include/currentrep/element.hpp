#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "currentrep/algebra.hpp"
#include "currentrep/fpmatrix.hpp"
#include "currentrep/fppoly.hpp"
#include "currentrep/truncpoly.hpp"

namespace currentrep {

// x = sum_i x_i t^i with x_i in g, stored as (m+1) coefficient matrices.
class CurrentElement {
 public:
  CurrentElement() = default;
  explicit CurrentElement(AlgebraPtr alg);
  // Validates membership in g_m (trace zero for sl).
  static CurrentElement from_coeffs(AlgebraPtr alg, std::vector<FpMatrix> coeffs);
  static CurrentElement from_coords(AlgebraPtr alg, const FpVec& coords);
  static CurrentElement basis_element(AlgebraPtr alg, int k);
  static CurrentElement random(AlgebraPtr alg, std::mt19937_64& rng);
  // Local element x of g placed in degree i.
  static CurrentElement homogeneous(AlgebraPtr alg, const FpMatrix& x, int degree);

  const AlgebraPtr& algebra() const { return alg_; }
  const AlgebraDescriptor& desc() const { return alg_->desc(); }
  const FpMatrix& coeff(int i) const { return coeffs_[i]; }
  const std::vector<FpMatrix>& coeffs() const { return coeffs_; }
  FpVec coords() const;
  bool is_zero() const;
  // Entry (r, c) as an element of R_m.
  TruncPoly entry(int r, int c) const;
  std::string to_string() const;

  CurrentElement& operator+=(const CurrentElement& o);
  CurrentElement& operator-=(const CurrentElement& o);
  friend CurrentElement operator+(CurrentElement a, const CurrentElement& b) { return a += b; }
  friend CurrentElement operator-(CurrentElement a, const CurrentElement& b) { return a -= b; }
  CurrentElement scaled(Fp s) const;
  friend bool operator==(const CurrentElement& a, const CurrentElement& b);

 private:
  void check_same(const CurrentElement& o) const;
  AlgebraPtr alg_;
  std::vector<FpMatrix> coeffs_;
};

// Products of coefficient-matrix sequences over R_m, with truncation.
std::vector<FpMatrix> truncated_product(const std::vector<FpMatrix>& a, const std::vector<FpMatrix>& b, int m);

CurrentElement bracket(const CurrentElement& x, const CurrentElement& y);
CurrentElement p_map(const CurrentElement& x);
// x^{[p]^k}
CurrentElement p_map_iterate(const CurrentElement& x, int k);

enum class ElementClass { Nilpotent, Semisimple, Mixed };
std::string element_class_name(ElementClass c);
ElementClass classify_element(const CurrentElement& x);

struct JordanDecomposition {
  CurrentElement semisimple, nilpotent;
};
JordanDecomposition jordan_decompose(const CurrentElement& x);
// x as an F_p-linear operator on R_m^n of size n(m+1).
FpMatrix flatten(const CurrentElement& x);

Fp kappa(const CurrentElement& x, const CurrentElement& y);
FpMatrix gram_matrix(const CurrentAlgebra& alg);
// Matrix of ad(x) on coordinates (column convention).
FpMatrix ad_matrix(const CurrentElement& x);
std::vector<CurrentElement> centralizer_basis(const CurrentElement& x);
bool is_regular(const CurrentElement& x);

}  // namespace currentrep
