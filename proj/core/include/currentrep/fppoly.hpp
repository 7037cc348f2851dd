#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "currentrep/fpmatrix.hpp"

namespace currentrep {

// Polynomial over F_p, coefficients low degree first, no trailing zeros (zero = empty).
struct FpPoly {
  std::uint32_t p = 2;
  std::vector<Fp> c;

  FpPoly() = default;
  FpPoly(std::uint32_t p_, std::vector<Fp> coeffs);
  static FpPoly constant(std::uint32_t p, Fp v) { return FpPoly(p, {v}); }
  static FpPoly x(std::uint32_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly monomial(std::uint32_t p, std::size_t k, Fp v = 1);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  Fp lead() const { return c.empty() ? 0 : c.back(); }
  Fp coeff(std::size_t k) const { return k < c.size() ? c[k] : 0; }
  void trim();

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, Fp s);
// Quotient and remainder; b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly monic(const FpPoly& a);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly derivative(const FpPoly& a);
FpPoly powmod(FpPoly a, std::uint64_t e, const FpPoly& f);
Fp evaluate(const FpPoly& a, Fp x);

// (factor, multiplicity), factors squarefree, pairwise coprime, monic.
std::vector<std::pair<FpPoly, int>> squarefree_factorization(const FpPoly& f);
FpPoly radical(const FpPoly& f);
// f monic squarefree: (product of irreducible factors of degree d, d); stops past max_degree.
std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly& f,
                                                                  int max_degree = -1);
// f monic squarefree, all irreducible factors of degree d.
std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, int d, std::mt19937_64& rng);
// Full factorization into monic irreducibles with multiplicity.
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f, std::mt19937_64& rng);
bool is_irreducible(const FpPoly& f);

FpPoly charpoly(const FpMatrix& a);
FpPoly minpoly(const FpMatrix& a);
// Monic minimal polynomial of the vector v under a.
FpPoly minpoly_of_vector(const FpMatrix& a, const FpVec& v);
FpMatrix evaluate(const FpPoly& f, const FpMatrix& a);

}  // namespace currentrep
