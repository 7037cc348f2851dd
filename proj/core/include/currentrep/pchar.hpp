#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "currentrep/element.hpp"

namespace currentrep {

// A p-character chi = kappa_m(c, .) of g_m, stored through its dual element c.
class PChar {
 public:
  PChar() = default;
  explicit PChar(CurrentElement dual);
  static PChar zero(AlgebraPtr alg);
  // From the values chi(b_k) on the basis.
  static PChar from_values(AlgebraPtr alg, const std::vector<Fp>& values);

  const CurrentElement& dual() const { return dual_; }
  const AlgebraPtr& algebra() const { return dual_.algebra(); }
  Fp operator()(const CurrentElement& y) const { return kappa(dual_, y); }
  Fp on_basis(int k) const { return values_[k]; }
  const std::vector<Fp>& values() const { return values_; }
  bool is_zero() const { return dual_.is_zero(); }

  // Degrees i such that chi does not vanish on g ⊗ t^i.
  std::set<int> support() const;
  // Least k with chi(g_m^{(>k)}) = 0 (0 for chi = 0).
  int support_degree() const;
  std::optional<int> homogeneous_degree() const;

  PChar operator+(const PChar& o) const { return PChar(dual_ + o.dual_); }
  PChar operator-(const PChar& o) const { return PChar(dual_ - o.dual_); }
  PChar negated() const { return PChar(dual_.scaled(fp_neg(1, dual_.desc().p))); }
  friend bool operator==(const PChar& a, const PChar& b) { return a.dual_ == b.dual_; }

 private:
  CurrentElement dual_;
  std::vector<Fp> values_;
};

// Matrix (chi([b_k, b_l]))_{k,l}; its kernel is the stabilizer g_m^chi.
// chi = chi_s + chi_n from the Jordan decomposition of the dual element.
struct PCharJordan {
  PChar semisimple, nilpotent;
};
PCharJordan pchar_jordan(const PChar& chi);

FpMatrix coadjoint_form(const PChar& chi);
int stabilizer_dim(const PChar& chi);
std::vector<CurrentElement> stabilizer_basis(const PChar& chi);

// Restriction of a character supported in degrees <= k to g_k = g_m / g_m^{(>k)}.
PChar truncate_pchar(const PChar& chi, int k);
// Inverse of truncate_pchar: extends psi on g_k by zero on the degrees above k.
PChar inflate_pchar(const PChar& psi, AlgebraPtr target);

struct LeviData {
  FpMatrix conjugator;          // g with g e g^{-1} = standard form
  FpMatrix standard_form;       // sum of simple root vectors e_alpha, alpha in I
  std::vector<int> partition;   // Jordan block sizes, descending
  std::vector<int> simple_roots;  // alpha_i = eps_i - eps_{i+1} in I (0-based i)
  std::vector<FpMatrix> center_basis;  // basis of z(g_I) ∩ g
};
// e nilpotent n x n over F_p (element of g = gl_n or sl_n).
LeviData standard_levi_form(const CurrentAlgebra& alg, const FpMatrix& e);
// chi^g with dual element g c g^{-1}, g in GL_n(F_p) acting degree-wise.
PChar conjugate(const PChar& chi, const FpMatrix& g);
// Values of lambda (given on the toral basis) on the basis of z(g_I).
std::vector<Fp> restrict_to_center(const CurrentAlgebra& alg, const std::vector<FpMatrix>& center,
                                   const std::vector<Fp>& lambda);

struct IndexEstimate {
  int min_stabilizer_dim = 0;
  int attained = 0;
  int samples = 0;
};
IndexEstimate index_estimate(const AlgebraPtr& alg, int samples, std::uint64_t seed);

}  // namespace currentrep
