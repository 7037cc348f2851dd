#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "currentrep/module.hpp"

namespace currentrep {

// lambda on h_m: values[i][j] = lambda(h_j t^i).
struct LambdaWeight {
  std::vector<std::vector<Fp>> values;
  const std::vector<Fp>& degree0() const { return values.front(); }
  friend bool operator==(const LambdaWeight&, const LambdaWeight&) = default;
};
std::string to_string(const LambdaWeight& l);
// Weight with the given degree-0 values and zero on h t^i, i > 0.
LambdaWeight restricted_weight(const CurrentAlgebra& alg, const std::vector<Fp>& degree0);

// Lambda_chi: lambda(h t^i) - lambda(h t^{pi}) = chi(h t^i); requires chi(n^+_m) = 0 and,
// for solutions over F_p, chi(h_j) = 0 (NeedsFieldExtension otherwise).
std::vector<LambdaWeight> enumerate_lambda(const PChar& chi);
bool in_lambda_chi(const PChar& chi, const LambdaWeight& lambda);
// All of F_p^r, the restricted weights of g.
std::vector<std::vector<Fp>> restricted_weights(const CurrentAlgebra& alg);

// U_chi(k) ⊗_{U_chi(p)} N for a subalgebra k with basis complement ∪ base.basis; the
// complement is ordered as given (PBW order) and must not meet base.basis.
ModuleRep build_induced(const PChar& chi, const std::vector<int>& complement, const ModuleRep& base,
                        std::size_t limit = 0);

std::vector<int> indices_of_type(const CurrentAlgebra& alg, BasisType t);
std::vector<int> borel_indices(const CurrentAlgebra& alg);           // h_m + n^+_m
std::vector<int> opposite_borel_indices(const CurrentAlgebra& alg);  // h_m + n^-_m

// Z_chi(lambda) = U_chi(g_m) ⊗_{U_chi(b^+_m)} k_lambda
ModuleRep build_baby_verma(const PChar& chi, const LambdaWeight& lambda, std::size_t limit = 0);
// (U_0(g_m) ⊗_{U_0(b^-_m)} k_{-lambda})^*, chi = 0
ModuleRep build_dual_verma(const AlgebraPtr& alg, const LambdaWeight& lambda, std::size_t limit = 0);
// Q^{h_m}(lambda) = U_0(h_m) ⊗_{U_0(h)} k_lambda, a module over h_m
ModuleRep build_torus_projective(const AlgebraPtr& alg, const std::vector<Fp>& lambda0, std::size_t limit = 0);

struct ZProj {
  ModuleRep module;
  // increasing flag of submodules 0 = F_0 < F_1 < ... < F_D = module, sections ≅ Z_0(lambda)
  std::vector<EchelonBasis> flag;
};
ZProj build_zproj(const AlgebraPtr& alg, const std::vector<Fp>& lambda0, std::size_t limit = 0);

// Left regular module of U_chi(g_m) in the PBW basis.
ModuleRep build_regular_module(const PChar& chi, std::size_t limit = 0);
// Induced from k_{chi|a} for the abelian ideal a = g_m^{(>= ceil((m+1)/2))}; every simple
// U_chi(g_m)-module is a quotient.
ModuleRep build_abelian_cover(const PChar& chi, std::size_t limit = 0);
int abelian_cover_degree(const AlgebraDescriptor& d);

}  // namespace currentrep
