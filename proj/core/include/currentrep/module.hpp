#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "currentrep/pchar.hpp"

namespace currentrep {

// A U_chi-module over the subalgebra of g_m spanned by `basis` (global indices, ascending),
// given by one action matrix per basis element (column convention).
struct ModuleRep {
  AlgebraPtr alg;
  PChar chi;
  std::vector<int> basis;
  std::vector<FpMatrix> actions;
  std::vector<std::string> labels;
  std::optional<std::vector<std::vector<Fp>>> weights;         // h-weights per basis vector
  std::optional<std::vector<std::vector<long long>>> grading;  // X*(T) degree per basis vector
  std::string name;
  std::size_t dimension = 0;

  std::size_t dim() const { return dimension; }
  std::uint32_t p() const { return alg->p(); }
  bool over_full_algebra() const { return static_cast<int>(basis.size()) == alg->dim(); }
  int position(int global) const;
  const FpMatrix& action(int global) const;
  // rho(x) for x in the span of `basis`.
  FpMatrix act(const CurrentElement& x) const;
};

// Dimension cap for module construction: set_dimension_limit, else CURRENTREP_LIMIT, else 2000.
std::size_t dimension_limit();
void set_dimension_limit(std::size_t limit);  // 0 clears
void check_dimension(std::size_t dim, std::size_t limit, const std::string& what);

struct AxiomReport {
  bool ok = true;
  std::string failure;
};
// Bracket compatibility on all basis pairs and rho(x)^p - rho(x^{[p]}) = chi(x)^p Id.
// Modules above `exact_limit` are checked on random vectors (Freivalds), which never
// rejects a valid module and accepts an invalid one with probability <= p^-probes.
AxiomReport check_axioms(const ModuleRep& m, std::size_t exact_limit = 256, int probes = 32,
                         std::uint64_t seed = 1);

// A generating set of the acting algebra with the corresponding action matrices.
struct GenModule {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<int> gens;   // global basis indices
  std::vector<FpMatrix> mats;
};
GenModule generator_view(const ModuleRep& m);
// Rebuilds all actions of `shape.basis` from the generator actions via nested commutators.
ModuleRep complete_from_generators(const GenModule& g, const ModuleRep& shape);

// rho*(x) = -rho(x)^T; a U_chi-module becomes a U_{-chi}-module.
ModuleRep dual_module(const ModuleRep& m);
GenModule dual_module(const GenModule& m);
// Module of g_k viewed as a g_m-module through g_m -> g_k (m >= k).
ModuleRep inflate_module(const ModuleRep& m, AlgebraPtr target);
// Tensor with the one-dimensional module realizing the character shift eta.
ModuleRep twist_module(const ModuleRep& m, const PChar& eta);
// Linear functional mu with mu(x) - mu(x^{[p]}) = eta(x), vanishing on the derived algebra
// of the acting subalgebra; exposed for testing. Values on m.basis positions.
std::vector<Fp> twist_weight(const ModuleRep& m, const PChar& eta);

// W given in semi-echelon form must be invariant.
GenModule submodule(const GenModule& m, const EchelonBasis& w);
GenModule quotient_module(const GenModule& m, const EchelonBasis& w);
ModuleRep submodule(const ModuleRep& m, const EchelonBasis& w);
ModuleRep quotient_module(const ModuleRep& m, const EchelonBasis& w);
bool is_invariant(const ModuleRep& m, const EchelonBasis& w);

// Span of the orbit of the given vectors under the matrices (rows act by v -> v * mat).
EchelonBasis spin_rows(const FpMatrix& seeds, const std::vector<FpMatrix>& right_mats, std::size_t stop_at = 0);
// Submodule generated by the vectors under the column action of the matrices.
EchelonBasis spin(const GenModule& m, const FpMatrix& seed_rows);

}  // namespace currentrep
