#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "currentrep/fppoly.hpp"
#include "currentrep/module.hpp"

namespace currentrep {

// A random algebra element: A_0 = gen[first]; A <- A * gen[i] + c * gen[j]; w = A.
struct WordRecipe {
  int first = 0;
  std::vector<std::array<std::uint32_t, 3>> steps;  // (i, j, c)
};
FpMatrix evaluate_word(const WordRecipe& w, const GenModule& m);

// nullity(f(w)) = deg f on the module and v spans ker f(w) over F_p[w]/(f).
struct KernelCert {
  WordRecipe word;
  FpPoly f;
  FpVec v;
  std::size_t nullity = 0;
};

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<EchelonBasis> submodule;  // proper nonzero invariant subspace when reducible
  KernelCert cert;                        // when irreducible
  int tries = 0;
};
IrreducibilityResult test_irreducible(const GenModule& m, std::mt19937_64& rng, int max_tries = 200);

// Hom_U(S, M) where v (from ker f(w) on S) generates S; images lie in ker f(w) on M.
// Each hom is returned as a dim M x dim S matrix (column convention).
std::vector<FpMatrix> hom_from_cert(const GenModule& s, const KernelCert& cert, const GenModule& m);
bool is_intertwiner(const FpMatrix& phi, const GenModule& from, const GenModule& to);

struct SimpleType {
  std::string label;
  GenModule module;
  KernelCert cert;
  int end_dim = 1;  // dim End(S) = e; absolute dimension dim S / e
  std::vector<FpPoly> fingerprint;
  std::size_t absolute_dim() const { return module.dim / static_cast<std::size_t>(end_dim); }
};

// Distinct simple modules over a fixed generating set, identified up to isomorphism.
class SimpleCatalog {
 public:
  SimpleCatalog() = default;
  explicit SimpleCatalog(std::vector<int> gens) : gens_(std::move(gens)) {}
  const std::vector<int>& gens() const { return gens_; }
  void set_gens(std::vector<int> g) { gens_ = std::move(g); }
  std::size_t size() const { return types_.size(); }
  const SimpleType& type(std::size_t i) const { return types_[i]; }
  SimpleType& type(std::size_t i) { return types_[i]; }
  // Returns the index of the isomorphism class of s (irreducible, with cert), adding it if new.
  int classify(const GenModule& s, const KernelCert& cert, std::mt19937_64& rng, const std::string& label = "");
  // Adds a known simple module (tested for irreducibility) under the given label.
  int add_named(const GenModule& s, const std::string& label, std::mt19937_64& rng);
  int find(const GenModule& s, std::mt19937_64& rng) const;

 private:
  std::vector<int> gens_;
  std::vector<SimpleType> types_;
};

struct CompositionSeries {
  std::vector<int> factors;  // catalog indices, bottom to top
  std::uint64_t seed = 0;
  int retries = 0;
  std::map<int, int> multiplicities() const;
  std::size_t length() const { return factors.size(); }
};

struct ChopOptions {
  std::uint64_t seed = 1;
  // Pre-split along a^k M for the nilpotent ideal a = g_m^{(>k)}, k = supp deg chi.
  bool ideal_filtration = true;
};

// Restricted generator view matching catalog.gens(); the catalog is created on first use.
GenModule view_for_catalog(const ModuleRep& m, SimpleCatalog& catalog);
CompositionSeries chop(const ModuleRep& m, SimpleCatalog& catalog, const ChopOptions& opts = {});
CompositionSeries chop(const GenModule& m, SimpleCatalog& catalog, const ChopOptions& opts = {});

struct IsoResult {
  bool isomorphic = false;
  std::optional<FpMatrix> witness;  // dim N x dim M, invertible intertwiner
  std::string method;
};
// Raises Inconclusive when no decision can be certified.
IsoResult are_isomorphic(const GenModule& a, const GenModule& b, std::uint64_t seed = 1, bool prefilter = true);
IsoResult are_isomorphic(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed = 1, bool prefilter = true);

// soc(M): sum of the images of Hom(S, M) over the simple composition types S of M.
EchelonBasis socle(const GenModule& m, std::uint64_t seed = 1);
struct HeadResult {
  ModuleRep head;
  FpMatrix quotient_map;  // dim head x dim M intertwiner onto the head
};
// head(M) = (soc(M^*))^*
HeadResult head(const ModuleRep& m, std::uint64_t seed = 1);

// Joint kernel of the given elements (rows of the result).
FpMatrix invariant_subspace(const ModuleRep& m, const std::vector<CurrentElement>& elems);
// Simultaneous eigenspace dimensions of the degree-0 torus; NotWeightModule unless semisimple.
std::map<std::vector<Fp>, int> weight_character(const ModuleRep& m);
std::map<std::vector<long long>, int> graded_character(const ModuleRep& m);

}  // namespace currentrep
