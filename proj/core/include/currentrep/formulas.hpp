#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "currentrep/induce.hpp"
#include "currentrep/meataxe.hpp"

namespace currentrep {

using Weight = std::vector<long long>;

std::uint64_t ipow(std::uint64_t base, int e);

// Root datum of GL_n or SL_n with a characteristic attached. Unlike AlgebraDescriptor this
// does not insist on p ∤ n for sl, so lattice combinatorics can be run outside the
// standard hypotheses.
struct RootLattice {
  AlgebraKind kind = AlgebraKind::SL;
  int n = 2;
  std::uint32_t p = 3;
  int m = 0;
  std::vector<Weight> roots;  // positive roots, normalized

  int rank() const { return kind == AlgebraKind::GL ? n : n - 1; }
  int num_positive_roots() const { return n * (n - 1) / 2; }
  int dim_g() const { return kind == AlgebraKind::GL ? n * n : n * n - 1; }
  // dim z(g): 1 for gl, and for sl exactly when p | n
  int dim_center() const;
  Weight normalize(Weight g) const;
  bool congruent_mod_p(const Weight& a, const Weight& b) const;
  // (d gamma) restricted to z(g) vanishes
  bool central_vanishing(const Weight& g) const;
  std::string name() const;
};
RootLattice root_lattice(AlgebraKind kind, int n, std::uint32_t p, int m);
RootLattice root_lattice(const AlgebraDescriptor& d);
// Normalized weights with free coordinates in [-radius, radius].
std::vector<Weight> lattice_box(const RootLattice& lat, long long radius);

struct PartitionTable {
  RootLattice lattice;
  std::map<Weight, std::uint64_t> values;  // support only
  std::uint64_t at(const Weight& g) const;
  std::uint64_t mass() const;
};
// p_m(gamma) = #{(m_{i,alpha}) in [0, p-1]^{m N} : sum m_{i,alpha} alpha = gamma}, by convolution.
PartitionTable kostant_table(const RootLattice& lat);
std::uint64_t kostant_pm(const PartitionTable& table, const Weight& g);

struct ShiftSum {
  Weight gamma;
  std::uint64_t value = 0;
  int paper_exponent = 0;  // m N - r
  int z_exponent = 0;      // m N - r + dim z
  bool paper_match = false;
  bool z_match = false;
};
// sum over delta of p_m(gamma - p delta), compared with both constants.
ShiftSum pm_shift_sum(const PartitionTable& table, const Weight& g);

// Char Z^(gamma) = sum_beta p_m(gamma - beta) Char Z^g(beta) for the canonical lift of lambda.
struct GradedConvolution {
  std::map<Weight, int> module_character;
  std::map<Weight, std::uint64_t> convolution;
  bool match = false;
};
GradedConvolution graded_convolution(const AlgebraPtr& alg, const std::vector<Fp>& lambda0);

// The simple U_0(g_m)-modules L(lambda), lambda in Lambda_0, as inflated heads of the
// baby Vermas of g, registered in one catalog.
struct RestrictedSimples {
  AlgebraPtr alg;
  std::vector<std::vector<Fp>> weights;
  SimpleCatalog catalog;
  std::vector<int> type_of;  // weight index -> catalog index
  std::vector<std::size_t> dims;
  int weight_of_type(int t) const;
  int weight_index(const std::vector<Fp>& lambda0) const;
};
RestrictedSimples restricted_simples(const AlgebraPtr& alg, std::uint64_t seed = 1);
// [M : L(lambda)] in weight order; raises InternalError on a factor outside the family.
std::vector<std::uint64_t> composition_vector(const ModuleRep& m, RestrictedSimples& rs, std::uint64_t seed = 1);

struct LConstants {
  AlgebraDescriptor g;  // m = 0
  std::vector<std::vector<Fp>> weights;
  std::vector<std::uint64_t> l;
  std::vector<std::size_t> simple_dims;
  std::vector<std::vector<std::uint64_t>> verma;  // [Z^g(nu) : L(mu)], rows nu
  std::uint64_t mass() const;                     // sum l_mu dim L(mu)
};
LConstants l_constants(const AlgebraDescriptor& d, std::uint64_t seed = 1);

// [Z(lambda) : L(mu)] from the closed form; FormulaDomainError for a negative exponent.
std::uint64_t verma_mult_formula(const CurrentAlgebra& alg, const LConstants& lc, std::size_t lambda,
                                 std::size_t mu, bool z_correction = false);
// [Q(lambda) : L(mu)] from the closed form.
std::uint64_t cartan_formula(const CurrentAlgebra& alg, const LConstants& lc, std::size_t lambda,
                             std::size_t mu, bool z_correction = false);
int verma_exponent(const AlgebraDescriptor& d, bool z_correction);
int cartan_exponent(const AlgebraDescriptor& d, bool z_correction);

// Chop-based tables over g_m, chi = 0, in weight order.
struct MultiplicityTables {
  std::vector<std::vector<std::uint64_t>> verma;       // [Z(lambda) : L(mu)]
  std::vector<std::vector<std::uint64_t>> dual_verma;  // [DZ(lambda) : L(mu)]
  std::vector<std::vector<std::uint64_t>> zproj;       // [Z_proj(lambda) : L(mu)]
  std::vector<std::vector<std::uint64_t>> zproj_flag;  // (Z_proj(lambda) : Z(mu)) from the explicit flag
  std::vector<std::uint64_t> regular;                  // [U_0(g_m) : L(mu)]
};
struct TableRequest {
  bool verma = true, dual_verma = false, zproj = false, regular = false;
};
MultiplicityTables multiplicity_tables(const AlgebraPtr& alg, RestrictedSimples& rs, const TableRequest& req,
                                       std::uint64_t seed = 1);
// sum_nu [DZ(nu) : L(lambda)] [Z_proj(nu) : L(mu)], the reciprocity chain.
std::vector<std::vector<std::uint64_t>> cartan_chain(const MultiplicityTables& t);

struct HomogeneousClassification {
  PChar chi;                 // after degree reduction and conjugation to standard Levi form
  LeviData levi;
  std::vector<LambdaWeight> weights;
  std::vector<int> class_of;  // per weight
  int num_classes = 0;
  int predicted_classes = 0;  // p^{dim z(g_I)}
};
HomogeneousClassification classify_simples_homogeneous(const PChar& chi);

struct BlockResult {
  std::vector<std::vector<Fp>> weights;
  std::vector<int> block_of;
  int num_blocks = 0;
  std::uint64_t predicted = 0;  // p^{(m+1) dim z(g)}
};
BlockResult blocks(const AlgebraPtr& alg, RestrictedSimples& rs, std::uint64_t seed = 1);
// Torus case: Q^{h_m}(lambda) has the single factor k_lambda, so no linkage.
BlockResult torus_blocks(const AlgebraPtr& alg);

struct SemisimpleAudit {
  PChar chi;
  std::size_t regular_dim = 0;
  int simple_count = 0;                 // absolutely simple, counted with end_dim
  std::vector<std::size_t> simple_dims;  // absolute dimensions
  std::vector<std::uint64_t> projective_dims;  // [U_chi : L], empty unless Lambda_chi is over F_p
  std::uint64_t predicted_simple_dim = 0;
  std::uint64_t predicted_projective_dim = 0;
  int predicted_count = 0;
  bool ok = false;
};
// A degree-0 regular semisimple h in the toral subalgebra, or nullopt if p is too small.
std::optional<FpMatrix> regular_toral_element(const CurrentAlgebra& alg);
SemisimpleAudit semisimple_character_audit(const PChar& chi, std::uint64_t seed = 1, std::size_t limit = 0);

}  // namespace currentrep
