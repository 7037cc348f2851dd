#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "currentrep/fpmatrix.hpp"

namespace currentrep {

enum class AlgebraKind { SL, GL };

struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::SL;
  int n = 2;
  std::uint32_t p = 3;
  int m = 0;

  int dim_g() const { return kind == AlgebraKind::GL ? n * n : n * n - 1; }
  int rank() const { return kind == AlgebraKind::GL ? n : n - 1; }
  int num_positive_roots() const { return n * (n - 1) / 2; }
  int dim_center() const { return kind == AlgebraKind::GL ? 1 : 0; }
  int dim() const { return (m + 1) * dim_g(); }
  std::string kind_name() const { return kind == AlgebraKind::GL ? "gl" : "sl"; }
  std::string name() const;
  AlgebraDescriptor with_m(int m2) const { return {kind, n, p, m2}; }

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

// Validates prime characteristic (< 256), n, m and the requirement p ∤ n for sl_n.
AlgebraDescriptor make_descriptor(AlgebraKind kind, int n, std::uint32_t p, int m);
AlgebraKind parse_kind(const std::string& s);

struct PositiveRoot {
  int i, j;                  // alpha = eps_i - eps_j, i < j (0-based)
  int height;                // j - i
  std::vector<long long> weight;  // image in X*(T), normalized
};

enum class BasisType { F, H, E };

struct BasisElement {
  int degree;     // power of t
  int local;      // index within the basis of g
  BasisType type;
  int which;      // positive root index (F, E) or toral index (H)
  std::string label;
};

using SparseVec = std::vector<std::pair<int, Fp>>;

// Basis, root datum and structure constants of g_m = g ⊗ F_p[t]/(t^{m+1}).
class CurrentAlgebra {
 public:
  static std::shared_ptr<const CurrentAlgebra> make(const AlgebraDescriptor& d);
  explicit CurrentAlgebra(const AlgebraDescriptor& d);

  const AlgebraDescriptor& desc() const { return d_; }
  std::uint32_t p() const { return d_.p; }
  int n() const { return d_.n; }
  int m() const { return d_.m; }
  int dim_g() const { return d_.dim_g(); }
  int dim() const { return d_.dim(); }
  int rank() const { return d_.rank(); }

  int index(int degree, int local) const { return degree * dim_g() + local; }
  const BasisElement& basis(int k) const { return basis_[k]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  // local indices of f_alpha / e_alpha / h_j in g
  int local_f(int root) const { return local_f_[root]; }
  int local_e(int root) const { return local_e_[root]; }
  int local_h(int toral) const { return local_h_[toral]; }
  const FpMatrix& local_matrix(int local) const { return local_mats_[local]; }

  // Coordinates of an n x n matrix lying in g; raises BadCharacter if outside g.
  FpVec local_coords(const FpMatrix& x) const;
  FpMatrix local_from_coords(const std::uint8_t* coords) const;

  // [b_k, b_l] and b_k^{[p]} in the basis of g_m.
  const SparseVec& bracket(int k, int l) const { return brackets_[k * dim() + l]; }
  const SparseVec& p_power(int k) const { return ppow_[k]; }
  // tr(b_a b_b) on g (local indices)
  Fp trace_form(int a, int b) const { return trace_form_(a, b); }

  // Weight lattice X*(T): Z^n for gl, Z^n / Z(1,...,1) for sl (last coordinate 0).
  std::vector<long long> normalize_weight(std::vector<long long> g) const;
  // d gamma evaluated on the toral basis.
  std::vector<Fp> differential(const std::vector<long long>& g) const;
  std::vector<long long> canonical_lift(const std::vector<Fp>& lambda) const;
  // alpha evaluated on the toral basis
  std::vector<Fp> root_on_torus(int root) const;
  // restriction of lambda in h* to z(g), in the basis {I} (gl) or empty (sl)
  std::vector<Fp> central_restriction(const std::vector<Fp>& lambda) const;
  bool congruent_mod_p(const std::vector<long long>& a, const std::vector<long long>& b) const;

  // Greedy subset of `subset` (global indices spanning a subalgebra) that generates it
  // as a Lie algebra. Deterministic.
  std::vector<int> lie_generators(const std::vector<int>& subset) const;
  std::vector<int> all_indices() const;
  std::vector<int> indices_of_degree_at_least(int d) const;
  std::vector<int> indices_of_degree_below(int d) const;

 private:
  AlgebraDescriptor d_;
  std::vector<PositiveRoot> roots_;
  std::vector<BasisElement> basis_;
  std::vector<FpMatrix> local_mats_;
  std::vector<int> local_f_, local_e_, local_h_;
  std::vector<SparseVec> brackets_;
  std::vector<SparseVec> ppow_;
  FpMatrix trace_form_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<int>, std::vector<int>> gen_cache_;
};

using AlgebraPtr = std::shared_ptr<const CurrentAlgebra>;

}  // namespace currentrep
