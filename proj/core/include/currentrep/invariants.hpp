#pragma once

#include <cstdint>
#include <vector>

#include "currentrep/element.hpp"

namespace currentrep {

// Indices i of the generators p_i: 1..n for gl_n, 2..n for sl_n.
std::vector<int> invariant_indices(const AlgebraDescriptor& d);
// p_i(x) = (-1)^i c_i for det(X I - x) = sum_i c_i X^{n-i}, computed over R_m; index 0..n.
std::vector<TruncPoly> characteristic_invariants(const CurrentElement& x);
// t^j-coefficient of p_i(x); BadIndex outside the generator range.
Fp eval_invariant(int i, int j, const CurrentElement& x);
// All p_{i,j}(x), i-major in invariant_indices order, j = 0..m.
std::vector<Fp> invariant_vector(const CurrentElement& x);
// Directional derivative of every p_{i,j} at x along y (dual numbers).
std::vector<Fp> invariant_derivative(const CurrentElement& x, const CurrentElement& y);
// The same derivative from the t-adic difference f(x + t^{m+1} y) - f(x) over R_{2m+1}.
std::vector<Fp> invariant_difference(const CurrentElement& x, const CurrentElement& y);
// Jacobian of the p_{i,j} at x in the coordinate directions of g_m (rows = functions).
FpMatrix invariant_jacobian(const CurrentElement& x);

// Random g in GL_n(R_m); every other sample is unipotent of the form 1 + (strictly upper) t.
std::vector<FpMatrix> random_conjugator(const CurrentAlgebra& alg, std::mt19937_64& rng, bool unipotent);
std::vector<FpMatrix> inverse_over_ring(const std::vector<FpMatrix>& g, int m);
CurrentElement conjugate_element(const CurrentElement& x, const std::vector<FpMatrix>& g);

struct InvarianceReport {
  int samples = 0;
  int failures = 0;     // p_{i,j}(g x g^-1) != p_{i,j}(x)
  int ad_failures = 0;  // derivative along [y, x] nonzero
};
InvarianceReport invariance_check(const AlgebraPtr& alg, int samples, std::uint64_t seed);

struct IndependenceReport {
  int functions = 0;
  int best_rank = 0;
  int rank_at_zero = 0;
  int samples = 0;
  bool full_rank() const { return best_rank == functions; }
};
IndependenceReport independence_check(const AlgebraPtr& alg, int samples, std::uint64_t seed);

struct DifferenceSelfTest {
  int samples = 0;
  int mismatches = 0;
};
DifferenceSelfTest derivative_selftest(const AlgebraPtr& alg, int samples, std::uint64_t seed);

}  // namespace currentrep
