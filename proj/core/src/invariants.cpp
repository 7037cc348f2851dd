#include "currentrep/invariants.hpp"

#include "currentrep/error.hpp"

namespace currentrep {

std::vector<int> invariant_indices(const AlgebraDescriptor& d) {
  std::vector<int> out;
  for (int i = d.kind == AlgebraKind::GL ? 1 : 2; i <= d.n; ++i) out.push_back(i);
  return out;
}

namespace {

template <class Ring>
std::vector<Ring> signed_coefficients(std::vector<Ring> c) {
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return c;
}

// Entries of x over R_k for k >= m (higher coefficients zero).
std::vector<std::vector<TruncPoly>> entries(const CurrentElement& x, int k) {
  const int n = x.desc().n, m = x.desc().m;
  const std::uint32_t p = x.desc().p;
  std::vector<std::vector<TruncPoly>> a(n, std::vector<TruncPoly>(n, TruncPoly(p, k)));
  for (int i = 0; i <= m; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[r][c].set(i, x.coeff(i)(r, c));
  return a;
}

std::vector<Fp> flatten_invariants(const AlgebraDescriptor& d, const std::vector<TruncPoly>& pi, int offset) {
  std::vector<Fp> out;
  for (int i : invariant_indices(d))
    for (int j = 0; j <= d.m; ++j) out.push_back(pi[i][j + offset]);
  return out;
}

}  // namespace

std::vector<TruncPoly> characteristic_invariants(const CurrentElement& x) {
  const auto& d = x.desc();
  return signed_coefficients(berkowitz(entries(x, d.m), TruncPoly(d.p, d.m), TruncPoly::constant(d.p, d.m, 1)));
}

Fp eval_invariant(int i, int j, const CurrentElement& x) {
  const auto& d = x.desc();
  const auto idx = invariant_indices(d);
  if (i < idx.front() || i > idx.back() || j < 0 || j > d.m)
    raise(ErrorKind::BadIndex, "invariant index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return characteristic_invariants(x)[i][j];
}

std::vector<Fp> invariant_vector(const CurrentElement& x) {
  return flatten_invariants(x.desc(), characteristic_invariants(x), 0);
}

std::vector<Fp> invariant_derivative(const CurrentElement& x, const CurrentElement& y) {
  const auto& d = x.desc();
  auto ax = entries(x, d.m), ay = entries(y, d.m);
  std::vector<std::vector<DualTrunc>> a(d.n, std::vector<DualTrunc>(d.n));
  for (int r = 0; r < d.n; ++r)
    for (int c = 0; c < d.n; ++c) a[r][c] = DualTrunc(ax[r][c], ay[r][c]);
  const TruncPoly z(d.p, d.m);
  auto c = signed_coefficients(berkowitz(a, DualTrunc(z, z), DualTrunc(TruncPoly::constant(d.p, d.m, 1), z)));
  std::vector<Fp> out;
  for (int i : invariant_indices(d))
    for (int j = 0; j <= d.m; ++j) out.push_back(c[i].eps[j]);
  return out;
}

std::vector<Fp> invariant_difference(const CurrentElement& x, const CurrentElement& y) {
  const auto& d = x.desc();
  const int big = 2 * d.m + 1;
  auto ax = entries(x, big), ay = entries(y, big);
  auto shifted = ax;
  const TruncPoly tm = TruncPoly::t_power(d.p, big, d.m + 1);
  for (int r = 0; r < d.n; ++r)
    for (int c = 0; c < d.n; ++c) shifted[r][c] = ax[r][c] + tm * ay[r][c];
  const TruncPoly z(d.p, big), one = TruncPoly::constant(d.p, big, 1);
  auto f1 = signed_coefficients(berkowitz(shifted, z, one));
  auto f0 = signed_coefficients(berkowitz(ax, z, one));
  std::vector<TruncPoly> diff;
  for (std::size_t i = 0; i < f1.size(); ++i) diff.push_back(f1[i] - f0[i]);
  return flatten_invariants(d, diff, d.m + 1);
}

FpMatrix invariant_jacobian(const CurrentElement& x) {
  const auto& alg = x.algebra();
  const int funcs = static_cast<int>(invariant_indices(x.desc()).size()) * (x.desc().m + 1);
  FpMatrix j(funcs, alg->dim(), alg->p());
  for (int k = 0; k < alg->dim(); ++k) {
    auto col = invariant_derivative(x, CurrentElement::basis_element(alg, k));
    for (int f = 0; f < funcs; ++f) j.set(f, k, col[f]);
  }
  return j;
}

std::vector<FpMatrix> random_conjugator(const CurrentAlgebra& alg, std::mt19937_64& rng, bool unipotent) {
  const int n = alg.n(), m = alg.m();
  const std::uint32_t p = alg.p();
  std::uniform_int_distribution<Fp> d(0, p - 1);
  std::vector<FpMatrix> g(m + 1, FpMatrix(n, n, p));
  if (unipotent) {
    g[0] = FpMatrix::identity(n, p);
    if (m >= 1)
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) g[1].set(r, c, d(rng));
    return g;
  }
  do {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g[0].set(r, c, d(rng));
  } while (determinant(g[0]) == 0);
  for (int i = 1; i <= m; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g[i].set(r, c, d(rng));
  return g;
}

std::vector<FpMatrix> inverse_over_ring(const std::vector<FpMatrix>& g, int m) {
  const std::size_t n = g[0].rows();
  const std::uint32_t p = g[0].p();
  const FpMatrix g0i = inverse(g[0]);
  // g = g0 (1 + u) with u in t R_m; (1 + u)^{-1} = sum (-u)^k
  std::vector<FpMatrix> negu(m + 1, FpMatrix(n, n, p));
  for (int i = 1; i <= m; ++i) negu[i] = (g0i * g[i]).negated();
  std::vector<FpMatrix> sum(m + 1, FpMatrix(n, n, p)), term(m + 1, FpMatrix(n, n, p));
  sum[0] = term[0] = FpMatrix::identity(n, p);
  for (int k = 1; k <= m; ++k) {
    term = truncated_product(term, negu, m);
    for (int i = 0; i <= m; ++i) sum[i] += term[i];
  }
  for (auto& s : sum) s = s * g0i;
  return sum;
}

CurrentElement conjugate_element(const CurrentElement& x, const std::vector<FpMatrix>& g) {
  const int m = x.desc().m;
  auto gi = inverse_over_ring(g, m);
  return CurrentElement::from_coeffs(x.algebra(), truncated_product(truncated_product(g, x.coeffs(), m), gi, m));
}

InvarianceReport invariance_check(const AlgebraPtr& alg, int samples, std::uint64_t seed) {
  InvarianceReport r;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const CurrentElement x = CurrentElement::random(alg, rng);
    const auto g = random_conjugator(*alg, rng, s % 2 == 1);
    if (invariant_vector(conjugate_element(x, g)) != invariant_vector(x)) ++r.failures;
    const CurrentElement y = CurrentElement::random(alg, rng);
    for (Fp v : invariant_derivative(x, bracket(y, x)))
      if (v) {
        ++r.ad_failures;
        break;
      }
    ++r.samples;
  }
  return r;
}

IndependenceReport independence_check(const AlgebraPtr& alg, int samples, std::uint64_t seed) {
  IndependenceReport r;
  r.functions = static_cast<int>(invariant_indices(alg->desc()).size()) * (alg->m() + 1);
  r.rank_at_zero = static_cast<int>(rank(invariant_jacobian(CurrentElement(alg))));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && !r.full_rank(); ++s) {
    r.best_rank = std::max(r.best_rank, static_cast<int>(rank(invariant_jacobian(CurrentElement::random(alg, rng)))));
    ++r.samples;
  }
  return r;
}

DifferenceSelfTest derivative_selftest(const AlgebraPtr& alg, int samples, std::uint64_t seed) {
  DifferenceSelfTest r;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const CurrentElement x = CurrentElement::random(alg, rng), y = CurrentElement::random(alg, rng);
    if (invariant_derivative(x, y) != invariant_difference(x, y)) ++r.mismatches;
    ++r.samples;
  }
  return r;
}

}  // namespace currentrep
