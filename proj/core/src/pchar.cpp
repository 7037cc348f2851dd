#include "currentrep/pchar.hpp"

#include "currentrep/error.hpp"

namespace currentrep {

PChar::PChar(CurrentElement dual) : dual_(std::move(dual)) {
  const auto& alg = *dual_.algebra();
  const int D = alg.dim(), m = alg.m(), dg = alg.dim_g();
  const std::uint32_t p = alg.p();
  const FpVec c = dual_.coords();
  values_.assign(D, 0);
  for (int k = 0; k < D; ++k) {
    const auto& b = alg.basis(k);
    const int partner = m - b.degree;
    Fp s = 0;
    for (int l = 0; l < dg; ++l) {
      Fp cl = c[partner * dg + l];
      if (cl) s = fp_add(s, fp_mul(cl, alg.trace_form(l, b.local), p), p);
    }
    values_[k] = s;
  }
}

PChar PChar::zero(AlgebraPtr alg) { return PChar(CurrentElement(std::move(alg))); }

PChar PChar::from_values(AlgebraPtr alg, const std::vector<Fp>& values) {
  if (static_cast<int>(values.size()) != alg->dim()) raise(ErrorKind::BadCharacter, "value vector has wrong length");
  FpVec b(values.begin(), values.end());
  auto c = solve(gram_matrix(*alg), b);
  if (!c) raise(ErrorKind::BadCharacter, "values are not represented by the trace form");
  return PChar(CurrentElement::from_coords(std::move(alg), *c));
}

std::set<int> PChar::support() const {
  std::set<int> out;
  const int m = dual_.desc().m;
  for (int j = 0; j <= m; ++j)
    if (!dual_.coeff(j).is_zero()) out.insert(m - j);
  return out;
}

int PChar::support_degree() const {
  auto s = support();
  return s.empty() ? 0 : *s.rbegin();
}

std::optional<int> PChar::homogeneous_degree() const {
  auto s = support();
  if (s.size() != 1) return std::nullopt;
  return *s.begin();
}

PCharJordan pchar_jordan(const PChar& chi) {
  auto jd = jordan_decompose(chi.dual());
  return {PChar(jd.semisimple), PChar(jd.nilpotent)};
}

FpMatrix coadjoint_form(const PChar& chi) {
  const auto& alg = *chi.algebra();
  const int D = alg.dim();
  const std::uint32_t p = alg.p();
  FpMatrix b(D, D, p);
  for (int k = 0; k < D; ++k)
    for (int l = 0; l < D; ++l) {
      Fp s = 0;
      for (auto [q, v] : alg.bracket(k, l)) s = fp_add(s, fp_mul(v, chi.on_basis(q), p), p);
      b.set(k, l, s);
    }
  return b;
}

int stabilizer_dim(const PChar& chi) {
  return chi.algebra()->dim() - static_cast<int>(rank(coadjoint_form(chi)));
}

std::vector<CurrentElement> stabilizer_basis(const PChar& chi) {
  const FpMatrix k = nullspace(coadjoint_form(chi).transpose());
  std::vector<CurrentElement> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(CurrentElement::from_coords(chi.algebra(), k.row_vec(i)));
  return out;
}

PChar truncate_pchar(const PChar& chi, int k) {
  const auto& d = chi.dual().desc();
  if (k < 0 || k > d.m) raise(ErrorKind::UnsupportedTruncation, "truncation degree outside [0, m]");
  if (chi.support_degree() > k) raise(ErrorKind::UnsupportedTruncation, "character does not vanish above degree k");
  auto target = CurrentAlgebra::make(d.with_m(k));
  std::vector<FpMatrix> coeffs;
  for (int j = 0; j <= k; ++j) coeffs.push_back(chi.dual().coeff(d.m - k + j));
  return PChar(CurrentElement::from_coeffs(target, std::move(coeffs)));
}

PChar inflate_pchar(const PChar& psi, AlgebraPtr target) {
  const auto& ds = psi.dual().desc();
  const auto& dt = target->desc();
  if (!(ds.with_m(dt.m) == dt) || dt.m < ds.m) raise(ErrorKind::AlgebraMismatch, "inflation target must be a larger truncation");
  std::vector<FpMatrix> coeffs(dt.m + 1, FpMatrix(dt.n, dt.n, dt.p));
  for (int j = 0; j <= ds.m; ++j) coeffs[dt.m - ds.m + j] = psi.dual().coeff(j);
  return PChar(CurrentElement::from_coeffs(std::move(target), std::move(coeffs)));
}

LeviData standard_levi_form(const CurrentAlgebra& alg, const FpMatrix& e) {
  const std::size_t n = e.rows();
  const std::uint32_t p = e.p();
  if (!power(e, n).is_zero()) raise(ErrorKind::NotNilpotent, "element is not nilpotent");
  std::vector<FpMatrix> kernels{FpMatrix(0, n, p)};
  FpMatrix pw = FpMatrix::identity(n, p);
  int q = 0;
  while (!pw.is_zero()) {
    pw = pw * e;
    kernels.push_back(nullspace(pw));
    ++q;
  }
  struct Head {
    FpVec v;
    int len;
  };
  std::vector<Head> heads;
  auto apply_pow = [&](FpVec v, int k) {
    for (int i = 0; i < k; ++i) v = e.apply(v);
    return v;
  };
  for (int k = q; k >= 1; --k) {
    EchelonBasis w(n, p);
    for (std::size_t i = 0; i < kernels[k - 1].rows(); ++i) w.insert(kernels[k - 1].row(i));
    for (const auto& h : heads) w.insert(apply_pow(h.v, h.len - k));
    for (std::size_t i = 0; i < kernels[k].rows(); ++i) {
      FpVec b = kernels[k].row_vec(i);
      if (w.insert(b) >= 0) heads.push_back({b, k});
    }
  }
  LeviData out;
  FpMatrix P(n, n, p);
  std::size_t col = 0;
  for (const auto& h : heads) {
    out.partition.push_back(h.len);
    for (int j = 0; j < h.len; ++j) {
      FpVec b = apply_pow(h.v, h.len - 1 - j);
      for (std::size_t r = 0; r < n; ++r) P.set(r, col, b[r]);
      ++col;
    }
  }
  if (col != n) raise(ErrorKind::InternalError, "Jordan basis construction failed");
  out.conjugator = inverse(P);
  out.standard_form = out.conjugator * e * P;
  int start = 0;
  for (int len : out.partition) {
    for (int i = start; i + 1 < start + len; ++i) out.simple_roots.push_back(i);
    start += len;
  }
  // z(g_I): combinations of block identities lying in g
  const std::size_t blocks = out.partition.size();
  std::vector<FpMatrix> block_ids;
  start = 0;
  for (int len : out.partition) {
    FpMatrix b(n, n, p);
    for (int i = start; i < start + len; ++i) b.set(i, i, 1);
    block_ids.push_back(b);
    start += len;
  }
  if (alg.desc().kind == AlgebraKind::GL) {
    out.center_basis = block_ids;
  } else {
    FpMatrix tr(1, blocks, p);
    for (std::size_t b = 0; b < blocks; ++b) tr.set(0, b, static_cast<Fp>(out.partition[b] % p));
    FpMatrix k = nullspace(tr);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      FpMatrix z(n, n, p);
      for (std::size_t b = 0; b < blocks; ++b) z += block_ids[b].scaled(k(i, b));
      out.center_basis.push_back(z);
    }
  }
  return out;
}

PChar conjugate(const PChar& chi, const FpMatrix& g) {
  const FpMatrix gi = inverse(g);
  std::vector<FpMatrix> coeffs;
  for (const auto& c : chi.dual().coeffs()) coeffs.push_back(g * c * gi);
  return PChar(CurrentElement::from_coeffs(chi.algebra(), std::move(coeffs)));
}

std::vector<Fp> restrict_to_center(const CurrentAlgebra& alg, const std::vector<FpMatrix>& center,
                                   const std::vector<Fp>& lambda) {
  std::vector<Fp> out;
  const std::uint32_t p = alg.p();
  for (const auto& z : center) {
    const FpVec c = alg.local_coords(z);
    Fp s = 0;
    for (int j = 0; j < alg.rank(); ++j) s = fp_add(s, fp_mul(c[alg.local_h(j)], lambda[j], p), p);
    out.push_back(s);
  }
  return out;
}

IndexEstimate index_estimate(const AlgebraPtr& alg, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IndexEstimate est;
  est.samples = samples;
  est.min_stabilizer_dim = alg->dim();
  for (int s = 0; s < samples; ++s) {
    PChar chi(CurrentElement::random(alg, rng));
    int d = stabilizer_dim(chi);
    if (d < est.min_stabilizer_dim) {
      est.min_stabilizer_dim = d;
      est.attained = 0;
    }
    if (d == est.min_stabilizer_dim) ++est.attained;
  }
  return est;
}

}  // namespace currentrep
