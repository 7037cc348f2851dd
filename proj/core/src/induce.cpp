#include "currentrep/induce.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "currentrep/error.hpp"

namespace currentrep {

std::string to_string(const LambdaWeight& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < l.degree0().size(); ++j) os << (j ? "," : "") << l.degree0()[j];
  os << ")";
  bool higher = false;
  for (std::size_t i = 1; i < l.values.size(); ++i)
    for (Fp v : l.values[i]) higher |= v != 0;
  if (higher) {
    os << "[";
    for (std::size_t i = 1; i < l.values.size(); ++i) {
      os << (i > 1 ? ";" : "");
      for (std::size_t j = 0; j < l.values[i].size(); ++j) os << (j ? "," : "") << l.values[i][j];
    }
    os << "]";
  }
  return os.str();
}

LambdaWeight restricted_weight(const CurrentAlgebra& alg, const std::vector<Fp>& degree0) {
  if (static_cast<int>(degree0.size()) != alg.rank()) raise(ErrorKind::BadWeight, "weight has wrong length");
  LambdaWeight l;
  l.values.assign(alg.m() + 1, std::vector<Fp>(alg.rank(), 0));
  l.values[0] = degree0;
  return l;
}

std::vector<int> indices_of_type(const CurrentAlgebra& alg, BasisType t) {
  std::vector<int> out;
  for (int k = 0; k < alg.dim(); ++k)
    if (alg.basis(k).type == t) out.push_back(k);
  return out;
}

std::vector<int> borel_indices(const CurrentAlgebra& alg) {
  std::vector<int> out;
  for (int k = 0; k < alg.dim(); ++k)
    if (alg.basis(k).type != BasisType::F) out.push_back(k);
  return out;
}

std::vector<int> opposite_borel_indices(const CurrentAlgebra& alg) {
  std::vector<int> out;
  for (int k = 0; k < alg.dim(); ++k)
    if (alg.basis(k).type != BasisType::E) out.push_back(k);
  return out;
}

namespace {

void require_nplus_vanishing(const PChar& chi) {
  const auto& alg = *chi.algebra();
  for (int k : indices_of_type(alg, BasisType::E))
    if (chi.on_basis(k)) raise(ErrorKind::BadCharacter, "character does not vanish on n^+_m");
}

}  // namespace

std::vector<LambdaWeight> enumerate_lambda(const PChar& chi) {
  require_nplus_vanishing(chi);
  const auto& alg = *chi.algebra();
  const int m = alg.m(), r = alg.rank();
  const std::uint32_t p = alg.p();
  LambdaWeight base;
  base.values.assign(m + 1, std::vector<Fp>(r, 0));
  for (int j = 0; j < r; ++j) {
    for (int i = m; i >= 1; --i) {
      const long long pi = static_cast<long long>(p) * i;
      Fp above = pi <= m ? base.values[pi][j] : 0;
      base.values[i][j] = fp_add(chi.on_basis(alg.index(i, alg.local_h(j))), above, p);
    }
    if (chi.on_basis(alg.index(0, alg.local_h(j))))
      raise(ErrorKind::NeedsFieldExtension, "lambda(h)^p - lambda(h) = chi(h)^p has no root in F_p");
  }
  std::vector<LambdaWeight> out;
  for (const auto& w0 : restricted_weights(alg)) {
    LambdaWeight l = base;
    l.values[0] = w0;
    out.push_back(l);
  }
  return out;
}

bool in_lambda_chi(const PChar& chi, const LambdaWeight& lambda) {
  const auto& alg = *chi.algebra();
  const int m = alg.m(), r = alg.rank();
  const std::uint32_t p = alg.p();
  if (static_cast<int>(lambda.values.size()) != m + 1) return false;
  for (int i = 0; i <= m; ++i) {
    if (static_cast<int>(lambda.values[i].size()) != r) return false;
    for (int j = 0; j < r; ++j) {
      const long long pi = static_cast<long long>(p) * i;
      Fp above = pi <= m ? lambda.values[pi][j] : 0;
      Fp lhs = fp_sub(fp_pow(lambda.values[i][j], p, p), above, p);
      if (lhs != fp_pow(chi.on_basis(alg.index(i, alg.local_h(j))), p, p)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Fp>> restricted_weights(const CurrentAlgebra& alg) {
  const int r = alg.rank();
  const std::uint32_t p = alg.p();
  std::vector<std::vector<Fp>> out;
  std::vector<Fp> cur(r, 0);
  while (true) {
    out.push_back(cur);
    int k = 0;
    while (k < r && ++cur[k] == p) cur[k++] = 0;
    if (k == r) break;
  }
  return out;
}

namespace {

// PBW straightening with memoized columns of the action matrices.
class Straightener {
 public:
  Straightener(const PChar& chi, const std::vector<int>& complement, const ModuleRep& base)
      : alg_(*chi.algebra()), chi_(chi), comp_(complement), base_(base), p_(alg_.p()) {
    K_ = comp_.size();
    dimN_ = base.dim();
    monos_ = 1;
    for (std::size_t j = 0; j < K_; ++j) monos_ *= p_;
    dimM_ = monos_ * dimN_;
    ambient_ = comp_;
    ambient_.insert(ambient_.end(), base.basis.begin(), base.basis.end());
    std::sort(ambient_.begin(), ambient_.end());
    if (std::adjacent_find(ambient_.begin(), ambient_.end()) != ambient_.end())
      raise(ErrorKind::AlgebraMismatch, "complement meets the inducing subalgebra");
    pos_.assign(alg_.dim(), -1);
    comp_pos_.assign(alg_.dim(), -1);
    for (std::size_t a = 0; a < ambient_.size(); ++a) pos_[ambient_[a]] = static_cast<int>(a);
    for (std::size_t j = 0; j < K_; ++j) comp_pos_[comp_[j]] = static_cast<int>(j);
    radix_.assign(K_ + 1, 1);
    for (std::size_t j = 0; j < K_; ++j) radix_[j + 1] = radix_[j] * p_;
    cols_.assign(ambient_.size(), std::vector<FpVec>(dimM_));
    state_.assign(ambient_.size(), std::vector<std::uint8_t>(dimM_, 0));
  }

  std::size_t dim() const { return dimM_; }
  std::size_t monomials() const { return monos_; }
  const std::vector<int>& ambient() const { return ambient_; }

  FpMatrix action(std::size_t a) {
    FpMatrix m(dimM_, dimM_, p_);
    for (std::size_t c = 0; c < dimM_; ++c) {
      const FpVec& v = column(a, c);
      for (std::size_t r = 0; r < dimM_; ++r)
        if (v[r]) m.set(r, c, v[r]);
    }
    return m;
  }

  int digit(std::size_t mono, std::size_t j) const { return static_cast<int>((mono / radix_[j]) % p_); }

 private:
  std::size_t first_nonzero(std::size_t mono) const {
    for (std::size_t j = 0; j < K_; ++j)
      if (digit(mono, j)) return j;
    return K_;
  }

  int ambient_pos(int global) const {
    int a = pos_[global];
    if (a < 0) raise(ErrorKind::AlgebraMismatch, "bracket leaves the induced subalgebra");
    return a;
  }

  // out += c * (y . column) for sparse y
  void add_elem(FpVec& out, const SparseVec& y, std::size_t col, Fp c) {
    for (auto [q, v] : y) {
      const FpVec& w = column(ambient_pos(q), col);
      kernel::axpy(out.data(), w.data(), fp_mul(c, v, p_), dimM_, p_);
    }
  }

  // out += x . vec
  void add_apply(FpVec& out, std::size_t a, const FpVec& vec) {
    for (std::size_t c = 0; c < dimM_; ++c) {
      if (!vec[c]) continue;
      const FpVec& w = column(a, c);
      kernel::axpy(out.data(), w.data(), vec[c], dimM_, p_);
    }
  }

  const FpVec& column(std::size_t a, std::size_t col) {
    if (state_[a][col] == 2) return cols_[a][col];
    if (state_[a][col] == 1) raise(ErrorKind::InternalError, "PBW straightening re-entered a pending term");
    state_[a][col] = 1;
    const int x = ambient_[a];
    const std::size_t mono = col / dimN_, s = col % dimN_;
    FpVec out(dimM_, 0);
    const std::size_t i = first_nonzero(mono);
    const int j = comp_pos_[x];
    if (j >= 0) {
      const std::size_t ju = static_cast<std::size_t>(j);
      if (ju < i) {
        out[(mono + radix_[ju]) * dimN_ + s] = 1;
      } else if (ju == i) {
        if (static_cast<std::uint32_t>(digit(mono, ju)) + 1 < p_) {
          out[(mono + radix_[ju]) * dimN_ + s] = 1;
        } else {
          // c^p = c^{[p]} + chi(c)^p
          const std::size_t rest = mono - (p_ - 1) * radix_[ju];
          add_elem(out, alg_.p_power(x), rest * dimN_ + s, 1);
          Fp c = fp_pow(chi_.on_basis(x), p_, p_);
          out[rest * dimN_ + s] = static_cast<std::uint8_t>(fp_add(out[rest * dimN_ + s], c, p_));
        }
      } else {
        commute_past(out, a, x, mono, s, i);
      }
    } else {
      if (i == K_) {
        const FpMatrix& rn = base_.action(x);
        for (std::size_t t = 0; t < dimN_; ++t)
          if (rn(t, s)) out[t] = static_cast<std::uint8_t>(rn(t, s));
      } else {
        commute_past(out, a, x, mono, s, i);
      }
    }
    cols_[a][col] = std::move(out);
    state_[a][col] = 2;
    return cols_[a][col];
  }

  // x c_i c^{rest} = c_i (x c^{rest}) + [x, c_i] c^{rest}
  void commute_past(FpVec& out, std::size_t a, int x, std::size_t mono, std::size_t s, std::size_t i) {
    const std::size_t rest = mono - radix_[i];
    const FpVec tmp = column(a, rest * dimN_ + s);
    add_apply(out, static_cast<std::size_t>(ambient_pos(comp_[i])), tmp);
    add_elem(out, alg_.bracket(x, comp_[i]), rest * dimN_ + s, 1);
  }

  const CurrentAlgebra& alg_;
  const PChar& chi_;
  std::vector<int> comp_;
  const ModuleRep& base_;
  std::uint32_t p_;
  std::size_t K_ = 0, dimN_ = 0, monos_ = 0, dimM_ = 0;
  std::vector<int> ambient_, pos_, comp_pos_;
  std::vector<std::size_t> radix_;
  std::vector<std::vector<FpVec>> cols_;
  std::vector<std::vector<std::uint8_t>> state_;
};

std::vector<Fp> basis_torus_weight(const CurrentAlgebra& alg, int k) {
  const auto& b = alg.basis(k);
  std::vector<Fp> w(alg.rank(), 0);
  if (b.type == BasisType::H) return w;
  w = alg.root_on_torus(b.which);
  if (b.type == BasisType::F)
    for (auto& x : w) x = fp_neg(x, alg.p());
  return w;
}

std::vector<long long> basis_lattice_weight(const CurrentAlgebra& alg, int k) {
  const auto& b = alg.basis(k);
  std::vector<long long> w(alg.n(), 0);
  if (b.type == BasisType::H) return w;
  w = alg.positive_roots()[b.which].weight;
  if (b.type == BasisType::F)
    for (auto& x : w) x = -x;
  return w;
}

}  // namespace

ModuleRep build_induced(const PChar& chi, const std::vector<int>& complement, const ModuleRep& base, std::size_t limit) {
  if (limit == 0) limit = dimension_limit();
  const auto& alg = *chi.algebra();
  if (!(base.alg->desc() == alg.desc())) raise(ErrorKind::AlgebraMismatch, "base module over a different algebra");
  long double total = base.dim();
  for (std::size_t j = 0; j < complement.size(); ++j) total *= alg.p();
  if (total > static_cast<long double>(limit))
    raise(ErrorKind::TooLarge, "induced module of dimension " + std::to_string(static_cast<unsigned long long>(total)) +
                                   " exceeds the limit " + std::to_string(limit));
  Straightener st(chi, complement, base);
  ModuleRep out;
  out.alg = chi.algebra();
  out.chi = chi;
  out.basis = st.ambient();
  out.dimension = st.dim();
  for (std::size_t a = 0; a < out.basis.size(); ++a) out.actions.push_back(st.action(a));
  const std::size_t dimN = base.dim();
  const std::uint32_t p = alg.p();
  for (std::size_t mono = 0; mono < st.monomials(); ++mono)
    for (std::size_t s = 0; s < dimN; ++s) {
      std::string label;
      for (std::size_t j = 0; j < complement.size(); ++j) {
        int d = st.digit(mono, j);
        if (!d) continue;
        if (!label.empty()) label += " ";
        label += alg.basis(complement[j]).label;
        if (d > 1) label += "^" + std::to_string(d);
      }
      if (label.empty()) label = "1";
      std::string bl = s < base.labels.size() ? base.labels[s] : "v" + std::to_string(s);
      out.labels.push_back(label + " (x) " + bl);
    }
  if (base.weights) {
    std::vector<std::vector<Fp>> wts;
    for (std::size_t mono = 0; mono < st.monomials(); ++mono)
      for (std::size_t s = 0; s < dimN; ++s) {
        std::vector<Fp> w = (*base.weights)[s];
        for (std::size_t j = 0; j < complement.size(); ++j) {
          int d = st.digit(mono, j);
          if (!d) continue;
          auto cw = basis_torus_weight(alg, complement[j]);
          for (std::size_t t = 0; t < w.size(); ++t) w[t] = fp_add(w[t], fp_mul(cw[t], d, p), p);
        }
        wts.push_back(w);
      }
    out.weights = wts;
  }
  if (base.grading) {
    std::vector<std::vector<long long>> grs;
    for (std::size_t mono = 0; mono < st.monomials(); ++mono)
      for (std::size_t s = 0; s < dimN; ++s) {
        std::vector<long long> g = (*base.grading)[s];
        for (std::size_t j = 0; j < complement.size(); ++j) {
          int d = st.digit(mono, j);
          if (!d) continue;
          auto cw = basis_lattice_weight(alg, complement[j]);
          for (std::size_t t = 0; t < g.size(); ++t) g[t] += cw[t] * d;
        }
        grs.push_back(alg.normalize_weight(g));
      }
    out.grading = grs;
  }
  return out;
}

namespace {

ModuleRep one_dimensional(const PChar& chi, const std::vector<int>& basis, const std::vector<Fp>& values) {
  ModuleRep n;
  n.alg = chi.algebra();
  n.chi = chi;
  n.basis = basis;
  n.dimension = 1;
  for (Fp v : values) {
    FpMatrix a(1, 1, chi.algebra()->p());
    a.set(0, 0, v);
    n.actions.push_back(a);
  }
  n.labels = {"v"};
  return n;
}

}  // namespace

ModuleRep build_baby_verma(const PChar& chi, const LambdaWeight& lambda, std::size_t limit) {
  require_nplus_vanishing(chi);
  if (!in_lambda_chi(chi, lambda)) raise(ErrorKind::BadWeight, "lambda does not lie in Lambda_chi");
  const auto& alg = *chi.algebra();
  auto b = borel_indices(alg);
  std::vector<Fp> vals;
  for (int k : b) {
    const auto& e = alg.basis(k);
    vals.push_back(e.type == BasisType::H ? lambda.values[e.degree][e.which] : 0);
  }
  ModuleRep base = one_dimensional(chi, b, vals);
  base.weights = std::vector<std::vector<Fp>>{lambda.degree0()};
  base.grading = std::vector<std::vector<long long>>{alg.canonical_lift(lambda.degree0())};
  base.labels = {"v_" + to_string(lambda)};
  ModuleRep z = build_induced(chi, indices_of_type(alg, BasisType::F), base, limit);
  z.name = "Z(" + to_string(lambda) + ")";
  return z;
}

ModuleRep build_dual_verma(const AlgebraPtr& alg, const LambdaWeight& lambda, std::size_t limit) {
  PChar chi = PChar::zero(alg);
  if (!in_lambda_chi(chi, lambda)) raise(ErrorKind::BadWeight, "lambda does not lie in Lambda_0");
  auto b = opposite_borel_indices(*alg);
  std::vector<Fp> vals;
  std::vector<Fp> neg0;
  for (Fp v : lambda.degree0()) neg0.push_back(fp_neg(v, alg->p()));
  for (int k : b) {
    const auto& e = alg->basis(k);
    vals.push_back(e.type == BasisType::H ? fp_neg(lambda.values[e.degree][e.which], alg->p()) : 0);
  }
  ModuleRep base = one_dimensional(chi, b, vals);
  base.weights = std::vector<std::vector<Fp>>{neg0};
  auto lift = alg->canonical_lift(lambda.degree0());
  for (auto& x : lift) x = -x;
  base.grading = std::vector<std::vector<long long>>{alg->normalize_weight(lift)};
  base.labels = {"v"};
  ModuleRep lower = build_induced(chi, indices_of_type(*alg, BasisType::E), base, limit);
  ModuleRep d = dual_module(lower);
  d.chi = chi;
  d.name = "DZ(" + to_string(lambda) + ")";
  return d;
}

ModuleRep build_torus_projective(const AlgebraPtr& alg, const std::vector<Fp>& lambda0, std::size_t limit) {
  PChar chi = PChar::zero(alg);
  std::vector<int> h0, hpos;
  for (int k : indices_of_type(*alg, BasisType::H)) (alg->basis(k).degree == 0 ? h0 : hpos).push_back(k);
  if (static_cast<int>(lambda0.size()) != alg->rank()) raise(ErrorKind::BadWeight, "weight has wrong length");
  std::vector<Fp> vals;
  for (int k : h0) vals.push_back(lambda0[alg->basis(k).which] % alg->p());
  ModuleRep base = one_dimensional(chi, h0, vals);
  base.weights = std::vector<std::vector<Fp>>{lambda0};
  base.grading = std::vector<std::vector<long long>>{alg->canonical_lift(lambda0)};
  ModuleRep q = build_induced(chi, hpos, base, limit);
  std::string l = "(";
  for (std::size_t j = 0; j < lambda0.size(); ++j) l += (j ? "," : "") + std::to_string(lambda0[j]);
  q.name = "Q" + l + ")";
  return q;
}

ZProj build_zproj(const AlgebraPtr& alg, const std::vector<Fp>& lambda0, std::size_t limit) {
  if (limit == 0) limit = dimension_limit();
  ModuleRep q = build_torus_projective(alg, lambda0, limit);
  PChar chi = PChar::zero(alg);
  auto b = borel_indices(*alg);
  ModuleRep base;
  base.alg = alg;
  base.chi = chi;
  base.basis = b;
  base.dimension = q.dim();
  for (int k : b) {
    if (alg->basis(k).type == BasisType::H)
      base.actions.push_back(q.action(k));
    else
      base.actions.emplace_back(q.dim(), q.dim(), alg->p());
  }
  base.labels = q.labels;
  base.weights = q.weights;
  base.grading = q.grading;
  ZProj out;
  out.module = build_induced(chi, indices_of_type(*alg, BasisType::F), base, limit);
  out.module.name = "Zproj" + q.name.substr(1);
  // weighted t-degree of the torus monomials
  std::vector<int> hpos;
  for (int k : indices_of_type(*alg, BasisType::H))
    if (alg->basis(k).degree > 0) hpos.push_back(k);
  const std::size_t dq = q.dim();
  std::vector<int> wdeg(dq, 0);
  for (std::size_t s = 0; s < dq; ++s) {
    std::size_t mono = s;
    for (int k : hpos) {
      wdeg[s] += static_cast<int>(mono % alg->p()) * alg->basis(k).degree;
      mono /= alg->p();
    }
  }
  std::vector<std::size_t> order(dq);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return wdeg[a] > wdeg[b]; });
  const std::size_t n = out.module.dim();
  const std::size_t monos = n / dq;
  EchelonBasis cur(n, alg->p());
  out.flag.push_back(cur);
  for (std::size_t step = 0; step < dq; ++step) {
    for (std::size_t a = 0; a < monos; ++a) {
      FpVec e(n, 0);
      e[a * dq + order[step]] = 1;
      cur.insert(e);
    }
    out.flag.push_back(cur);
  }
  return out;
}

ModuleRep build_regular_module(const PChar& chi, std::size_t limit) {
  const auto& alg = *chi.algebra();
  ModuleRep base;
  base.alg = chi.algebra();
  base.chi = chi;
  base.dimension = 1;
  base.labels = {"1"};
  ModuleRep u = build_induced(chi, alg.all_indices(), base, limit);
  u.name = "U_chi";
  return u;
}

int abelian_cover_degree(const AlgebraDescriptor& d) { return (d.m + 2) / 2; }

ModuleRep build_abelian_cover(const PChar& chi, std::size_t limit) {
  const auto& alg = *chi.algebra();
  const int d = abelian_cover_degree(alg.desc());
  auto ideal = alg.indices_of_degree_at_least(d);
  std::vector<Fp> vals;
  for (int k : ideal) vals.push_back(chi.on_basis(k));
  ModuleRep base = one_dimensional(chi, ideal, vals);
  ModuleRep c = build_induced(chi, alg.indices_of_degree_below(d), base, limit);
  c.name = "Ind_a(chi)";
  return c;
}

}  // namespace currentrep
