#include "currentrep/module.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>

#include "currentrep/error.hpp"

namespace currentrep {

int ModuleRep::position(int global) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), global);
  if (it == basis.end() || *it != global) return -1;
  return static_cast<int>(it - basis.begin());
}

const FpMatrix& ModuleRep::action(int global) const {
  int pos = position(global);
  if (pos < 0) raise(ErrorKind::AlgebraMismatch, "basis element does not act on this module");
  return actions[pos];
}

FpMatrix ModuleRep::act(const CurrentElement& x) const {
  const FpVec c = x.coords();
  FpMatrix r(dim(), dim(), p());
  for (int k = 0; k < alg->dim(); ++k) {
    if (!c[k]) continue;
    r += action(k).scaled(c[k]);
  }
  return r;
}

namespace {
std::size_t limit_override = 0;
}

void set_dimension_limit(std::size_t limit) { limit_override = limit; }

std::size_t dimension_limit() {
  if (limit_override) return limit_override;
  if (const char* env = std::getenv("CURRENTREP_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000;
}

void check_dimension(std::size_t dim, std::size_t limit, const std::string& what) {
  if (dim > limit)
    raise(ErrorKind::TooLarge, what + " has dimension " + std::to_string(dim) + " above the limit " + std::to_string(limit));
}

namespace {

FpMatrix expand(const ModuleRep& m, const SparseVec& v, bool& ok) {
  FpMatrix r(m.dim(), m.dim(), m.p());
  for (auto [q, c] : v) {
    int pos = m.position(q);
    if (pos < 0) {
      ok = false;
      return r;
    }
    r += m.actions[pos].scaled(c);
  }
  return r;
}

FpVec expand_apply(const ModuleRep& m, const SparseVec& v, const FpVec& x, bool& ok) {
  FpVec out(m.dim(), 0);
  for (auto [q, c] : v) {
    int pos = m.position(q);
    if (pos < 0) {
      ok = false;
      return out;
    }
    FpVec y = m.actions[pos].apply(x);
    kernel::axpy(out.data(), y.data(), c, out.size(), m.p());
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const ModuleRep& m, std::size_t exact_limit, int probes, std::uint64_t seed) {
  AxiomReport rep;
  const auto& alg = *m.alg;
  const std::uint32_t p = m.p();
  const std::size_t n = m.dim();
  if (m.actions.size() != m.basis.size()) return {false, "action list does not match the basis"};
  for (const auto& a : m.actions)
    if (a.rows() != n || a.cols() != n) return {false, "action matrix has the wrong shape"};
  const std::size_t B = m.basis.size();
  if (n <= exact_limit) {
    for (std::size_t i = 0; i < B; ++i)
      for (std::size_t j = i + 1; j < B; ++j) {
        bool ok = true;
        FpMatrix lhs = expand(m, alg.bracket(m.basis[i], m.basis[j]), ok);
        if (!ok) return {false, "acting basis is not closed under the bracket"};
        if (!(lhs == commutator(m.actions[i], m.actions[j])))
          return {false, "bracket fails on (" + alg.basis(m.basis[i]).label + ", " + alg.basis(m.basis[j]).label + ")"};
      }
    for (std::size_t i = 0; i < B; ++i) {
      bool ok = true;
      FpMatrix lhs = power(m.actions[i], p) - expand(m, alg.p_power(m.basis[i]), ok);
      if (!ok) return {false, "acting basis is not closed under the p-map"};
      const Fp c = fp_pow(m.chi.on_basis(m.basis[i]), p, p);
      if (!(lhs == FpMatrix::identity(n, p).scaled(c)))
        return {false, "p-power rule fails on " + alg.basis(m.basis[i]).label};
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(p) - 1);
  for (int t = 0; t < probes; ++t) {
    FpVec v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
    std::vector<FpVec> images;
    for (std::size_t i = 0; i < B; ++i) images.push_back(m.actions[i].apply(v));
    for (std::size_t i = 0; i < B; ++i)
      for (std::size_t j = i + 1; j < B; ++j) {
        bool ok = true;
        FpVec lhs = expand_apply(m, alg.bracket(m.basis[i], m.basis[j]), v, ok);
        if (!ok) return {false, "acting basis is not closed under the bracket"};
        FpVec a = m.actions[i].apply(images[j]);
        FpVec b = m.actions[j].apply(images[i]);
        kernel::axpy(a.data(), b.data(), p - 1, n, p);
        if (a != lhs)
          return {false, "bracket fails on (" + alg.basis(m.basis[i]).label + ", " + alg.basis(m.basis[j]).label + ")"};
      }
    for (std::size_t i = 0; i < B; ++i) {
      bool ok = true;
      FpVec x = v;
      for (std::uint32_t k = 0; k < p; ++k) x = m.actions[i].apply(x);
      FpVec y = expand_apply(m, alg.p_power(m.basis[i]), v, ok);
      if (!ok) return {false, "acting basis is not closed under the p-map"};
      kernel::axpy(x.data(), y.data(), p - 1, n, p);
      FpVec want = v;
      kernel::scale(want.data(), fp_pow(m.chi.on_basis(m.basis[i]), p, p), n, p);
      if (fp_pow(m.chi.on_basis(m.basis[i]), p, p) == 0) std::fill(want.begin(), want.end(), 0);
      if (x != want) return {false, "p-power rule fails on " + alg.basis(m.basis[i]).label};
    }
  }
  return rep;
}

GenModule generator_view(const ModuleRep& m) {
  GenModule g;
  g.p = m.p();
  g.dim = m.dim();
  g.gens = m.alg->lie_generators(m.basis);
  for (int k : g.gens) g.mats.push_back(m.action(k));
  return g;
}

ModuleRep complete_from_generators(const GenModule& g, const ModuleRep& shape) {
  const auto& alg = *shape.alg;
  const int D = alg.dim();
  const std::uint32_t p = alg.p();
  // nested commutator words spanning the subalgebra
  struct Word {
    int gen;     // position in g.gens
    int parent;  // -1 for the bare generator
  };
  std::vector<Word> words;
  std::vector<FpVec> vecs;
  std::vector<FpMatrix> mats;
  EchelonBasis span(D, p);
  auto bracket_basis_vec = [&](int k, const FpVec& y) {
    FpVec out(D, 0);
    for (int l = 0; l < D; ++l) {
      if (!y[l]) continue;
      for (auto [q, v] : alg.bracket(k, l)) out[q] = static_cast<std::uint8_t>(fp_add(out[q], fp_mul(y[l], v, p), p));
    }
    return out;
  };
  std::deque<int> queue;
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    FpVec e(D, 0);
    e[g.gens[i]] = 1;
    if (span.insert(e) >= 0) {
      words.push_back({static_cast<int>(i), -1});
      vecs.push_back(e);
      mats.push_back(g.mats[i]);
      queue.push_back(static_cast<int>(vecs.size()) - 1);
    }
  }
  while (!queue.empty() && span.dim() < shape.basis.size()) {
    int j = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
      FpVec w = bracket_basis_vec(g.gens[i], vecs[j]);
      if (span.insert(w) >= 0) {
        words.push_back({static_cast<int>(i), j});
        vecs.push_back(w);
        mats.push_back(commutator(g.mats[i], mats[j]));
        queue.push_back(static_cast<int>(vecs.size()) - 1);
      }
    }
  }
  // express each basis element in the words
  FpMatrix vm = FpMatrix::from_rows(vecs, D, p);
  FpMatrix vm_t = vm.transpose();
  ModuleRep out = shape;
  out.dimension = g.dim;
  out.actions.clear();
  for (int k : shape.basis) {
    FpVec e(D, 0);
    e[k] = 1;
    auto c = solve(vm_t, e);
    if (!c) raise(ErrorKind::InternalError, "generators do not span the acting algebra");
    FpMatrix r(g.dim, g.dim, p);
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i]) r += mats[i].scaled((*c)[i]);
    out.actions.push_back(std::move(r));
  }
  out.weights.reset();
  out.grading.reset();
  out.labels.clear();
  for (std::size_t i = 0; i < g.dim; ++i) out.labels.push_back("v" + std::to_string(i));
  return out;
}

ModuleRep dual_module(const ModuleRep& m) {
  ModuleRep d = m;
  d.chi = m.chi.negated();
  for (std::size_t i = 0; i < m.actions.size(); ++i) d.actions[i] = m.actions[i].transpose().negated();
  if (m.weights) {
    for (auto& w : *d.weights)
      for (auto& x : w) x = fp_neg(x, m.p());
  }
  if (m.grading) {
    for (auto& g : *d.grading) {
      for (auto& x : g) x = -x;
      g = m.alg->normalize_weight(g);
    }
  }
  for (auto& l : d.labels) l = l + "*";
  d.name = m.name.empty() ? "dual" : m.name + "*";
  return d;
}

GenModule dual_module(const GenModule& m) {
  GenModule d = m;
  for (auto& a : d.mats) a = a.transpose().negated();
  return d;
}

ModuleRep inflate_module(const ModuleRep& m, AlgebraPtr target) {
  const auto& src = *m.alg;
  const auto& dt = target->desc();
  if (!(src.desc().with_m(dt.m) == dt) || dt.m < src.m()) raise(ErrorKind::AlgebraMismatch, "inflation target must be a larger truncation");
  std::vector<bool> local_used(src.dim_g(), false);
  for (int k : m.basis) local_used[src.basis(k).local] = true;
  ModuleRep out;
  out.alg = target;
  out.chi = inflate_pchar(m.chi, target);
  out.dimension = m.dim();
  for (int k = 0; k < target->dim(); ++k) {
    const auto& b = target->basis(k);
    if (b.degree <= src.m()) {
      int pos = m.position(src.index(b.degree, b.local));
      if (pos < 0) continue;
      out.basis.push_back(k);
      out.actions.push_back(m.actions[pos]);
    } else if (local_used[b.local]) {
      out.basis.push_back(k);
      out.actions.emplace_back(m.dim(), m.dim(), m.p());
    }
  }
  out.labels = m.labels;
  out.weights = m.weights;
  out.grading = m.grading;
  out.name = m.name.empty() ? "inflated" : "Infl " + m.name;
  return out;
}

std::vector<Fp> twist_weight(const ModuleRep& m, const PChar& eta) {
  const auto& alg = *m.alg;
  const std::uint32_t p = m.p();
  const std::size_t B = m.basis.size();
  // derived algebra of the acting subalgebra
  EchelonBasis derived(alg.dim(), p);
  for (std::size_t i = 0; i < B; ++i)
    for (std::size_t j = i + 1; j < B; ++j) {
      FpVec v(alg.dim(), 0);
      for (auto [q, c] : alg.bracket(m.basis[i], m.basis[j])) v[q] = static_cast<std::uint8_t>(c);
      derived.insert(v);
    }
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    Fp s = 0;
    for (int k = 0; k < alg.dim(); ++k)
      s = fp_add(s, fp_mul(derived.rows()(r, k), eta.on_basis(k), p), p);
    if (s) raise(ErrorKind::BadTwist, "twisting character does not vanish on the derived algebra");
  }
  // unknowns mu on m.basis; rows: mu(d) = 0 for d derived, mu(b) - mu(b^{[p]}) = eta(b)
  const std::size_t rows = derived.dim() + B;
  FpMatrix sys(rows, B, p);
  FpVec rhs(rows, 0);
  for (std::size_t r = 0; r < derived.dim(); ++r)
    for (std::size_t j = 0; j < B; ++j) sys.set(r, j, derived.rows()(r, m.basis[j]));
  for (std::size_t i = 0; i < B; ++i) {
    const std::size_t r = derived.dim() + i;
    sys.add_to(r, i, 1);
    for (auto [q, c] : alg.p_power(m.basis[i])) {
      int pos = m.position(q);
      if (pos < 0) raise(ErrorKind::AlgebraMismatch, "acting basis is not closed under the p-map");
      sys.add_to(r, pos, fp_neg(c, p));
    }
    rhs[r] = static_cast<std::uint8_t>(eta.on_basis(m.basis[i]));
  }
  auto sol = solve(sys, rhs);
  if (!sol) raise(ErrorKind::NeedsFieldExtension, "twist weight requires an Artin-Schreier extension of F_p");
  return std::vector<Fp>(sol->begin(), sol->end());
}

ModuleRep twist_module(const ModuleRep& m, const PChar& eta) {
  if (!(eta.dual().desc() == m.alg->desc())) raise(ErrorKind::AlgebraMismatch, "twist character on a different algebra");
  const auto mu = twist_weight(m, eta);
  ModuleRep out = m;
  const FpMatrix id = FpMatrix::identity(m.dim(), m.p());
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    if (mu[i]) out.actions[i] += id.scaled(mu[i]);
  out.chi = m.chi + eta;
  out.weights.reset();
  out.name = m.name.empty() ? "twisted" : m.name + " (twisted)";
  return out;
}

GenModule submodule(const GenModule& m, const EchelonBasis& w) {
  GenModule s;
  s.p = m.p;
  s.dim = w.dim();
  s.gens = m.gens;
  const std::size_t d = w.dim();
  FpVec coeffs(d);
  for (const auto& a : m.mats) {
    FpMatrix img = w.rows() * a.transpose();  // row i = (a w_i)^T
    FpMatrix sm(d, d, m.p);
    for (std::size_t i = 0; i < d; ++i) {
      w.reduce(img.row(i), coeffs.data());
      for (std::size_t j = 0; j < d; ++j) sm.set(j, i, coeffs[j]);
    }
    s.mats.push_back(std::move(sm));
  }
  return s;
}

GenModule quotient_module(const GenModule& m, const EchelonBasis& w) {
  GenModule q;
  q.p = m.p;
  q.gens = m.gens;
  const auto free = w.free_columns();
  const std::size_t r = free.size();
  q.dim = r;
  for (const auto& a : m.mats) {
    FpMatrix at = a.transpose();  // row c = (a e_c)^T
    FpMatrix qm(r, r, m.p);
    for (std::size_t s = 0; s < r; ++s) {
      FpVec v = at.row_vec(free[s]);
      w.reduce(v.data());
      for (std::size_t t = 0; t < r; ++t) qm.set(t, s, v[free[t]]);
    }
    q.mats.push_back(std::move(qm));
  }
  return q;
}

namespace {

GenModule full_view(const ModuleRep& m) {
  GenModule g;
  g.p = m.p();
  g.dim = m.dim();
  g.gens = m.basis;
  g.mats = m.actions;
  return g;
}

ModuleRep from_full_view(const GenModule& g, const ModuleRep& like, const std::string& name) {
  ModuleRep out;
  out.alg = like.alg;
  out.chi = like.chi;
  out.basis = like.basis;
  out.actions = g.mats;
  out.dimension = g.dim;
  out.name = name;
  for (std::size_t i = 0; i < g.dim; ++i) out.labels.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

ModuleRep submodule(const ModuleRep& m, const EchelonBasis& w) {
  return from_full_view(submodule(full_view(m), w), m, m.name + " (sub)");
}

ModuleRep quotient_module(const ModuleRep& m, const EchelonBasis& w) {
  ModuleRep q = from_full_view(quotient_module(full_view(m), w), m, m.name + " (quotient)");
  const auto free = w.free_columns();
  if (m.weights) {
    // weight vectors stay weight vectors modulo a weight-graded W only; keep when W is spanned by basis vectors
    bool coordinate = true;
    for (std::size_t i = 0; i < w.dim() && coordinate; ++i) {
      std::size_t nz = 0;
      for (std::size_t j = 0; j < w.ambient(); ++j) nz += w.rows()(i, j) != 0;
      coordinate = nz == 1;
    }
    if (coordinate) {
      std::vector<std::vector<Fp>> wt;
      for (auto c : free) wt.push_back((*m.weights)[c]);
      q.weights = wt;
    }
  }
  return q;
}

bool is_invariant(const ModuleRep& m, const EchelonBasis& w) {
  for (const auto& a : m.actions) {
    FpMatrix img = w.rows() * a.transpose();
    for (std::size_t i = 0; i < img.rows(); ++i)
      if (!w.contains(img.row_vec(i))) return false;
  }
  return true;
}

EchelonBasis spin_rows(const FpMatrix& seeds, const std::vector<FpMatrix>& right_mats, std::size_t stop_at) {
  const std::size_t n = seeds.cols();
  const std::uint32_t p = seeds.p();
  if (stop_at == 0) stop_at = n;
  EchelonBasis basis(n, p);
  FpMatrix pending(0, n, p);
  for (std::size_t i = 0; i < seeds.rows(); ++i) {
    long idx = basis.insert(seeds.row(i));
    if (idx >= 0) pending.append_row(basis.rows().row(static_cast<std::size_t>(idx)));
  }
  while (pending.rows() > 0 && basis.dim() < stop_at) {
    FpMatrix next(0, n, p);
    for (const auto& a : right_mats) {
      FpMatrix img = pending * a;
      for (std::size_t i = 0; i < img.rows(); ++i) {
        long idx = basis.insert(img.row(i));
        if (idx >= 0) next.append_row(basis.rows().row(static_cast<std::size_t>(idx)));
        if (basis.dim() >= stop_at) return basis;
      }
    }
    pending = std::move(next);
  }
  return basis;
}

EchelonBasis spin(const GenModule& m, const FpMatrix& seed_rows) {
  std::vector<FpMatrix> t;
  for (const auto& a : m.mats) t.push_back(a.transpose());
  return spin_rows(seed_rows, t);
}

}  // namespace currentrep
