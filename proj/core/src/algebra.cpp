#include "currentrep/algebra.hpp"

#include <algorithm>
#include <deque>

#include "currentrep/error.hpp"

namespace currentrep {

std::string AlgebraDescriptor::name() const {
  return "(" + kind_name() + "_" + std::to_string(n) + ")_" + std::to_string(m) + " over F_" + std::to_string(p);
}

AlgebraDescriptor make_descriptor(AlgebraKind kind, int n, std::uint32_t p, int m) {
  if (!is_prime(p) || p > 255) raise(ErrorKind::InvalidDescriptor, "p must be a prime below 256");
  if (m < 0) raise(ErrorKind::InvalidDescriptor, "m must be nonnegative");
  if (n < 1 || n > 16) raise(ErrorKind::InvalidDescriptor, "n must lie in [1, 16]");
  if (kind == AlgebraKind::SL) {
    if (n < 2) raise(ErrorKind::InvalidDescriptor, "sl_n needs n >= 2");
    if (n % static_cast<int>(p) == 0)
      raise(ErrorKind::InvalidDescriptor, "sl_n requires p not dividing n (trace form degenerates)");
  }
  return {kind, n, p, m};
}

AlgebraKind parse_kind(const std::string& s) {
  if (s == "sl") return AlgebraKind::SL;
  if (s == "gl") return AlgebraKind::GL;
  raise(ErrorKind::InvalidDescriptor, "kind must be sl or gl, got '" + s + "'");
}

std::shared_ptr<const CurrentAlgebra> CurrentAlgebra::make(const AlgebraDescriptor& d) {
  return std::make_shared<const CurrentAlgebra>(d);
}

namespace {

std::string degree_suffix(int k) {
  if (k == 0) return "";
  return "*t^" + std::to_string(k);
}

}  // namespace

CurrentAlgebra::CurrentAlgebra(const AlgebraDescriptor& d0) : d_(make_descriptor(d0.kind, d0.n, d0.p, d0.m)) {
  const int n = d_.n;
  const std::uint32_t p = d_.p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long long> w(n, 0);
      w[i] = 1;
      w[j] = -1;
      roots_.push_back({i, j, j - i, normalize_weight(w)});
    }
  std::vector<int> by_height(roots_.size());
  for (std::size_t r = 0; r < roots_.size(); ++r) by_height[r] = static_cast<int>(r);
  std::stable_sort(by_height.begin(), by_height.end(), [&](int a, int b) {
    if (roots_[a].height != roots_[b].height) return roots_[a].height < roots_[b].height;
    return roots_[a].i < roots_[b].i;
  });

  struct Local {
    BasisType type;
    int which;
    FpMatrix mat;
    std::string label;
  };
  std::vector<Local> locals;
  for (auto it = by_height.rbegin(); it != by_height.rend(); ++it) {
    const auto& r = roots_[*it];
    FpMatrix x(n, n, p);
    x.set(r.j, r.i, 1);
    locals.push_back({BasisType::F, *it, x, "f" + std::to_string(r.i + 1) + std::to_string(r.j + 1)});
  }
  for (int k = 0; k < d_.rank(); ++k) {
    FpMatrix x(n, n, p);
    std::string label;
    if (d_.kind == AlgebraKind::GL) {
      x.set(k, k, 1);
      label = "E" + std::to_string(k + 1) + std::to_string(k + 1);
    } else {
      x.set(k, k, 1);
      x.set(k + 1, k + 1, p - 1);
      label = "h" + std::to_string(k + 1);
    }
    locals.push_back({BasisType::H, k, x, label});
  }
  for (int r : by_height) {
    const auto& rt = roots_[r];
    FpMatrix x(n, n, p);
    x.set(rt.i, rt.j, 1);
    locals.push_back({BasisType::E, r, x, "e" + std::to_string(rt.i + 1) + std::to_string(rt.j + 1)});
  }
  local_f_.assign(roots_.size(), -1);
  local_e_.assign(roots_.size(), -1);
  local_h_.assign(d_.rank(), -1);
  for (std::size_t l = 0; l < locals.size(); ++l) {
    local_mats_.push_back(locals[l].mat);
    if (locals[l].type == BasisType::F) local_f_[locals[l].which] = static_cast<int>(l);
    if (locals[l].type == BasisType::E) local_e_[locals[l].which] = static_cast<int>(l);
    if (locals[l].type == BasisType::H) local_h_[locals[l].which] = static_cast<int>(l);
  }
  const int dg = dim_g();
  for (int deg = 0; deg <= d_.m; ++deg)
    for (int l = 0; l < dg; ++l)
      basis_.push_back({deg, l, locals[l].type, locals[l].which, locals[l].label + degree_suffix(deg)});

  trace_form_ = FpMatrix(dg, dg, p);
  std::vector<std::vector<FpVec>> local_br(dg, std::vector<FpVec>(dg));
  std::vector<FpVec> local_pp(dg);
  for (int a = 0; a < dg; ++a) {
    local_pp[a] = local_coords(power(local_mats_[a], p));
    for (int b = 0; b < dg; ++b) {
      const FpMatrix prod = local_mats_[a] * local_mats_[b];
      Fp tr = 0;
      for (int i = 0; i < n; ++i) tr = fp_add(tr, prod(i, i), p);
      trace_form_.set(a, b, tr);
      local_br[a][b] = local_coords(commutator(local_mats_[a], local_mats_[b]));
    }
  }
  const int D = dim();
  brackets_.assign(static_cast<std::size_t>(D) * D, {});
  ppow_.assign(D, {});
  for (int k = 0; k < D; ++k) {
    const auto& bk = basis_[k];
    for (int l = 0; l < D; ++l) {
      const auto& bl = basis_[l];
      const int deg = bk.degree + bl.degree;
      if (deg > d_.m) continue;
      auto& out = brackets_[static_cast<std::size_t>(k) * D + l];
      const auto& c = local_br[bk.local][bl.local];
      for (int q = 0; q < dg; ++q)
        if (c[q]) out.emplace_back(index(deg, q), c[q]);
    }
    const long long deg = static_cast<long long>(bk.degree) * p;
    if (deg <= d_.m) {
      const auto& c = local_pp[bk.local];
      for (int q = 0; q < dg; ++q)
        if (c[q]) ppow_[k].emplace_back(index(static_cast<int>(deg), q), c[q]);
    }
  }
}

FpVec CurrentAlgebra::local_coords(const FpMatrix& x) const {
  const int n = d_.n;
  const std::uint32_t p = d_.p;
  FpVec c(dim_g(), 0);
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    c[local_f_[r]] = static_cast<std::uint8_t>(x(roots_[r].j, roots_[r].i));
    c[local_e_[r]] = static_cast<std::uint8_t>(x(roots_[r].i, roots_[r].j));
  }
  if (d_.kind == AlgebraKind::GL) {
    for (int k = 0; k < n; ++k) c[local_h_[k]] = static_cast<std::uint8_t>(x(k, k));
  } else {
    Fp run = 0;
    for (int k = 0; k < n - 1; ++k) {
      run = fp_add(run, x(k, k), p);
      c[local_h_[k]] = static_cast<std::uint8_t>(run);
    }
    if (fp_add(run, x(n - 1, n - 1), p) != 0) raise(ErrorKind::BadCharacter, "matrix is not traceless");
  }
  return c;
}

FpMatrix CurrentAlgebra::local_from_coords(const std::uint8_t* c) const {
  FpMatrix x(d_.n, d_.n, d_.p);
  for (int l = 0; l < dim_g(); ++l)
    if (c[l]) kernel::axpy(x.data(), local_mats_[l].data(), c[l], static_cast<std::size_t>(d_.n) * d_.n, d_.p);
  return x;
}

std::vector<long long> CurrentAlgebra::normalize_weight(std::vector<long long> g) const {
  if (d_.kind == AlgebraKind::SL) {
    const long long last = g.back();
    for (auto& v : g) v -= last;
  }
  return g;
}

std::vector<Fp> CurrentAlgebra::differential(const std::vector<long long>& g) const {
  std::vector<Fp> out(d_.rank());
  for (int k = 0; k < d_.rank(); ++k)
    out[k] = d_.kind == AlgebraKind::GL ? fp_reduce(g[k], d_.p) : fp_reduce(g[k] - g[k + 1], d_.p);
  return out;
}

std::vector<long long> CurrentAlgebra::canonical_lift(const std::vector<Fp>& lambda) const {
  if (static_cast<int>(lambda.size()) != d_.rank()) raise(ErrorKind::BadWeight, "weight has wrong length");
  std::vector<long long> g(d_.n, 0);
  if (d_.kind == AlgebraKind::GL) {
    for (int k = 0; k < d_.n; ++k) g[k] = lambda[k];
  } else {
    for (int k = d_.n - 2; k >= 0; --k) g[k] = g[k + 1] + lambda[k];
  }
  return g;
}

std::vector<Fp> CurrentAlgebra::root_on_torus(int root) const {
  return differential(roots_[root].weight);
}

std::vector<Fp> CurrentAlgebra::central_restriction(const std::vector<Fp>& lambda) const {
  if (d_.kind == AlgebraKind::SL) return {};
  Fp s = 0;
  for (Fp v : lambda) s = fp_add(s, v, d_.p);
  return {s};
}

bool CurrentAlgebra::congruent_mod_p(const std::vector<long long>& a, const std::vector<long long>& b) const {
  std::vector<long long> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  diff = normalize_weight(diff);
  const long long p = d_.p;
  return std::all_of(diff.begin(), diff.end(), [p](long long v) { return v % p == 0; });
}

std::vector<int> CurrentAlgebra::all_indices() const {
  std::vector<int> out(dim());
  for (int k = 0; k < dim(); ++k) out[k] = k;
  return out;
}

std::vector<int> CurrentAlgebra::indices_of_degree_at_least(int d) const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (basis_[k].degree >= d) out.push_back(k);
  return out;
}

std::vector<int> CurrentAlgebra::indices_of_degree_below(int d) const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (basis_[k].degree < d) out.push_back(k);
  return out;
}

std::vector<int> CurrentAlgebra::lie_generators(const std::vector<int>& subset) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gen_cache_.find(subset);
    if (it != gen_cache_.end()) return it->second;
  }
  const int D = dim();
  const std::uint32_t p = d_.p;
  auto priority = [&](int k) {
    const auto& b = basis_[k];
    int cls = 3;
    if (b.type == BasisType::H) cls = 1;
    if (b.type != BasisType::H && roots_[b.which].height == 1) cls = 0;
    return std::make_pair(b.degree, cls);
  };
  std::vector<int> order = subset;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return priority(a) < priority(b); });

  auto bracket_vec = [&](const FpVec& x, const FpVec& y) {
    FpVec out(D, 0);
    for (int k = 0; k < D; ++k) {
      if (!x[k]) continue;
      for (int l = 0; l < D; ++l) {
        if (!y[l]) continue;
        Fp c = fp_mul(x[k], y[l], p);
        for (auto [q, v] : bracket(k, l)) out[q] = static_cast<std::uint8_t>(fp_add(out[q], fp_mul(c, v, p), p));
      }
    }
    return out;
  };

  std::vector<int> gens;
  EchelonBasis span(D, p);
  std::vector<FpVec> span_vecs;
  for (int cand : order) {
    FpVec e(D, 0);
    e[cand] = 1;
    if (span.contains(e)) continue;
    gens.push_back(cand);
    // recompute closure of the span under brackets with all generators
    std::deque<FpVec> queue;
    if (span.insert(e) >= 0) {
      span_vecs.push_back(e);
      queue.push_back(e);
    }
    for (const auto& v : span_vecs) queue.push_back(v);
    while (!queue.empty()) {
      FpVec v = queue.front();
      queue.pop_front();
      for (int g : gens) {
        FpVec ge(D, 0);
        ge[g] = 1;
        FpVec w = bracket_vec(ge, v);
        if (span.insert(w) >= 0) {
          span_vecs.push_back(w);
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(span.dim()) == static_cast<int>(subset.size())) break;
  }
  std::sort(gens.begin(), gens.end());
  std::lock_guard<std::mutex> lock(cache_mutex_);
  gen_cache_[subset] = gens;
  return gens;
}

}  // namespace currentrep
