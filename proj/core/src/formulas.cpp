#include "currentrep/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "currentrep/error.hpp"

namespace currentrep {

std::uint64_t ipow(std::uint64_t base, int e) {
  if (e < 0) raise(ErrorKind::FormulaDomainError, "negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int RootLattice::dim_center() const {
  if (kind == AlgebraKind::GL) return 1;
  return n % static_cast<int>(p) == 0 ? 1 : 0;
}

Weight RootLattice::normalize(Weight g) const {
  if (kind == AlgebraKind::SL) {
    const long long last = g.back();
    for (auto& x : g) x -= last;
  }
  return g;
}

bool RootLattice::congruent_mod_p(const Weight& a, const Weight& b) const {
  Weight d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  d = normalize(d);
  const long long pp = p;
  return std::all_of(d.begin(), d.end(), [&](long long x) { return x % pp == 0; });
}

bool RootLattice::central_vanishing(const Weight& g) const {
  if (dim_center() == 0) return true;
  long long s = std::accumulate(g.begin(), g.end(), 0LL);
  const long long pp = p;
  return ((s % pp) + pp) % pp == 0;
}

std::string RootLattice::name() const {
  return "(" + std::string(kind == AlgebraKind::GL ? "gl" : "sl") + "_" + std::to_string(n) + ")_" +
         std::to_string(m) + " p=" + std::to_string(p);
}

RootLattice root_lattice(AlgebraKind kind, int n, std::uint32_t p, int m) {
  if (!is_prime(p) || p >= 256) raise(ErrorKind::InvalidDescriptor, "p must be a prime below 256");
  if (n < 1 || (kind == AlgebraKind::SL && n < 2) || m < 0) raise(ErrorKind::InvalidDescriptor, "bad rank or truncation");
  RootLattice lat;
  lat.kind = kind;
  lat.n = n;
  lat.p = p;
  lat.m = m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight w(n, 0);
      w[i] = 1;
      w[j] = -1;
      lat.roots.push_back(lat.normalize(w));
    }
  return lat;
}

RootLattice root_lattice(const AlgebraDescriptor& d) { return root_lattice(d.kind, d.n, d.p, d.m); }

std::vector<Weight> lattice_box(const RootLattice& lat, long long radius) {
  const int free = lat.kind == AlgebraKind::SL ? lat.n - 1 : lat.n;
  std::vector<Weight> out;
  Weight w(lat.n, 0);
  for (int i = 0; i < free; ++i) w[i] = -radius;
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < free && w[i] == radius) w[i++] = -radius;
    if (i == free) break;
    ++w[i];
  }
  return out;
}

std::uint64_t PartitionTable::at(const Weight& g) const {
  auto it = values.find(lattice.normalize(g));
  return it == values.end() ? 0 : it->second;
}

std::uint64_t PartitionTable::mass() const {
  std::uint64_t s = 0;
  for (const auto& [w, v] : values) s += v;
  return s;
}

PartitionTable kostant_table(const RootLattice& lat) {
  PartitionTable t;
  t.lattice = lat;
  t.values[Weight(lat.n, 0)] = 1;
  for (int layer = 1; layer <= lat.m; ++layer) {
    for (const auto& a : lat.roots) {
      std::map<Weight, std::uint64_t> next;
      for (const auto& [w, v] : t.values) {
        Weight x = w;
        for (std::uint32_t k = 0; k < lat.p; ++k) {
          next[x] += v;
          for (int i = 0; i < lat.n; ++i) x[i] += a[i];
        }
      }
      t.values = std::move(next);
    }
  }
  return t;
}

std::uint64_t kostant_pm(const PartitionTable& table, const Weight& g) { return table.at(g); }

ShiftSum pm_shift_sum(const PartitionTable& table, const Weight& g) {
  const RootLattice& lat = table.lattice;
  ShiftSum s;
  s.gamma = lat.normalize(g);
  for (const auto& [w, v] : table.values)
    if (lat.congruent_mod_p(w, s.gamma)) s.value += v;
  s.paper_exponent = lat.m * lat.num_positive_roots() - lat.rank();
  s.z_exponent = s.paper_exponent + lat.dim_center();
  s.paper_match = s.paper_exponent >= 0 && s.value == ipow(lat.p, s.paper_exponent);
  s.z_match = s.z_exponent >= 0 && s.value == ipow(lat.p, s.z_exponent);
  return s;
}

GradedConvolution graded_convolution(const AlgebraPtr& alg, const std::vector<Fp>& lambda0) {
  GradedConvolution out;
  ModuleRep z = build_baby_verma(PChar::zero(alg), restricted_weight(*alg, lambda0));
  for (const auto& [w, c] : graded_character(z)) out.module_character[w] = c;
  const RootLattice lat = root_lattice(alg->desc());
  const PartitionTable table = kostant_table(lat);
  const Weight gamma = alg->canonical_lift(lambda0);
  // Char Z^g(beta): f-exponents 0..p-1 on each positive root of g.
  std::map<Weight, std::uint64_t> zg{{Weight(lat.n, 0), 1}};
  for (const auto& a : lat.roots) {
    std::map<Weight, std::uint64_t> next;
    for (const auto& [w, v] : zg) {
      Weight x = w;
      for (std::uint32_t k = 0; k < lat.p; ++k) {
        next[x] += v;
        for (int i = 0; i < lat.n; ++i) x[i] -= a[i];
      }
    }
    zg = std::move(next);
  }
  for (const auto& [s, v] : table.values) {
    for (const auto& [d, c] : zg) {
      Weight w(lat.n);
      for (int i = 0; i < lat.n; ++i) w[i] = gamma[i] - s[i] + d[i];
      out.convolution[lat.normalize(w)] += v * c;
    }
  }
  out.match = out.module_character.size() == out.convolution.size();
  if (out.match)
    for (const auto& [w, v] : out.convolution) {
      auto it = out.module_character.find(w);
      if (it == out.module_character.end() || static_cast<std::uint64_t>(it->second) != v) {
        out.match = false;
        break;
      }
    }
  return out;
}

int RestrictedSimples::weight_of_type(int t) const {
  for (std::size_t i = 0; i < type_of.size(); ++i)
    if (type_of[i] == t) return static_cast<int>(i);
  return -1;
}

int RestrictedSimples::weight_index(const std::vector<Fp>& lambda0) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == lambda0) return static_cast<int>(i);
  return -1;
}

namespace {

std::string weight_label(const std::vector<Fp>& l) {
  std::string s = "L(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

}  // namespace

RestrictedSimples restricted_simples(const AlgebraPtr& alg, std::uint64_t seed) {
  RestrictedSimples rs;
  rs.alg = alg;
  rs.weights = restricted_weights(*alg);
  AlgebraPtr alg0 = alg->m() == 0 ? alg : CurrentAlgebra::make(alg->desc().with_m(0));
  std::mt19937_64 rng(seed);
  for (const auto& l0 : rs.weights) {
    ModuleRep z = build_baby_verma(PChar::zero(alg0), restricted_weight(*alg0, l0));
    ModuleRep h = head(z, seed).head;
    if (alg0 != alg) h = inflate_module(h, alg);
    h.name = weight_label(l0);
    GenModule g = view_for_catalog(h, rs.catalog);
    const std::size_t before = rs.catalog.size();
    const int t = rs.catalog.add_named(g, h.name, rng);
    if (rs.catalog.size() == before) raise(ErrorKind::InternalError, "two heads of baby Vermas coincide");
    rs.type_of.push_back(t);
    rs.dims.push_back(h.dim());
  }
  return rs;
}

std::vector<std::uint64_t> composition_vector(const ModuleRep& m, RestrictedSimples& rs, std::uint64_t seed) {
  ChopOptions opts;
  opts.seed = seed;
  CompositionSeries cs = chop(m, rs.catalog, opts);
  std::vector<std::uint64_t> out(rs.weights.size(), 0);
  for (const auto& [t, c] : cs.multiplicities()) {
    const int w = rs.weight_of_type(t);
    if (w < 0) raise(ErrorKind::InternalError, "composition factor outside the restricted simples");
    out[w] += static_cast<std::uint64_t>(c);
  }
  return out;
}

std::uint64_t LConstants::mass() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * simple_dims[i];
  return s;
}

LConstants l_constants(const AlgebraDescriptor& d, std::uint64_t seed) {
  AlgebraPtr alg0 = CurrentAlgebra::make(d.with_m(0));
  RestrictedSimples rs = restricted_simples(alg0, seed);
  LConstants lc;
  lc.g = d.with_m(0);
  lc.weights = rs.weights;
  lc.simple_dims = rs.dims;
  lc.l.assign(rs.weights.size(), 0);
  for (const auto& nu : rs.weights) {
    ModuleRep z = build_baby_verma(PChar::zero(alg0), restricted_weight(*alg0, nu));
    auto row = composition_vector(z, rs, seed);
    for (std::size_t mu = 0; mu < row.size(); ++mu) lc.l[mu] += row[mu];
    lc.verma.push_back(std::move(row));
  }
  return lc;
}

int verma_exponent(const AlgebraDescriptor& d, bool z_correction) {
  return d.m * d.num_positive_roots() - d.rank() + (z_correction ? d.dim_center() : 0);
}

int cartan_exponent(const AlgebraDescriptor& d, bool z_correction) {
  return d.m * d.dim_g() - d.rank() + (z_correction ? d.dim_center() : 0);
}

namespace {

bool same_central(const CurrentAlgebra& alg, const LConstants& lc, std::size_t a, std::size_t b) {
  return alg.central_restriction(lc.weights.at(a)) == alg.central_restriction(lc.weights.at(b));
}

void check_pure_torus(const AlgebraDescriptor& d) {
  if (d.num_positive_roots() == 0) raise(ErrorKind::FormulaDomainError, "formula excludes pure tori (N = 0)");
}

}  // namespace

std::uint64_t verma_mult_formula(const CurrentAlgebra& alg, const LConstants& lc, std::size_t lambda, std::size_t mu,
                                 bool z_correction) {
  check_pure_torus(alg.desc());
  if (!same_central(alg, lc, lambda, mu)) return 0;
  const int e = verma_exponent(alg.desc(), z_correction);
  if (e < 0) raise(ErrorKind::FormulaDomainError, "exponent " + std::to_string(e) + " is negative");
  return lc.l.at(mu) * ipow(alg.p(), e);
}

std::uint64_t cartan_formula(const CurrentAlgebra& alg, const LConstants& lc, std::size_t lambda, std::size_t mu,
                             bool z_correction) {
  check_pure_torus(alg.desc());
  if (!same_central(alg, lc, lambda, mu)) return 0;
  const int e = cartan_exponent(alg.desc(), z_correction);
  if (e < 0) raise(ErrorKind::FormulaDomainError, "exponent " + std::to_string(e) + " is negative");
  return lc.l.at(lambda) * lc.l.at(mu) * ipow(alg.p(), e);
}

MultiplicityTables multiplicity_tables(const AlgebraPtr& alg, RestrictedSimples& rs, const TableRequest& req,
                                       std::uint64_t seed) {
  MultiplicityTables t;
  const PChar zero = PChar::zero(alg);
  std::vector<ModuleRep> vermas;
  for (const auto& l0 : rs.weights) {
    const LambdaWeight lw = restricted_weight(*alg, l0);
    if (req.verma) t.verma.push_back(composition_vector(build_baby_verma(zero, lw), rs, seed));
    if (req.dual_verma) t.dual_verma.push_back(composition_vector(build_dual_verma(alg, lw), rs, seed));
    if (req.zproj) {
      ZProj zp = build_zproj(alg, l0);
      t.zproj.push_back(composition_vector(zp.module, rs, seed));
      if (vermas.empty())
        for (const auto& mu : rs.weights) vermas.push_back(build_baby_verma(zero, restricted_weight(*alg, mu)));
      std::vector<std::uint64_t> row(rs.weights.size(), 0);
      for (std::size_t i = 1; i < zp.flag.size(); ++i) {
        ModuleRep upper = submodule(zp.module, zp.flag[i]);
        EchelonBasis lower(upper.dim(), alg->p());
        for (std::size_t r = 0; r < zp.flag[i - 1].dim(); ++r) {
          auto c = zp.flag[i].coordinates(zp.flag[i - 1].rows().row_vec(r));
          if (!c) raise(ErrorKind::InternalError, "Z_proj flag is not nested");
          lower.insert(*c);
        }
        ModuleRep section = quotient_module(upper, lower);
        bool found = false;
        for (std::size_t mu = 0; mu < vermas.size() && !found; ++mu) {
          if (vermas[mu].dim() != section.dim()) continue;
          if (are_isomorphic(section, vermas[mu], seed, false).isomorphic) {
            ++row[mu];
            found = true;
          }
        }
        if (!found) raise(ErrorKind::InternalError, "Z_proj section is not a baby Verma module");
      }
      t.zproj_flag.push_back(std::move(row));
    }
  }
  if (req.regular) t.regular = composition_vector(build_regular_module(zero), rs, seed);
  return t;
}

std::vector<std::vector<std::uint64_t>> cartan_chain(const MultiplicityTables& t) {
  const std::size_t k = t.dual_verma.size();
  if (t.zproj.size() != k) raise(ErrorKind::InternalError, "cartan chain needs DZ and Z_proj tables");
  std::vector<std::vector<std::uint64_t>> c(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t nu = 0; nu < k; ++nu)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t mu = 0; mu < k; ++mu) c[l][mu] += t.dual_verma[nu][l] * t.zproj[nu][mu];
  return c;
}

HomogeneousClassification classify_simples_homogeneous(const PChar& chi) {
  const auto deg = chi.homogeneous_degree();
  if (!deg) raise(ErrorKind::OutOfScope, "p-character is not homogeneous");
  const AlgebraPtr& alg = chi.algebra();
  AlgebraPtr algk = *deg == alg->m() ? alg : CurrentAlgebra::make(alg->desc().with_m(*deg));
  PChar psi = *deg == alg->m() ? chi : truncate_pchar(chi, *deg);
  const FpMatrix& e = psi.dual().coeff(0);
  for (int i = 1; i <= algk->m(); ++i)
    if (!psi.dual().coeff(i).is_zero()) raise(ErrorKind::InternalError, "degree reduction left a non-top component");
  HomogeneousClassification out;
  try {
    out.levi = standard_levi_form(*algk, e);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotNilpotent) raise(ErrorKind::OutOfScope, "homogeneous p-character is not nilpotent");
    throw;
  }
  out.chi = conjugate(psi, out.levi.conjugator);
  out.weights = enumerate_lambda(out.chi);
  std::map<std::vector<Fp>, int> ids;
  for (const auto& w : out.weights) {
    auto key = restrict_to_center(*algk, out.levi.center_basis, w.degree0());
    auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
    out.class_of.push_back(it->second);
  }
  out.num_classes = static_cast<int>(ids.size());
  out.predicted_classes = static_cast<int>(ipow(alg->p(), static_cast<int>(out.levi.center_basis.size())));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void label_components(BlockResult& r, UnionFind& uf) {
  std::map<int, int> ids;
  for (std::size_t i = 0; i < r.weights.size(); ++i) {
    auto it = ids.emplace(uf.find(static_cast<int>(i)), static_cast<int>(ids.size())).first;
    r.block_of.push_back(it->second);
  }
  r.num_blocks = static_cast<int>(ids.size());
}

}  // namespace

BlockResult blocks(const AlgebraPtr& alg, RestrictedSimples& rs, std::uint64_t seed) {
  BlockResult r;
  r.weights = rs.weights;
  UnionFind uf(rs.weights.size());
  const PChar zero = PChar::zero(alg);
  for (std::size_t l = 0; l < rs.weights.size(); ++l) {
    auto row = composition_vector(build_baby_verma(zero, restricted_weight(*alg, rs.weights[l])), rs, seed);
    for (std::size_t mu = 0; mu < row.size(); ++mu)
      if (row[mu]) uf.unite(static_cast<int>(l), static_cast<int>(mu));
  }
  label_components(r, uf);
  r.predicted = ipow(alg->p(), (alg->m() + 1) * alg->desc().dim_center());
  return r;
}

BlockResult torus_blocks(const AlgebraPtr& alg) {
  BlockResult r;
  r.weights = restricted_weights(*alg);
  UnionFind uf(r.weights.size());
  for (std::size_t l = 0; l < r.weights.size(); ++l) {
    ModuleRep q = build_torus_projective(alg, r.weights[l]);
    // every factor is one-dimensional; its weight is an eigenvalue of the degree-0 torus
    for (const auto& [w, mult] : weight_character(q)) {
      (void)mult;
      for (std::size_t mu = 0; mu < r.weights.size(); ++mu)
        if (r.weights[mu] == w) uf.unite(static_cast<int>(l), static_cast<int>(mu));
    }
  }
  label_components(r, uf);
  r.predicted = ipow(alg->p(), (alg->m() + 1) * alg->rank());
  return r;
}

std::optional<FpMatrix> regular_toral_element(const CurrentAlgebra& alg) {
  const int n = alg.n();
  const std::uint32_t p = alg.p();
  if (static_cast<std::uint32_t>(n) > p) return std::nullopt;
  // distinct diagonal entries; for sl shift so the trace vanishes
  std::vector<Fp> d(n);
  for (int i = 0; i < n; ++i) d[i] = static_cast<Fp>(i);
  if (alg.desc().kind == AlgebraKind::SL) {
    Fp tr = 0;
    for (Fp x : d) tr = fp_add(tr, x, p);
    // subtract tr/n from every entry (p ∤ n)
    const Fp shift = fp_mul(tr, fp_inv(static_cast<Fp>(n % p), p), p);
    for (auto& x : d) x = fp_sub(x, shift, p);
  }
  FpMatrix h(n, n, p);
  for (int i = 0; i < n; ++i) h.set(i, i, d[i]);
  return h;
}

SemisimpleAudit semisimple_character_audit(const PChar& chi, std::uint64_t seed, std::size_t limit) {
  const AlgebraPtr& alg = chi.algebra();
  const auto& d = alg->desc();
  const std::uint32_t p = alg->p();
  // dual element must be diagonal with regular semisimple degree-0 part
  for (const auto& c : chi.dual().coeffs())
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        if (i != j && c(i, j)) raise(ErrorKind::OutOfScope, "p-character is not toral");
  const FpMatrix& c0 = chi.dual().coeff(0);
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      if (c0(i, i) == c0(j, j)) raise(ErrorKind::OutOfScope, "toral p-character is not regular");
  SemisimpleAudit a;
  a.chi = chi;
  const int big_n = d.num_positive_roots();
  a.predicted_count = static_cast<int>(ipow(p, d.rank()));
  a.predicted_simple_dim = ipow(p, (d.m + 1) * big_n);
  a.predicted_projective_dim = ipow(p, (d.m + 1) * (big_n + d.rank()) - d.rank());
  ModuleRep reg = build_regular_module(chi, limit);
  a.regular_dim = reg.dim();
  SimpleCatalog cat;
  ChopOptions opts;
  opts.seed = seed;
  CompositionSeries cs = chop(reg, cat, opts);
  bool split = true;
  try {
    enumerate_lambda(chi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NeedsFieldExtension) throw;
    split = false;
  }
  for (const auto& [t, mult] : cs.multiplicities()) {
    const SimpleType& st = cat.type(t);
    a.simple_count += st.end_dim;
    for (int k = 0; k < st.end_dim; ++k) a.simple_dims.push_back(st.absolute_dim());
    if (split) a.projective_dims.push_back(static_cast<std::uint64_t>(mult));
  }
  a.ok = a.simple_count == a.predicted_count &&
         std::all_of(a.simple_dims.begin(), a.simple_dims.end(), [&](std::size_t x) { return x == a.predicted_simple_dim; }) &&
         std::all_of(a.projective_dims.begin(), a.projective_dims.end(),
                     [&](std::uint64_t x) { return x == a.predicted_projective_dim; });
  return a;
}

}  // namespace currentrep
