#include "currentrep/meataxe.hpp"

#include <algorithm>

#include "currentrep/error.hpp"

namespace currentrep {

FpMatrix evaluate_word(const WordRecipe& w, const GenModule& m) {
  FpMatrix a = m.mats.at(w.first);
  for (const auto& st : w.steps) {
    a = a * m.mats.at(st[0]);
    a += m.mats.at(st[1]).scaled(st[2]);
  }
  return a;
}

namespace {

struct FactorChoice {
  FpPoly f;
  bool simple_root = false;  // multiplicity one in the characteristic polynomial
};

std::optional<FactorChoice> pick_factor(const FpMatrix& w, std::mt19937_64& rng) {
  const std::size_t n = w.rows();
  FpPoly poly;
  bool exact = n <= 400;
  if (exact) {
    poly = charpoly(w);
  } else {
    std::uniform_int_distribution<int> d(0, static_cast<int>(w.p()) - 1);
    FpVec v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
    poly = minpoly_of_vector(w, v);
  }
  const int max_deg = static_cast<int>(std::min<std::size_t>(n, 24));
  struct Cand {
    FpPoly prod;
    int deg, mult;
  };
  std::vector<Cand> cands;
  for (auto& [g, mult] : squarefree_factorization(poly))
    for (auto& [h, d] : distinct_degree_factorization(g, max_deg)) cands.push_back({h, d, mult});
  if (cands.empty()) return std::nullopt;
  std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
    bool a1 = exact && a.mult == 1, b1 = exact && b.mult == 1;
    if (a1 != b1) return a1;
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.mult < b.mult;
  });
  const Cand& c = cands.front();
  FpPoly f = c.prod.degree() == c.deg ? c.prod : equal_degree_factorization(c.prod, c.deg, rng).front();
  return FactorChoice{monic(f), exact && c.mult == 1};
}

WordRecipe random_step(WordRecipe w, std::size_t ngens, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(ngens - 1));
  std::uniform_int_distribution<std::uint32_t> c(1, p - 1);
  w.steps.push_back({g(rng), g(rng), c(rng)});
  return w;
}

KernelCert one_dim_cert(const GenModule& m) {
  KernelCert c;
  c.word.first = 0;
  c.f = FpPoly(m.p, {fp_neg(m.mats.empty() ? 0 : m.mats[0](0, 0), m.p), 1});
  c.v = FpVec{1};
  c.nullity = 1;
  return c;
}

}  // namespace

IrreducibilityResult test_irreducible(const GenModule& m, std::mt19937_64& rng, int max_tries) {
  IrreducibilityResult res;
  const std::size_t n = m.dim;
  const std::uint32_t p = m.p;
  if (n == 0) raise(ErrorKind::InternalError, "irreducibility test on the zero module");
  if (m.mats.empty()) {
    if (n == 1) {
      res.irreducible = true;
      res.cert = one_dim_cert(m);
      res.cert.f = FpPoly(p, {0, 1});
      return res;
    }
    EchelonBasis w(n, p);
    FpVec e(n, 0);
    e[0] = 1;
    w.insert(e);
    res.submodule = w;
    return res;
  }
  if (n == 1) {
    res.irreducible = true;
    res.cert = one_dim_cert(m);
    return res;
  }
  std::vector<FpMatrix> transposed;
  for (const auto& a : m.mats) transposed.push_back(a.transpose());
  std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(m.mats.size() - 1));
  WordRecipe word;
  word.first = static_cast<int>(g(rng));
  FpMatrix a = m.mats[word.first];
  for (int t = 1; t <= max_tries; ++t) {
    res.tries = t;
    word = random_step(word, m.mats.size(), p, rng);
    const auto& st = word.steps.back();
    a = a * m.mats[st[0]];
    a += m.mats[st[1]].scaled(st[2]);
    auto choice = pick_factor(a, rng);
    if (!choice) continue;
    const FpMatrix nmat = evaluate(choice->f, a);
    const FpMatrix ker = nullspace(nmat);
    if (ker.rows() == 0) continue;
    FpMatrix seed(1, n, p);
    std::copy(ker.row(0), ker.row(0) + n, seed.row(0));
    EchelonBasis s = spin_rows(seed, transposed, n);
    if (s.dim() < n) {
      res.submodule = std::move(s);
      return res;
    }
    const FpMatrix kert = nullspace(nmat.transpose());
    FpMatrix useed(1, n, p);
    std::copy(kert.row(0), kert.row(0) + n, useed.row(0));
    EchelonBasis s2 = spin_rows(useed, m.mats, n);
    if (s2.dim() < n) {
      const FpMatrix ann = nullspace(s2.rows());
      EchelonBasis w(n, p);
      for (std::size_t i = 0; i < ann.rows(); ++i) w.insert(ann.row(i));
      res.submodule = std::move(w);
      return res;
    }
    if (ker.rows() == static_cast<std::size_t>(choice->f.degree())) {
      res.irreducible = true;
      res.cert = {word, choice->f, ker.row_vec(0), ker.rows()};
      return res;
    }
  }
  raise(ErrorKind::Inconclusive, "irreducibility test exhausted its tries");
}

namespace {

std::vector<FpPoly> fingerprint(const GenModule& m) {
  std::vector<FpPoly> out;
  if (m.dim <= 128) {
    for (const auto& a : m.mats) out.push_back(charpoly(a));
    return out;
  }
  for (std::size_t i = 0; i < m.mats.size(); ++i) {
    Fp tr = 0;
    for (std::size_t d = 0; d < m.dim; ++d) tr = fp_add(tr, m.mats[i](d, d), m.p);
    out.push_back(FpPoly::constant(m.p, tr));
  }
  return out;
}

}  // namespace

int SimpleCatalog::find(const GenModule& s, std::mt19937_64& rng) const {
  (void)rng;
  auto fp = fingerprint(s);
  for (std::size_t i = 0; i < types_.size(); ++i) {
    const auto& t = types_[i];
    if (t.module.dim != s.dim || t.fingerprint != fp) continue;
    if (!hom_from_cert(t.module, t.cert, s).empty()) return static_cast<int>(i);
  }
  return -1;
}

int SimpleCatalog::classify(const GenModule& s, const KernelCert& cert, std::mt19937_64& rng, const std::string& label) {
  if (gens_.empty()) gens_ = s.gens;
  if (s.gens != gens_) raise(ErrorKind::AlgebraMismatch, "module generators differ from the catalog's");
  int found = find(s, rng);
  if (found >= 0) {
    if (!label.empty() && types_[found].label.rfind("S", 0) == 0) types_[found].label = label;
    return found;
  }
  SimpleType t;
  t.module = s;
  t.cert = cert;
  t.fingerprint = fingerprint(s);
  t.end_dim = static_cast<int>(hom_from_cert(s, cert, s).size());
  t.label = label.empty() ? "S" + std::to_string(types_.size()) + "[" + std::to_string(s.dim) + "]" : label;
  types_.push_back(std::move(t));
  return static_cast<int>(types_.size()) - 1;
}

int SimpleCatalog::add_named(const GenModule& s, const std::string& label, std::mt19937_64& rng) {
  auto r = test_irreducible(s, rng);
  if (!r.irreducible) raise(ErrorKind::InternalError, "named catalog entry " + label + " is reducible");
  return classify(s, r.cert, rng, label);
}

std::map<int, int> CompositionSeries::multiplicities() const {
  std::map<int, int> out;
  for (int f : factors) ++out[f];
  return out;
}

GenModule view_for_catalog(const ModuleRep& m, SimpleCatalog& catalog) {
  if (catalog.gens().empty()) catalog.set_gens(m.alg->lie_generators(m.basis));
  GenModule g;
  g.p = m.p();
  g.dim = m.dim();
  g.gens = catalog.gens();
  for (int k : g.gens) g.mats.push_back(m.action(k));
  return g;
}

namespace {

void chop_rec(const GenModule& m, SimpleCatalog& cat, std::mt19937_64& rng, CompositionSeries& out) {
  if (m.dim == 0) return;
  IrreducibilityResult r = test_irreducible(m, rng);
  out.retries += r.tries > 1 ? r.tries - 1 : 0;
  if (r.irreducible) {
    out.factors.push_back(cat.classify(m, r.cert, rng));
    return;
  }
  GenModule sub = submodule(m, *r.submodule);
  GenModule quo = quotient_module(m, *r.submodule);
  chop_rec(sub, cat, rng, out);
  chop_rec(quo, cat, rng, out);
}

// Subquotient upper/lower (lower ⊂ upper, both invariant, in ambient coordinates).
GenModule subquotient(const GenModule& m, const EchelonBasis& upper, const EchelonBasis& lower) {
  GenModule sub = submodule(m, upper);
  EchelonBasis low(upper.dim(), m.p);
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    auto c = upper.coordinates(lower.rows().row_vec(i));
    if (!c) raise(ErrorKind::InternalError, "filtration is not nested");
    low.insert(*c);
  }
  return quotient_module(sub, low);
}

}  // namespace

CompositionSeries chop(const GenModule& m, SimpleCatalog& catalog, const ChopOptions& opts) {
  CompositionSeries out;
  out.seed = opts.seed;
  if (catalog.gens().empty()) catalog.set_gens(m.gens);
  std::mt19937_64 rng(opts.seed);
  chop_rec(m, catalog, rng, out);
  return out;
}

CompositionSeries chop(const ModuleRep& m, SimpleCatalog& catalog, const ChopOptions& opts) {
  GenModule g = view_for_catalog(m, catalog);
  const auto& alg = *m.alg;
  const int k = m.chi.support_degree();
  std::vector<int> ideal;
  if (opts.ideal_filtration && m.over_full_algebra() && k < alg.m()) ideal = alg.indices_of_degree_at_least(k + 1);
  if (ideal.empty()) return chop(g, catalog, opts);
  CompositionSeries out;
  out.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  const std::size_t n = m.dim();
  const std::uint32_t p = m.p();
  std::vector<FpMatrix> ideal_t;
  for (int x : ideal) ideal_t.push_back(m.action(x).transpose());
  EchelonBasis top(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    FpVec e(n, 0);
    e[i] = 1;
    top.insert(e);
  }
  while (top.dim() > 0) {
    EchelonBasis next(n, p);
    for (const auto& at : ideal_t) {
      FpMatrix img = top.rows() * at;
      for (std::size_t i = 0; i < img.rows() && next.dim() < top.dim(); ++i) next.insert(img.row(i));
    }
    if (next.dim() == top.dim()) {
      chop_rec(submodule(g, top), catalog, rng, out);
      break;
    }
    chop_rec(subquotient(g, top, next), catalog, rng, out);
    top = std::move(next);
  }
  return out;
}

FpMatrix invariant_subspace(const ModuleRep& m, const std::vector<CurrentElement>& elems) {
  const std::size_t n = m.dim();
  FpMatrix stacked(0, n, m.p());
  for (const auto& x : elems) {
    FpMatrix a = m.act(x);
    for (std::size_t i = 0; i < n; ++i) stacked.append_row(a.row(i));
  }
  if (elems.empty()) return FpMatrix::identity(n, m.p());
  return nullspace(stacked);
}

std::map<std::vector<Fp>, int> weight_character(const ModuleRep& m) {
  const auto& alg = *m.alg;
  const std::uint32_t p = m.p();
  const std::size_t n = m.dim();
  std::vector<FpMatrix> tor;
  for (int j = 0; j < alg.rank(); ++j) {
    int k = alg.index(0, alg.local_h(j));
    if (m.position(k) < 0) raise(ErrorKind::NotWeightModule, "torus does not act");
    const FpMatrix& h = m.action(k);
    if (!(power(h, p) == h)) raise(ErrorKind::NotWeightModule, "torus does not act semisimply with F_p eigenvalues");
    tor.push_back(h);
  }
  struct Piece {
    FpMatrix rows;
    std::vector<Fp> weight;
  };
  std::vector<Piece> pieces{{FpMatrix::identity(n, p), {}}};
  for (const auto& h : tor) {
    std::vector<Piece> next;
    for (const auto& pc : pieces) {
      const std::size_t d = pc.rows.rows();
      EchelonBasis eb(n, p);
      for (std::size_t i = 0; i < d; ++i) eb.insert(pc.rows.row(i));
      // restricted matrix in the coordinates of eb (rows already echelon)
      FpMatrix img = eb.rows() * h.transpose();
      FpMatrix r(d, d, p);
      FpVec coeffs(d);
      for (std::size_t i = 0; i < d; ++i) {
        eb.reduce(img.row(i), coeffs.data());
        for (std::size_t j = 0; j < d; ++j) r.set(j, i, coeffs[j]);
      }
      for (Fp c = 0; c < p; ++c) {
        FpMatrix sh = r;
        for (std::size_t i = 0; i < d; ++i) sh.set(i, i, fp_sub(sh(i, i), c, p));
        FpMatrix k = nullspace(sh);
        if (k.rows() == 0) continue;
        Piece np{k * eb.rows(), pc.weight};
        np.weight.push_back(c);
        next.push_back(std::move(np));
      }
    }
    pieces = std::move(next);
  }
  std::map<std::vector<Fp>, int> out;
  for (const auto& pc : pieces) out[pc.weight] += static_cast<int>(pc.rows.rows());
  return out;
}

std::map<std::vector<long long>, int> graded_character(const ModuleRep& m) {
  if (!m.grading) raise(ErrorKind::NotGraded, "module carries no X*(T) grading");
  std::map<std::vector<long long>, int> out;
  for (const auto& g : *m.grading) ++out[g];
  return out;
}

}  // namespace currentrep
