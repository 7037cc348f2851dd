#include <algorithm>

#include "currentrep/error.hpp"
#include "currentrep/meataxe.hpp"

namespace currentrep {

namespace {

// Standard basis of S spun from v: b_0 = v, each later b_c = gen[via[c]] * b_[parent[c]].
struct StandardBasis {
  FpMatrix rows;
  std::vector<int> parent, via;
};

StandardBasis standard_basis(const GenModule& s, const FpVec& v) {
  StandardBasis sb{FpMatrix(0, s.dim, s.p), {}, {}};
  EchelonBasis eb(s.dim, s.p);
  eb.insert(v);
  sb.rows.append_row(v.data());
  sb.parent.push_back(-1);
  sb.via.push_back(-1);
  std::vector<FpMatrix> tr;
  for (const auto& a : s.mats) tr.push_back(a.transpose());
  for (std::size_t idx = 0; idx < sb.rows.rows() && sb.rows.rows() < s.dim; ++idx) {
    for (std::size_t g = 0; g < tr.size() && sb.rows.rows() < s.dim; ++g) {
      FpMatrix b(1, s.dim, s.p);
      std::copy(sb.rows.row(idx), sb.rows.row(idx) + s.dim, b.row(0));
      b = b * tr[g];
      if (eb.insert(b.row(0)) >= 0) {
        sb.rows.append_row(b.row(0));
        sb.parent.push_back(static_cast<int>(idx));
        sb.via.push_back(static_cast<int>(g));
      }
    }
  }
  return sb;
}

}  // namespace

std::vector<FpMatrix> hom_from_cert(const GenModule& s, const KernelCert& cert, const GenModule& m) {
  if (s.gens != m.gens) raise(ErrorKind::AlgebraMismatch, "hom between modules over different generating sets");
  const std::size_t d = s.dim, n = m.dim;
  const std::uint32_t p = s.p;
  if (d == 0 || n == 0) return {};
  StandardBasis sb = standard_basis(s, cert.v);
  if (sb.rows.rows() < d) raise(ErrorKind::InternalError, "certificate vector does not generate the module");
  const FpMatrix sbinv = inverse(sb.rows);
  const FpMatrix ker = nullspace(evaluate(cert.f, evaluate_word(cert.word, m)));
  const std::size_t q = ker.rows();
  if (q == 0) return {};

  std::vector<FpMatrix> mt;
  for (const auto& a : m.mats) mt.push_back(a.transpose());
  // U_k = image of b_k as a function of the kernel coefficients: q x n blocks, stacked.
  FpMatrix u(d * q, n, p);
  for (std::size_t i = 0; i < q; ++i) std::copy(ker.row(i), ker.row(i) + n, u.row(i));
  for (std::size_t c = 1; c < d; ++c) {
    FpMatrix blk = u.submatrix(static_cast<std::size_t>(sb.parent[c]) * q, 0, q, n) * mt[sb.via[c]];
    for (std::size_t i = 0; i < q; ++i) std::copy(blk.row(i), blk.row(i) + n, u.row(c * q + i));
  }

  FpMatrix sol = FpMatrix::identity(q, p);
  for (std::size_t g = 0; g < s.mats.size(); ++g) {
    // Coordinates of gen * b_k in the standard basis: row k of crow.
    const FpMatrix crow = (sb.rows * s.mats[g].transpose()) * sbinv;
    const FpMatrix y = u * mt[g];
    std::vector<bool> tree_edge(d, false);
    for (std::size_t c = 1; c < d; ++c)
      if (sb.via[c] == static_cast<int>(g)) tree_edge[sb.parent[c]] = true;
    for (std::size_t k = 0; k < d; ++k) {
      FpMatrix x = y.submatrix(k * q, 0, q, n);
      for (std::size_t j = 0; j < d; ++j) {
        Fp c = crow(k, j);
        if (!c) continue;
        for (std::size_t i = 0; i < q; ++i) kernel::axpy(x.row(i), u.row(j * q + i), p - c, n, p);
      }
      if (x.is_zero()) continue;
      (void)tree_edge;
      FpMatrix z = sol * x;
      if (z.is_zero()) continue;
      sol = left_nullspace(z) * sol;
      if (sol.rows() == 0) return {};
    }
  }

  std::vector<FpMatrix> out;
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    FpMatrix img(d, n, p);
    for (std::size_t k = 0; k < d; ++k) {
      FpMatrix a(1, q, p);
      std::copy(sol.row(r), sol.row(r) + q, a.row(0));
      FpMatrix row = a * u.submatrix(k * q, 0, q, n);
      std::copy(row.row(0), row.row(0) + n, img.row(k));
    }
    out.push_back((sbinv * img).transpose());
  }
  return out;
}

bool is_intertwiner(const FpMatrix& phi, const GenModule& from, const GenModule& to) {
  if (from.gens != to.gens || phi.rows() != to.dim || phi.cols() != from.dim) return false;
  for (std::size_t g = 0; g < from.mats.size(); ++g)
    if (!(phi * from.mats[g] == to.mats[g] * phi)) return false;
  return true;
}

namespace {

std::optional<FpMatrix> invertible_combination(const std::vector<FpMatrix>& homs, std::mt19937_64& rng,
                                               bool& exhaustive) {
  exhaustive = false;
  if (homs.empty()) {
    exhaustive = true;
    return std::nullopt;
  }
  const std::uint32_t p = homs[0].p();
  for (const auto& h : homs)
    if (rank(h) == h.rows()) return h;
  double space = 1;
  for (std::size_t i = 0; i < homs.size(); ++i) space *= p;
  if (space <= 4096) {
    exhaustive = true;
    std::vector<Fp> c(homs.size(), 0);
    for (std::size_t t = 1; t < static_cast<std::size_t>(space); ++t) {
      std::size_t x = t;
      for (auto& ci : c) { ci = static_cast<Fp>(x % p); x /= p; }
      FpMatrix s(homs[0].rows(), homs[0].cols(), p);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) s += homs[i].scaled(c[i]);
      if (rank(s) == s.rows()) return s;
    }
    return std::nullopt;
  }
  std::uniform_int_distribution<Fp> dist(0, p - 1);
  for (int t = 0; t < 200; ++t) {
    FpMatrix s(homs[0].rows(), homs[0].cols(), p);
    for (const auto& h : homs) s += h.scaled(dist(rng));
    if (rank(s) == s.rows()) return s;
  }
  return std::nullopt;
}

// Dense intertwiner space for small modules: X A_g = B_g X.
std::vector<FpMatrix> dense_homs(const GenModule& a, const GenModule& b) {
  const std::size_t n = a.dim, k = b.dim;
  const std::uint32_t p = a.p;
  FpMatrix sys(0, n * k, p);
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FpVec row(n * k, 0);
        for (std::size_t l = 0; l < n; ++l) row[i * n + l] = fp_add(row[i * n + l], a.mats[g](l, j), p);
        for (std::size_t l = 0; l < k; ++l) row[l * n + j] = fp_sub(row[l * n + j], b.mats[g](i, l), p);
        sys.append_row(row.data());
      }
  }
  FpMatrix ns = nullspace(sys);
  std::vector<FpMatrix> out;
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    FpMatrix x(k, n, p);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) x.set(i, j, ns(r, i * n + j));
    out.push_back(std::move(x));
  }
  return out;
}

bool same_fingerprint(const GenModule& a, const GenModule& b) {
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    Fp ta = 0, tb = 0;
    for (std::size_t i = 0; i < a.dim; ++i) {
      ta = fp_add(ta, a.mats[g](i, i), a.p);
      tb = fp_add(tb, b.mats[g](i, i), a.p);
    }
    if (ta != tb) return false;
  }
  if (a.dim <= 128)
    for (std::size_t g = 0; g < a.mats.size(); ++g)
      if (charpoly(a.mats[g]) != charpoly(b.mats[g])) return false;
  return true;
}

}  // namespace

IsoResult are_isomorphic(const GenModule& a, const GenModule& b, std::uint64_t seed, bool prefilter) {
  IsoResult res;
  if (a.gens != b.gens || a.p != b.p) raise(ErrorKind::AlgebraMismatch, "isomorphism test across algebras");
  if (a.dim != b.dim) {
    res.method = "dimension";
    return res;
  }
  if (a.mats == b.mats) {
    res.isomorphic = true;
    res.witness = FpMatrix::identity(a.dim, a.p);
    res.method = "identical";
    return res;
  }
  if (prefilter && !same_fingerprint(a, b)) {
    res.method = "prefilter";
    return res;
  }
  std::mt19937_64 rng(seed);
  auto finish = [&](const std::vector<FpMatrix>& homs, const std::string& method) -> std::optional<IsoResult> {
    bool exhaustive = false;
    auto w = invertible_combination(homs, rng, exhaustive);
    IsoResult r;
    r.method = method;
    if (w) {
      r.isomorphic = true;
      r.witness = *w;
      return r;
    }
    if (exhaustive) return r;
    return std::nullopt;
  };
  try {
    auto irr = test_irreducible(a, rng);
    if (irr.irreducible) {
      if (auto r = finish(hom_from_cert(a, irr.cert, b), "simple")) return *r;
    } else {
      // Look for a cyclic vector of a inside a small kernel: the standard-basis method then applies.
      std::vector<FpMatrix> tr;
      for (const auto& x : a.mats) tr.push_back(x.transpose());
      std::uniform_int_distribution<std::uint32_t> gi(0, static_cast<std::uint32_t>(a.mats.size() - 1));
      std::uniform_int_distribution<std::uint32_t> ci(1, a.p - 1);
      std::uniform_int_distribution<Fp> any(0, a.p - 1);
      for (int attempt = 0; attempt < 64; ++attempt) {
        WordRecipe word;
        word.first = static_cast<int>(gi(rng));
        for (int s = 0; s < 2; ++s) word.steps.push_back({gi(rng), gi(rng), ci(rng)});
        FpMatrix w = evaluate_word(word, a);
        auto fac = factor(a.dim <= 400 ? charpoly(w) : minpoly(w), rng);
        std::sort(fac.begin(), fac.end(), [](const auto& x, const auto& y) {
          return x.first.degree() * x.second < y.first.degree() * y.second;
        });
        for (const auto& [f, mult] : fac) {
          FpMatrix ker = nullspace(evaluate(f, w));
          FpMatrix v(1, a.dim, a.p);
          for (std::size_t r = 0; r < ker.rows(); ++r) kernel::axpy(v.row(0), ker.row(r), any(rng), a.dim, a.p);
          if (v.is_zero()) continue;
          if (spin_rows(v, tr, a.dim).dim() < a.dim) continue;
          KernelCert cert{word, f, v.row_vec(0), ker.rows()};
          if (auto r = finish(hom_from_cert(a, cert, b), "cyclic")) return *r;
          break;
        }
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconclusive) throw;
  }
  if (a.dim <= 32) {
    if (auto r = finish(dense_homs(a, b), "dense")) return *r;
  }
  raise(ErrorKind::Inconclusive, "isomorphism could not be certified either way");
}

IsoResult are_isomorphic(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed, bool prefilter) {
  if (!(a.alg->desc() == b.alg->desc()) || a.basis != b.basis)
    raise(ErrorKind::AlgebraMismatch, "modules over different algebras");
  return are_isomorphic(generator_view(a), generator_view(b), seed, prefilter);
}

EchelonBasis socle(const GenModule& m, std::uint64_t seed) {
  SimpleCatalog cat(m.gens);
  ChopOptions opts;
  opts.seed = seed;
  CompositionSeries cs = chop(m, cat, opts);
  EchelonBasis soc(m.dim, m.p);
  for (const auto& [t, mult] : cs.multiplicities()) {
    (void)mult;
    const SimpleType& st = cat.type(t);
    for (const auto& phi : hom_from_cert(st.module, st.cert, m)) {
      FpMatrix cols = phi.transpose();
      for (std::size_t i = 0; i < cols.rows(); ++i) soc.insert(cols.row(i));
    }
  }
  return soc;
}

HeadResult head(const ModuleRep& m, std::uint64_t seed) {
  GenModule g = generator_view(m);
  GenModule d = dual_module(g);
  EchelonBasis soc = socle(d, seed);
  GenModule h = dual_module(submodule(d, soc));
  ModuleRep shape = m;
  shape.chi = m.chi;
  HeadResult res{complete_from_generators(h, shape), soc.rows()};
  res.head.name = "head(" + m.name + ")";
  return res;
}

}  // namespace currentrep
