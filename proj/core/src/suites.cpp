#include "currentrep/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "currentrep/error.hpp"
#include "currentrep/invariants.hpp"
#include "currentrep/kw.hpp"

namespace currentrep {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Params base_params(const AlgebraDescriptor& d) {
  return {{"algebra", d.name()}, {"kind", d.kind_name()}, {"n", std::to_string(d.n)}, {"p", std::to_string(d.p)},
          {"m", std::to_string(d.m)}};
}

Params with(Params p, const std::string& k, const std::string& v) {
  p.emplace_back(k, v);
  return p;
}

// Runs body, timing it; TooLarge and FormulaDomainError turn the line into a skip.
void add_line(Report& r, std::string claim, std::string ref, Params params, std::uint64_t seed,
              const std::function<void(ReportLine&)>& body) {
  ReportLine l;
  l.claim = std::move(claim);
  l.paper_ref = std::move(ref);
  l.params = std::move(params);
  l.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(l);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::FormulaDomainError &&
        e.kind() != ErrorKind::NeedsFieldExtension)
      throw;
    l.skipped = true;
    l.match = false;
    l.note = e.what();
  }
  l.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.lines.push_back(std::move(l));
}

void set_values(ReportLine& l, const std::string& formula, const std::string& oracle) {
  l.formula_value = formula;
  l.oracle_value = oracle;
  l.match = formula == oracle;
}

template <class T>
std::string table_string(const std::vector<std::vector<T>>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ";" : "") + join(t[i]);
  return "[" + s + "]";
}

std::string weight_name(const std::vector<Fp>& w) { return bracketed(w); }

Table make_table(const std::string& name, const std::vector<std::vector<Fp>>& weights,
                 const std::vector<std::vector<std::uint64_t>>& data) {
  Table t;
  t.name = name;
  for (const auto& w : weights) {
    t.rows.push_back(weight_name(w));
    t.cols.push_back(weight_name(w));
  }
  for (const auto& row : data) {
    std::vector<std::string> cells;
    for (auto v : row) cells.push_back(std::to_string(v));
    t.cells.push_back(std::move(cells));
  }
  return t;
}

CurrentElement random_nilpotent_degree0(const AlgebraPtr& alg, std::mt19937_64& rng) {
  const int n = alg->n();
  const std::uint32_t p = alg->p();
  std::uniform_int_distribution<Fp> d(0, p - 1);
  FpMatrix u(n, n, p), g(n, n, p);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) u.set(r, c, d(rng));
  do {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g.set(r, c, d(rng));
  } while (determinant(g) == 0);
  return CurrentElement::homogeneous(alg, g * u * inverse(g), 0);
}

CurrentElement with_degree0(const CurrentElement& x, const CurrentElement& x0) {
  auto coeffs = x.coeffs();
  coeffs[0] = x0.coeff(0);
  return CurrentElement::from_coeffs(x.algebra(), std::move(coeffs));
}

}  // namespace

FpMatrix jordan_matrix(const std::vector<int>& partition, std::uint32_t p) {
  int n = 0;
  for (int b : partition) n += b;
  FpMatrix e(n, n, p);
  int start = 0;
  for (int b : partition) {
    for (int i = 0; i + 1 < b; ++i) e.set(start + i, start + i + 1, 1);
    start += b;
  }
  return e;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Report structure_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "structure";
  const auto& d = alg->desc();
  const Params bp = base_params(d);
  const std::uint32_t p = d.p;

  add_line(r, "structure constants equal matrix commutators on all basis pairs", "[b_k, b_l] = b_k b_l - b_l b_k in g ⊗ R_m",
           bp, seed, [&](ReportLine& l) {
             int bad = 0;
             for (int k = 0; k < alg->dim(); ++k) {
               const auto bk = CurrentElement::basis_element(alg, k);
               for (int j = 0; j < alg->dim(); ++j) {
                 FpVec dense(alg->dim(), 0);
                 for (auto [i, c] : alg->bracket(k, j)) dense[i] = static_cast<std::uint8_t>(c);
                 if (bracket(bk, CurrentElement::basis_element(alg, j)).coords() != dense) ++bad;
               }
             }
             set_values(l, "0", std::to_string(bad));
           });

  add_line(r, "alternating bracket and Jacobi identity", "[x,x] = 0, [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0",
           with(bp, "samples", std::to_string(samples)), seed, [&](ReportLine& l) {
             std::mt19937_64 rng(seed);
             int bad = 0;
             for (int s = 0; s < samples; ++s) {
               auto x = CurrentElement::random(alg, rng), y = CurrentElement::random(alg, rng),
                    z = CurrentElement::random(alg, rng);
               auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
               if (!bracket(x, x).is_zero() || !jac.is_zero()) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
           });

  add_line(r, "restricted structure: p-map axioms", "ad(x^[p]) = ad(x)^p, (cx)^[p] = c^p x^[p], b^[p] table = matrix p-th power",
           with(bp, "samples", std::to_string(samples)), seed, [&](ReportLine& l) {
             std::mt19937_64 rng(seed + 1);
             std::uniform_int_distribution<Fp> cd(1, p - 1);
             int bad = 0;
             for (int s = 0; s < samples; ++s) {
               auto x = CurrentElement::random(alg, rng);
               const Fp c = cd(rng);
               if (!(ad_matrix(p_map(x)) == power(ad_matrix(x), p))) ++bad;
               if (!(p_map(x.scaled(c)) == p_map(x).scaled(fp_pow(c, p, p)))) ++bad;
             }
             for (int k = 0; k < alg->dim(); ++k) {
               FpVec dense(alg->dim(), 0);
               for (auto [i, c] : alg->p_power(k)) dense[i] = static_cast<std::uint8_t>(c);
               if (p_map(CurrentElement::basis_element(alg, k)).coords() != dense) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
           });

  add_line(r, "nilpotent classification", "x nilpotent <=> x_0 in N(g)", with(bp, "samples", std::to_string(samples)), seed,
           [&](ReportLine& l) {
             std::mt19937_64 rng(seed + 2);
             int bad = 0, nilp = 0;
             for (int s = 0; s < samples; ++s) {
               auto x = CurrentElement::random(alg, rng);
               if (s % 2) x = with_degree0(x, random_nilpotent_degree0(alg, rng));
               const bool x0_nil = power(x.coeff(0), d.n).is_zero();
               nilp += x0_nil;
               if ((classify_element(x) == ElementClass::Nilpotent) != x0_nil) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
             l.note = std::to_string(nilp) + " samples with nilpotent x_0";
           });

  add_line(r, "Jordan decomposition", "x = x_s + x_n, [x_s, x_n] = 0, x_s semisimple, x_n nilpotent",
           with(bp, "samples", std::to_string(samples)), seed, [&](ReportLine& l) {
             std::mt19937_64 rng(seed + 3);
             int bad = 0;
             for (int s = 0; s < samples; ++s) {
               auto x = CurrentElement::random(alg, rng);
               if (s % 3 == 1) x = with_degree0(x, random_nilpotent_degree0(alg, rng));
               auto jd = jordan_decompose(x);
               const bool ok = jd.semisimple + jd.nilpotent == x && bracket(jd.semisimple, jd.nilpotent).is_zero() &&
                               (jd.nilpotent.is_zero() || classify_element(jd.nilpotent) == ElementClass::Nilpotent) &&
                               (jd.semisimple.is_zero() || classify_element(jd.semisimple) == ElementClass::Semisimple);
               if (!ok) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
           });

  add_line(r, "trace form on g_m is non-degenerate", "rank kappa_m = dim g_m", bp, seed, [&](ReportLine& l) {
    set_values(l, std::to_string(alg->dim()), std::to_string(rank(gram_matrix(*alg))));
  });
  return r;
}

Report index_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "index";
  const auto& d = alg->desc();
  const Params bp = with(base_params(d), "samples", std::to_string(samples));
  add_line(r, "minimal sampled coadjoint stabilizer", "ind(g_m) = (m+1) ind(g) = (m+1) rank g", bp, seed,
           [&](ReportLine& l) {
             auto est = index_estimate(alg, samples, seed);
             set_values(l, std::to_string((d.m + 1) * d.rank()), std::to_string(est.min_stabilizer_dim));
             l.note = "attained by " + std::to_string(est.attained) + " samples";
           });
  add_line(r, "regular degree-0 part gives a regular element", "x_0 regular in g => x regular in g_m", bp, seed,
           [&](ReportLine& l) {
             AlgebraPtr alg0 = d.m == 0 ? alg : CurrentAlgebra::make(d.with_m(0));
             std::mt19937_64 rng(seed + 1);
             int checked = 0, bad = 0;
             for (int s = 0; s < samples; ++s) {
               auto x = CurrentElement::random(alg, rng);
               if (!is_regular(CurrentElement::homogeneous(alg0, x.coeff(0), 0))) continue;
               ++checked;
               if (!is_regular(x)) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
             l.note = std::to_string(checked) + " samples with regular x_0";
           });
  return r;
}

Report verma_suite(const AlgebraPtr& alg, std::uint64_t seed) {
  Report r;
  r.suite = "verma";
  const auto& d = alg->desc();
  const Params bp = base_params(d);
  LConstants lc = l_constants(d, seed);
  add_line(r, "l-constants", "l_mu = sum_nu [Z^g(nu) : L(mu)]", bp, seed, [&](ReportLine& l) {
    l.formula_value = "-";
    l.oracle_value = bracketed(lc.l);
    l.match = true;
    l.counted = false;
  });
  add_line(r, "l-constant mass", "sum_mu l_mu dim L(mu) = p^r p^N", bp, seed, [&](ReportLine& l) {
    set_values(l, std::to_string(ipow(d.p, d.rank() + d.num_positive_roots())), std::to_string(lc.mass()));
  });
  RestrictedSimples rs = restricted_simples(alg, seed);
  std::vector<std::vector<std::uint64_t>> table;
  const PChar zero = PChar::zero(alg);
  for (std::size_t li = 0; li < rs.weights.size(); ++li) {
    const auto& lam = rs.weights[li];
    const auto lp = with(bp, "lambda", weight_name(lam));
    std::vector<std::uint64_t> oracle;
    add_line(r, "composition multiplicities of Z(lambda)", "[Z(lambda) : L(mu)] = l_mu p^{(m/2)(dim g - rank g) - rank g} if lambda|z = mu|z, else 0",
             lp, seed, [&](ReportLine& l) {
               oracle = composition_vector(build_baby_verma(zero, restricted_weight(*alg, lam)), rs, seed);
               l.oracle_value = bracketed(oracle);
               std::vector<std::uint64_t> f;
               for (std::size_t mu = 0; mu < rs.weights.size(); ++mu) f.push_back(verma_mult_formula(*alg, lc, li, mu, false));
               l.formula_value = bracketed(f);
               l.match = l.formula_value == l.oracle_value;
             });
    if (oracle.empty()) continue;
    table.push_back(oracle);
    if (d.dim_center() > 0) {
      add_line(r, "composition multiplicities of Z(lambda), z-corrected constant",
               "[Z(lambda) : L(mu)] = l_mu p^{(m/2)(dim g - rank g) - rank g + dim z} if lambda|z = mu|z", lp, seed,
               [&](ReportLine& l) {
                 std::vector<std::uint64_t> f;
                 for (std::size_t mu = 0; mu < rs.weights.size(); ++mu) f.push_back(verma_mult_formula(*alg, lc, li, mu, true));
                 set_values(l, bracketed(f), bracketed(oracle));
                 l.counted = false;
               });
    }
    add_line(r, "dimension audit of Z(lambda)", "sum_mu [Z(lambda) : L(mu)] dim L(mu) = p^{(m+1)N}", lp, seed,
             [&](ReportLine& l) {
               std::uint64_t s = 0;
               for (std::size_t mu = 0; mu < oracle.size(); ++mu) s += oracle[mu] * rs.dims[mu];
               set_values(l, std::to_string(ipow(d.p, (d.m + 1) * d.num_positive_roots())), std::to_string(s));
             });
  }
  if (!table.empty()) r.tables.push_back(make_table("[Z(lambda):L(mu)] " + d.name(), rs.weights, table));
  return r;
}

Report cartan_suite(const AlgebraPtr& alg, std::uint64_t seed) {
  Report r;
  r.suite = "cartan";
  const auto& d = alg->desc();
  const Params bp = base_params(d);
  LConstants lc = l_constants(d, seed);
  RestrictedSimples rs = restricted_simples(alg, seed);
  const std::size_t k = rs.weights.size();
  TableRequest req;
  req.dual_verma = req.zproj = true;
  MultiplicityTables t = multiplicity_tables(alg, rs, req, seed);

  std::vector<std::vector<std::uint64_t>> formula(k, std::vector<std::uint64_t>(k, 0));
  bool formula_ok = true;
  add_line(r, "Cartan invariants from the closed form", "[Q(lambda) : L(mu)] = l_lambda l_mu p^{m dim g - rank g} if lambda|z = mu|z",
           bp, seed, [&](ReportLine& l) {
             formula_ok = false;
             for (std::size_t a = 0; a < k; ++a)
               for (std::size_t b = 0; b < k; ++b) formula[a][b] = cartan_formula(*alg, lc, a, b, false);
             formula_ok = true;
             l.formula_value = table_string(formula);
             l.oracle_value = "-";
             l.match = true;
             l.counted = false;
           });

  add_line(r, "regular-module audit", "[U_0(g_m) : L(mu)] = sum_lambda dim L(lambda) [Q(lambda) : L(mu)]", bp, seed,
           [&](ReportLine& l) {
             if (!formula_ok) raise(ErrorKind::FormulaDomainError, "closed form undefined");
             std::vector<std::uint64_t> f(k, 0);
             for (std::size_t mu = 0; mu < k; ++mu)
               for (std::size_t a = 0; a < k; ++a) f[mu] += rs.dims[a] * formula[a][mu];
             auto reg = composition_vector(build_regular_module(PChar::zero(alg)), rs, seed);
             set_values(l, bracketed(f), bracketed(reg));
           });

  add_line(r, "Z_proj filtration by baby Vermas", "(Z_proj(lambda) : Z(mu)) = delta_{lambda mu} p^{m rank g}", bp, seed,
           [&](ReportLine& l) {
             std::vector<std::vector<std::uint64_t>> f(k, std::vector<std::uint64_t>(k, 0));
             for (std::size_t a = 0; a < k; ++a) f[a][a] = ipow(d.p, d.m * d.rank());
             set_values(l, table_string(f), table_string(t.zproj_flag));
           });

  add_line(r, "composition-sum law on Z_proj", "[N : L] = sum_mu (N : Z(mu)) [Z(mu) : L]", bp, seed, [&](ReportLine& l) {
    std::vector<std::vector<std::uint64_t>> f(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t mu = 0; mu < k; ++mu)
        for (std::size_t b = 0; b < k; ++b) f[a][b] += t.zproj_flag[a][mu] * t.verma[mu][b];
    set_values(l, table_string(f), table_string(t.zproj));
  });

  add_line(r, "dual baby Vermas have the factors of baby Vermas", "[DZ(mu) : L(lambda)] = [Z(mu) : L(lambda)]", bp, seed,
           [&](ReportLine& l) { set_values(l, table_string(t.verma), table_string(t.dual_verma)); });

  add_line(r, "reciprocity chain against the closed form",
           "[Q(lambda) : L(mu)] = sum_nu [DZ(nu) : L(lambda)] [Z_proj(nu) : L(mu)]", bp, seed, [&](ReportLine& l) {
             if (!formula_ok) raise(ErrorKind::FormulaDomainError, "closed form undefined");
             set_values(l, table_string(formula), table_string(cartan_chain(t)));
           });
  r.tables.push_back(make_table("[Q(lambda):L(mu)] chain " + d.name(), rs.weights, cartan_chain(t)));
  return r;
}

namespace {

struct HeadCache {
  std::map<std::size_t, ModuleRep> heads;
  std::map<std::size_t, bool> simple;
};

ModuleRep head_of(const PChar& chi, const LambdaWeight& lam, std::uint64_t seed, bool* was_simple) {
  ModuleRep z = build_baby_verma(chi, lam);
  std::mt19937_64 rng(seed);
  auto res = test_irreducible(generator_view(z), rng);
  if (was_simple) *was_simple = res.irreducible;
  if (res.irreducible) return z;
  return head(z, seed).head;
}

bool witness_checks(const ModuleRep& a, const ModuleRep& b, const FpMatrix& w) {
  if (rank(w) != w.rows()) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (!(w * a.actions[i] == b.actions[i] * w)) return false;
  return true;
}

}  // namespace

Report classify_suite(const AlgebraPtr& alg, std::uint64_t seed, const std::vector<std::vector<int>>& partitions) {
  Report r;
  r.suite = "classify";
  const auto& d = alg->desc();
  std::vector<std::vector<int>> parts = partitions;
  if (parts.empty())
    for (auto& pt : partitions_of(d.n))
      if (pt.front() > 1) parts.push_back(pt);
  for (const auto& part : parts) {
    const Params pp = with(base_params(d), "partition", bracketed(part));
    const PChar chi(CurrentElement::homogeneous(alg, jordan_matrix(part, d.p), d.m == 0 ? 0 : 0));
    HomogeneousClassification hc = classify_simples_homogeneous(chi);
    std::map<std::size_t, ModuleRep> heads;
    std::map<std::size_t, bool> simple;
    auto get_head = [&](std::size_t i) -> const ModuleRep& {
      auto it = heads.find(i);
      if (it == heads.end()) {
        bool s = false;
        it = heads.emplace(i, head_of(hc.chi, hc.weights[i], seed + i, &s)).first;
        simple[i] = s;
      }
      return it->second;
    };
    add_line(r, "isomorphism classes of simple heads", "L_chi(lambda) = L_chi(mu) iff lambda|z(g_I) = mu|z(g_I); #classes = p^{dim z(g_I)}",
             pp, seed, [&](ReportLine& l) {
               set_values(l, std::to_string(hc.predicted_classes), std::to_string(hc.num_classes));
               l.note = std::to_string(hc.weights.size()) + " weights";
             });
    const bool regular = part.size() == 1;
    if (regular) {
      add_line(r, "baby Vermas are simple for regular nilpotent chi", "Z_chi(lambda) simple for all lambda", pp, seed,
               [&](ReportLine& l) {
                 int simples = 0;
                 for (std::size_t i = 0; i < hc.weights.size(); ++i) {
                   get_head(i);
                   simples += simple[i];
                 }
                 set_values(l, std::to_string(hc.weights.size()), std::to_string(simples));
               });
    }
    std::vector<std::vector<std::size_t>> members(hc.num_classes);
    for (std::size_t i = 0; i < hc.weights.size(); ++i) members[hc.class_of[i]].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> within, across;
    for (int c = 0; c < hc.num_classes; ++c) {
      const auto& mem = members[c];
      if (hc.num_classes == 1 && mem.size() <= 8) {
        for (std::size_t a = 0; a < mem.size(); ++a)
          for (std::size_t b = a + 1; b < mem.size(); ++b) within.emplace_back(mem[a], mem[b]);
      } else if (mem.size() >= 2) {
        within.emplace_back(mem[0], mem[1]);
      }
      if (hc.num_classes > 1) across.emplace_back(mem[0], members[(c + 1) % hc.num_classes][0]);
    }
    add_line(r, "within-class heads are isomorphic (checked witnesses)", "lambda|z(g_I) = mu|z(g_I) => L_chi(lambda) = L_chi(mu)",
             with(pp, "pairs", std::to_string(within.size())), seed, [&](ReportLine& l) {
               int ok = 0;
               for (auto [a, b] : within) {
                 const ModuleRep& ha = get_head(a);
                 const ModuleRep& hb = get_head(b);
                 auto res = are_isomorphic(ha, hb, seed, false);
                 if (res.isomorphic && res.witness && witness_checks(ha, hb, *res.witness)) ++ok;
               }
               set_values(l, std::to_string(within.size()), std::to_string(ok));
             });
    if (!across.empty())
      add_line(r, "cross-class heads are not isomorphic", "lambda|z(g_I) != mu|z(g_I) => L_chi(lambda) != L_chi(mu)",
               with(pp, "pairs", std::to_string(across.size())), seed, [&](ReportLine& l) {
                 int ok = 0;
                 for (auto [a, b] : across) {
                   auto res = are_isomorphic(get_head(a), get_head(b), seed, false);
                   if (!res.isomorphic) ++ok;
                 }
                 set_values(l, std::to_string(across.size()), std::to_string(ok));
               });
  }
  return r;
}

Report semisimple_suite(const AlgebraPtr& alg, std::uint64_t seed) {
  Report r;
  r.suite = "semisimple";
  const auto& d = alg->desc();
  const Params bp = base_params(d);
  auto h = regular_toral_element(*alg);
  if (!h) {
    add_line(r, "regular semisimple character", "chi = kappa(h), h in h^reg", bp, seed, [&](ReportLine& l) {
      l.skipped = true;
      l.note = "no regular toral element over F_p for p < n";
    });
    return r;
  }
  const PChar chi(CurrentElement::homogeneous(alg, *h, 0));
  SemisimpleAudit a;
  bool have = false;
  add_line(r, "number of simple modules", "#simple U_chi(g_m)-modules = p^{rank g}", bp, seed, [&](ReportLine& l) {
    a = semisimple_character_audit(chi, seed);
    have = true;
    set_values(l, std::to_string(a.predicted_count), std::to_string(a.simple_count));
  });
  if (have) {
    add_line(r, "dimensions of simple modules", "dim L = p^{(m+1)N}", bp, seed, [&](ReportLine& l) {
      std::vector<std::uint64_t> f(a.simple_dims.size(), a.predicted_simple_dim);
      std::vector<std::uint64_t> o(a.simple_dims.begin(), a.simple_dims.end());
      set_values(l, bracketed(f), bracketed(o));
    });
    add_line(r, "projective covers", "dim Q = p^{((m+1)/2)(dim g + rank g) - rank g}", bp, seed, [&](ReportLine& l) {
      if (a.projective_dims.empty()) raise(ErrorKind::NeedsFieldExtension, "Lambda_chi not over F_p");
      std::vector<std::uint64_t> f(a.projective_dims.size(), a.predicted_projective_dim);
      set_values(l, bracketed(f), bracketed(a.projective_dims));
      l.note = "[U_chi : L] equals dim Q(L) when each block holds one simple";
    });
    add_line(r, "matrix-algebra dimension audit", "p^{2(m+1)N} p^{(m+1)r} = p^{(m+1) dim g} = dim U_chi(g_m)", bp, seed,
             [&](ReportLine& l) {
               const std::uint64_t f = ipow(d.p, 2 * (d.m + 1) * d.num_positive_roots()) * ipow(d.p, (d.m + 1) * d.rank());
               set_values(l, std::to_string(f), std::to_string(a.regular_dim));
             });
  }
  add_line(r, "torus projectives", "Q^{h_m}(lambda) has the single factor k_lambda with multiplicity p^{m dim h}", bp, seed,
           [&](ReportLine& l) {
             std::vector<std::string> f, o;
             for (const auto& l0 : restricted_weights(*alg)) {
               ModuleRep q = build_torus_projective(alg, l0);
               SimpleCatalog cat;
               CompositionSeries cs = chop(q, cat);
               auto mult = cs.multiplicities();
               f.push_back("1x" + std::to_string(ipow(d.p, d.m * d.rank())));
               std::string s = std::to_string(mult.size()) + "x";
               s += mult.size() == 1 && cat.type(0).module.dim == 1 ? std::to_string(mult.begin()->second) : "?";
               o.push_back(s);
             }
             set_values(l, join(f), join(o));
           });
  return r;
}

Report kw_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples, std::size_t cover_limit) {
  Report r;
  r.suite = "kw";
  const auto& d = alg->desc();
  const bool kw2_claimed = d.kind == AlgebraKind::SL && d.n == 2 && d.p > 2;
  const Params bp = with(base_params(d), "samples", std::to_string(samples));
  KwScan scan;
  bool have = false;
  add_line(r, "maximal simple dimension", "max dim L = p^{(m+1)(dim g - rank g)/2}", bp, seed, [&](ReportLine& l) {
    scan = kw_scan(alg, samples, seed, cover_limit);
    have = true;
    l.formula_value = std::to_string(scan.kw1_bound);
    l.oracle_value = std::to_string(scan.max_dim);
    l.match = scan.kw1_ok();
    l.note = std::string("sampling ") + scan.sampling + (scan.bound_attained ? ", attained at a regular sample" : ", not attained at a regular sample");
  });
  if (!have) return r;
  add_line(r, "divisibility of simple dimensions", "p^{(dim g_m - dim g_m^chi)/2} | dim L", bp, seed, [&](ReportLine& l) {
    set_values(l, "0", std::to_string(scan.violations));
    l.counted = kw2_claimed;
    l.note = std::to_string(scan.samples.size()) + " characters, sampling " + scan.sampling;
  });
  if (!scan.samples.empty() && regular_toral_element(*alg) && d.m > 0) {
    const KwSample& s0 = scan.samples.front();
    add_line(r, "regular toral character", "p^{rank g} simples of dim p^{(m+1)(dim g - rank g)/2}", bp, seed,
             [&](ReportLine& l) {
               std::vector<std::uint64_t> f(ipow(d.p, d.rank()), scan.kw1_bound);
               std::vector<std::uint64_t> o(s0.simple_dims.begin(), s0.simple_dims.end());
               set_values(l, bracketed(f), bracketed(o));
             });
  }
  if (ipow(d.p, d.dim()) <= 729) {
    add_line(r, "regular-module enumeration agrees with the sampled enumeration", "every simple is a quotient of U_chi(g_m)",
             bp, seed, [&](ReportLine& l) {
               const std::size_t checks = std::min<std::size_t>(3, scan.samples.size());
               std::size_t agree = 0;
               for (std::size_t i = 0; i < checks; ++i)
                 if (simples_of(scan.samples[i].chi, seed + i, cover_limit, EnumerationMode::Regular).dims ==
                     scan.samples[i].simple_dims)
                   ++agree;
               set_values(l, std::to_string(checks), std::to_string(agree));
             });
  }
  return r;
}

Report partition_suite(const RootLattice& lat, std::uint64_t seed) {
  Report r;
  r.suite = "partition";
  const Params bp = {{"algebra", lat.name()}, {"kind", lat.kind == AlgebraKind::GL ? "gl" : "sl"}, {"n", std::to_string(lat.n)},
                     {"p", std::to_string(lat.p)}, {"m", std::to_string(lat.m)}};
  const PartitionTable table = kostant_table(lat);
  add_line(r, "partition function mass", "sum_gamma p_m(gamma) = p^{mN}", bp, seed, [&](ReportLine& l) {
    set_values(l, std::to_string(ipow(lat.p, lat.m * lat.num_positive_roots())), std::to_string(table.mass()));
  });
  add_line(r, "central vanishing", "p_m(gamma) = 0 if (d gamma)|z != 0", bp, seed, [&](ReportLine& l) {
    int bad = 0;
    for (const auto& [w, v] : table.values)
      if (v && !lat.central_vanishing(w)) ++bad;
    set_values(l, "0", std::to_string(bad));
  });
  add_line(r, "p_m(0) is positive", "p_m(0) >= 1", bp, seed, [&](ReportLine& l) {
    set_values(l, "1", table.at(Weight(lat.n, 0)) >= 1 ? "1" : "0");
  });
  const long long radius = 3 * static_cast<long long>(lat.p);
  const auto box = lattice_box(lat, radius);
  std::map<Weight, ShiftSum> sums;
  for (const auto& g : box) sums.emplace(g, pm_shift_sum(table, g));
  const int e = lat.m * lat.num_positive_roots() - lat.rank();
  add_line(r, "shift-sum identity over the box", "sum_delta p_m(gamma - p delta) = p^{(m/2)(dim g - rank g) - rank g}",
           with(bp, "radius", std::to_string(radius)), seed, [&](ReportLine& l) {
             std::set<std::uint64_t> values;
             for (const auto& [g, s] : sums) values.insert(s.value);
             l.formula_value = e >= 0 ? "{" + std::to_string(ipow(lat.p, e)) + "}" : "p^" + std::to_string(e);
             l.oracle_value = "{" + join(std::vector<std::uint64_t>(values.begin(), values.end())) + "}";
             l.match = l.formula_value == l.oracle_value;
             l.counted = lat.kind == AlgebraKind::SL;
             l.note = std::to_string(sums.size()) + " weights";
           });
  if (lat.dim_center() > 0) {
    add_line(r, "shift-sum identity with the z-corrected constant on central-vanishing weights",
             "sum_delta p_m(gamma - p delta) = p^{mN - rank g + dim z} if (d gamma)|z = 0, else 0",
             with(bp, "radius", std::to_string(radius)), seed, [&](ReportLine& l) {
               int bad = 0;
               for (const auto& [g, s] : sums) {
                 const std::uint64_t expect = lat.central_vanishing(g) ? ipow(lat.p, e + lat.dim_center()) : 0;
                 if (s.value != expect) ++bad;
               }
               set_values(l, "0", std::to_string(bad));
               l.counted = false;
               l.note = "reports which constant matches";
             });
  }
  add_line(r, "shift sum is constant on root-lattice cosets", "S(gamma) = S(gamma + beta), beta in Phi+",
           with(bp, "radius", std::to_string(radius)), seed, [&](ReportLine& l) {
             int bad = 0;
             for (const auto& [g, s] : sums)
               for (const auto& b : lat.roots) {
                 Weight gb(lat.n);
                 for (int i = 0; i < lat.n; ++i) gb[i] = g[i] + b[i];
                 if (pm_shift_sum(table, gb).value != s.value) ++bad;
               }
             set_values(l, "0", std::to_string(bad));
           });
  // The graded convolution needs the algebra itself.
  const bool valid = lat.kind == AlgebraKind::GL || lat.n % static_cast<int>(lat.p) != 0;
  if (valid) {
    auto alg = CurrentAlgebra::make(make_descriptor(lat.kind, lat.n, lat.p, lat.m));
    add_line(r, "graded character convolution", "Char Z^(gamma) = sum_beta p_m(gamma - beta) Char Z^g(beta)", bp, seed,
             [&](ReportLine& l) {
               const auto ws = restricted_weights(*alg);
               int ok = 0;
               for (const auto& w : ws) {
                 check_dimension(ipow(lat.p, (lat.m + 1) * lat.num_positive_roots()), dimension_limit(), "baby Verma");
                 ok += graded_convolution(alg, w).match;
               }
               set_values(l, std::to_string(ws.size()), std::to_string(ok));
             });
  }
  return r;
}

Report blocks_suite(const AlgebraPtr& alg, std::uint64_t seed) {
  Report r;
  r.suite = "blocks";
  const auto& d = alg->desc();
  const Params bp = base_params(d);
  RestrictedSimples rs = restricted_simples(alg, seed);
  BlockResult br = blocks(alg, rs, seed);
  add_line(r, "number of blocks on the linkage graph", "#blocks = p^{(m+1) dim z(g)}", bp, seed, [&](ReportLine& l) {
    set_values(l, std::to_string(br.predicted), std::to_string(br.num_blocks));
  });
  add_line(r, "blocks are the fibres of the central restriction", "lambda|z = mu|z => same block; #fibres = p^{dim z(g)}", bp,
           seed, [&](ReportLine& l) {
             std::set<std::vector<Fp>> fibres;
             bool consistent = true;
             std::map<std::vector<Fp>, int> block_of_fibre;
             for (std::size_t i = 0; i < br.weights.size(); ++i) {
               auto key = alg->central_restriction(br.weights[i]);
               fibres.insert(key);
               auto [it, fresh] = block_of_fibre.emplace(key, br.block_of[i]);
               if (!fresh && it->second != br.block_of[i]) consistent = false;
             }
             set_values(l, std::to_string(fibres.size()), consistent ? std::to_string(br.num_blocks) : "inconsistent");
           });
  add_line(r, "torus blocks from torus projectives", "#blocks of U_0(h_m) = p^{(m+1) rank g}", bp, seed, [&](ReportLine& l) {
    BlockResult tb = torus_blocks(alg);
    set_values(l, std::to_string(tb.predicted), std::to_string(tb.num_blocks));
    l.counted = false;
    l.note = "Lambda_0 on h_m has p^r elements since lambda vanishes on h t^i, i > 0";
  });
  return r;
}

Report invariants_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "invariants";
  const auto& d = alg->desc();
  const Params bp = with(base_params(d), "samples", std::to_string(samples));
  const int count = static_cast<int>(invariant_indices(d).size()) * (d.m + 1);
  add_line(r, "number of generators", "#{p_{i,j}} = (m+1) rank g", bp, seed,
           [&](ReportLine& l) { set_values(l, std::to_string((d.m + 1) * d.rank()), std::to_string(count)); });
  InvarianceReport inv;
  add_line(r, "invariance under GL_n(R_m) conjugation", "p_{i,j}(g x g^-1) = p_{i,j}(x)", bp, seed, [&](ReportLine& l) {
    inv = invariance_check(alg, samples, seed);
    set_values(l, "0", std::to_string(inv.failures));
  });
  add_line(r, "infinitesimal invariance", "D p_{i,j}(x)[[y,x]] = 0", bp, seed,
           [&](ReportLine& l) { set_values(l, "0", std::to_string(inv.ad_failures)); });
  add_line(r, "generic Jacobian rank", "rank d(p_{i,j}) = (m+1) rank g at a generic point", bp, seed, [&](ReportLine& l) {
    auto ind = independence_check(alg, samples, seed + 1);
    set_values(l, std::to_string(ind.functions), std::to_string(ind.best_rank));
    l.note = "Jacobian rank at 0 is " + std::to_string(ind.rank_at_zero);
  });
  add_line(r, "dual-number derivative equals the t-adic difference", "f(x + t^{m+1} y) - f(x) = t^{m+1} Df(x)[y] over R_{2m+1}",
           bp, seed, [&](ReportLine& l) {
             auto st = derivative_selftest(alg, std::min(samples, 50), seed + 2);
             set_values(l, "0", std::to_string(st.mismatches));
           });
  return r;
}

Report degree_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples) {
  Report r;
  r.suite = "degree";
  const auto& d = alg->desc();
  const Params bp = with(base_params(d), "samples", std::to_string(samples));
  add_line(r, "orbit dimension under degree reduction", "dim g_m - dim g_m^chi = dim g_k - dim g_k^psi", bp, seed,
           [&](ReportLine& l) {
             std::mt19937_64 rng(seed);
             int bad = 0;
             for (int s = 0; s < samples; ++s) {
               const int k = s % (d.m + 1);
               auto c = CurrentElement::random(alg, rng);
               auto coeffs = c.coeffs();
               for (int j = 0; j < d.m - k; ++j) coeffs[j] = FpMatrix(d.n, d.n, d.p);
               const PChar chi(CurrentElement::from_coeffs(alg, std::move(coeffs)));
               const PChar psi = truncate_pchar(chi, k);
               if (d.dim() - stabilizer_dim(chi) != psi.algebra()->dim() - stabilizer_dim(psi)) ++bad;
             }
             set_values(l, "0", std::to_string(bad));
           });
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structure", "index", "verma", "cartan", "classify", "semisimple",
                                              "kw", "partition", "blocks", "invariants", "degree"};
  return names;
}

Report run_suite(const SuiteConfig& cfg) {
  const auto d = make_descriptor(cfg.kind, cfg.n, cfg.p, cfg.m);
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    raise(ErrorKind::ParseError, "unknown suite " + cfg.suite);
  auto alg = CurrentAlgebra::make(d);
  const std::uint64_t seed = cfg.seed;
  set_dimension_limit(cfg.limit);
  const std::size_t cover = 729;
  Report r;
  if (cfg.suite == "structure") r = structure_suite(alg, seed, cfg.samples);
  if (cfg.suite == "index") r = index_suite(alg, seed, cfg.samples);
  if (cfg.suite == "verma") r = verma_suite(alg, seed);
  if (cfg.suite == "cartan") r = cartan_suite(alg, seed);
  if (cfg.suite == "classify") r = classify_suite(alg, seed);
  if (cfg.suite == "semisimple") r = semisimple_suite(alg, seed);
  if (cfg.suite == "kw") r = kw_suite(alg, seed, cfg.samples, cover);
  if (cfg.suite == "partition") r = partition_suite(root_lattice(d), seed);
  if (cfg.suite == "blocks") r = blocks_suite(alg, seed);
  if (cfg.suite == "invariants") r = invariants_suite(alg, seed, cfg.samples);
  if (cfg.suite == "degree") r = degree_suite(alg, seed, cfg.samples);
  r.suite = cfg.suite;
  return r;
}

}  // namespace currentrep
