#include <doctest.h>

#include "currentrep/induce.hpp"
#include "currentrep/meataxe.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

namespace {

AlgebraPtr alg(AlgebraKind k, int n, std::uint32_t p, int m) { return CurrentAlgebra::make(make_descriptor(k, n, p, m)); }

ModuleRep natural_module(const AlgebraPtr& a) {
  ModuleRep m;
  m.alg = a;
  m.chi = PChar::zero(a);
  m.name = "natural";
  m.dimension = a->n();
  for (int k = 0; k < a->dim(); ++k) {
    m.basis.push_back(k);
    m.actions.push_back(a->local_matrix(a->basis(k).local));
  }
  return m;
}

ModuleRep change_basis(const ModuleRep& m, const FpMatrix& g) {
  ModuleRep out = m;
  const FpMatrix gi = inverse(g);
  for (auto& a : out.actions) a = g * a * gi;
  out.weights.reset();
  out.grading.reset();
  return out;
}

FpMatrix random_invertible(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  while (true) {
    auto g = testing::random_matrix(n, n, p, rng);
    if (determinant(g) != 0) return g;
  }
}

}  // namespace

TEST_CASE("natural module of sl_2 is irreducible") {
  const auto a = alg(AlgebraKind::SL, 2, 3, 0);
  const auto nat = natural_module(a);
  CHECK(check_axioms(nat).ok);
  std::mt19937_64 rng(1);
  CHECK(test_irreducible(generator_view(nat), rng).irreducible);
  SimpleCatalog cat;
  auto cs = chop(nat, cat);
  CHECK(cs.length() == 1);
}

TEST_CASE("baby Vermas for regular nilpotent characters are simple") {
  Sl2 s(3);
  const PChar chi(s.at(s.e, 0));
  std::mt19937_64 rng(2);
  for (const auto& lam : enumerate_lambda(chi)) {
    auto z = build_baby_verma(chi, lam);
    CHECK(test_irreducible(generator_view(z), rng).irreducible);
  }
  auto ws = enumerate_lambda(chi);
  auto z0 = build_baby_verma(chi, ws[0]), z1 = build_baby_verma(chi, ws[1]);
  auto iso = are_isomorphic(z0, z1, 1, false);
  CHECK(iso.isomorphic);
  REQUIRE(iso.witness);
  for (std::size_t i = 0; i < z0.basis.size(); ++i) CHECK(*iso.witness * z0.actions[i] == z1.actions[i] * *iso.witness);
}

TEST_CASE("composition factors of Z_0(0) for (sl_2)_1") {
  Sl2 s(3);
  SimpleCatalog cat;
  auto cs = chop(build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {0})), cat);
  std::map<std::size_t, int> by_dim;
  for (auto [t, mult] : cs.multiplicities()) by_dim[cat.type(t).module.dim] += mult;
  // L(0), L(1) of dims 1, 2 twice each, Steinberg L(2) of dim 3 once
  CHECK(by_dim == std::map<std::size_t, int>{{1, 2}, {2, 2}, {3, 1}});
  std::size_t total = 0;
  for (int t : cs.factors) total += cat.type(t).module.dim;
  CHECK(total == 9);
}

TEST_CASE("chop is independent of the seed and of the basis") {
  const auto a = alg(AlgebraKind::SL, 2, 5, 0);
  auto z = build_baby_verma(PChar::zero(a), restricted_weight(*a, {2}));
  std::mt19937_64 rng(3);
  auto z2 = change_basis(z, random_invertible(z.dim(), 5, rng));
  SimpleCatalog cat;
  ChopOptions o1, o2;
  o2.seed = 99;
  auto c1 = chop(z, cat, o1), c2 = chop(z2, cat, o2);
  CHECK(c1.multiplicities() == c2.multiplicities());
}

TEST_CASE("isomorphism testing") {
  const auto a = alg(AlgebraKind::SL, 2, 3, 0);
  auto l0 = build_baby_verma(PChar::zero(a), restricted_weight(*a, {0}));
  auto h0 = head(l0).head;  // L(0), one-dimensional
  auto l1 = head(build_baby_verma(PChar::zero(a), restricted_weight(*a, {1}))).head;
  CHECK(h0.dim() == 1);
  CHECK(l1.dim() == 2);
  CHECK(!are_isomorphic(h0, l1).isomorphic);
  std::mt19937_64 rng(4);
  Sl2 s(5);
  auto z = build_baby_verma(PChar(s.at(s.e, 0)), enumerate_lambda(PChar(s.at(s.e, 0)))[2]);
  auto zz = change_basis(z, random_invertible(z.dim(), 5, rng));
  auto r = are_isomorphic(z, zz, 7, false);
  CHECK(r.isomorphic);
  REQUIRE(r.witness);
  for (std::size_t i = 0; i < z.basis.size(); ++i) CHECK(*r.witness * z.actions[i] == zz.actions[i] * *r.witness);
  // non-isomorphic modules of equal dimension: Z(0) and Z(1) for g, p = 5, share dims 5
  auto y0 = build_baby_verma(PChar::zero(alg(AlgebraKind::SL, 2, 5, 0)),
                             restricted_weight(*alg(AlgebraKind::SL, 2, 5, 0), {0}));
  auto y1 = build_baby_verma(PChar::zero(y0.alg), restricted_weight(*y0.alg, {1}));
  CHECK(!are_isomorphic(y0, y1, 1, false).isomorphic);
}

TEST_CASE("socle and head") {
  const auto a = alg(AlgebraKind::SL, 2, 3, 0);
  auto z = build_baby_verma(PChar::zero(a), restricted_weight(*a, {0}));
  auto soc = socle(generator_view(z));
  CHECK(soc.dim() == 2);  // the submodule spanned from f^2 v
  auto h = head(z);
  CHECK(h.head.dim() == 1);
  CHECK(check_axioms(h.head).ok);
  CHECK(h.quotient_map.rows() == 1);
  // head of the Steinberg module is itself
  auto st = build_baby_verma(PChar::zero(a), restricted_weight(*a, {2}));
  CHECK(head(st).head.dim() == 3);
}

TEST_CASE("invariant subspaces and characters") {
  Sl2 s(3);
  auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {1}));
  CHECK(invariant_subspace(z, {}).rows() == z.dim());
  // vectors killed by n^+_m, against the nullspace of the stacked actions
  std::vector<CurrentElement> np{s.at(s.e, 0), s.at(s.e, 1)};
  FpMatrix stacked(0, z.dim(), 3);
  for (const auto& x : np) {
    auto a = z.act(x);
    for (std::size_t i = 0; i < a.rows(); ++i) stacked.append_row(a.row(i));
  }
  auto inv = invariant_subspace(z, np);
  CHECK(inv.rows() == nullspace(stacked).rows());
  CHECK(inv.rows() > 1);
  auto one = head(build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {0}))).head;
  CHECK(weight_character(one) == std::map<std::vector<Fp>, int>{{{0}, 1}});
}
