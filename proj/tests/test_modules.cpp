#include <doctest.h>

#include "currentrep/error.hpp"
#include "currentrep/induce.hpp"
#include "currentrep/meataxe.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

namespace {

AlgebraPtr alg(AlgebraKind k, int n, std::uint32_t p, int m) { return CurrentAlgebra::make(make_descriptor(k, n, p, m)); }

std::map<std::vector<Fp>, int> weight_count(const ModuleRep& m) {
  std::map<std::vector<Fp>, int> c;
  for (const auto& w : *m.weights) ++c[w];
  return c;
}

}  // namespace

TEST_CASE("baby Verma dimensions and axioms") {
  Sl2 s(3);
  const auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {0}));
  CHECK(z.dim() == 9);
  CHECK(check_axioms(z).ok);
  const PChar chi(s.at(s.e, 0));
  const auto zc = build_baby_verma(chi, enumerate_lambda(chi).front());
  CHECK(zc.dim() == 9);
  CHECK(check_axioms(zc).ok);
  // (f t)^3 acts by chi(f t)^3 = kappa_1(e, f t)^3 = 1
  const int ft = s.alg->index(1, s.alg->local_f(0));
  CHECK(power(zc.action(ft), 3).is_identity());
  const auto g0 = alg(AlgebraKind::SL, 2, 3, 0);
  CHECK(build_baby_verma(PChar::zero(g0), restricted_weight(*g0, {1})).dim() == 3);
  const auto gl = alg(AlgebraKind::GL, 3, 3, 1);
  const auto zg = build_baby_verma(PChar::zero(gl), restricted_weight(*gl, {1, 0, 2}));
  CHECK(zg.dim() == 729);
  CHECK(check_axioms(zg).ok);
}

TEST_CASE("weights of baby Vermas") {
  Sl2 s(3);
  // pairs (a, b) of powers of f and f t: weight -2(a + b) = a + b mod 3
  const auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {0}));
  std::map<std::vector<Fp>, int> expect;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) ++expect[{(Fp)((a + b) % 3)}];
  CHECK(weight_character(z) == expect);
  CHECK(weight_count(z) == expect);
  const auto g0 = alg(AlgebraKind::SL, 2, 3, 0);
  const auto zg = build_baby_verma(PChar::zero(g0), restricted_weight(*g0, {0}));
  CHECK(weight_character(zg) == std::map<std::vector<Fp>, int>{{{0}, 1}, {{1}, 1}, {{2}, 1}});
}

TEST_CASE("graded characters") {
  Sl2 s(3);
  const auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {1}));
  auto gc = graded_character(z);
  int total = 0;
  for (auto& [w, c] : gc) total += c;
  CHECK(total == 9);
}

TEST_CASE("corrupted and empty modules") {
  Sl2 s(3);
  auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {0}));
  auto bad = z;
  const int e = s.alg->index(0, s.alg->local_e(0));
  bad.actions[bad.position(e)].add_to(0, 1, 1);
  auto r = check_axioms(bad);
  CHECK(!r.ok);
  CHECK(!r.failure.empty());
  ModuleRep zero = z;
  zero.dimension = 0;
  for (auto& a : zero.actions) a = FpMatrix(0, 0, 3);
  zero.weights.reset();
  zero.grading.reset();
  zero.labels.clear();
  CHECK(check_axioms(zero).ok);
}

TEST_CASE("other standard modules") {
  Sl2 s(3);
  CHECK(build_dual_verma(s.alg, restricted_weight(*s.alg, {0})).dim() == 9);
  CHECK(check_axioms(build_dual_verma(s.alg, restricted_weight(*s.alg, {2}))).ok);
  CHECK(build_torus_projective(s.alg, {1}).dim() == 3);
  CHECK(build_torus_projective(alg(AlgebraKind::SL, 2, 3, 0), {1}).dim() == 1);
  CHECK(build_torus_projective(alg(AlgebraKind::GL, 3, 3, 1), {0, 0, 0}).dim() == 27);
  auto zp = build_zproj(s.alg, {0});
  CHECK(zp.module.dim() == 27);
  CHECK(check_axioms(zp.module).ok);
  const auto g0 = alg(AlgebraKind::SL, 2, 3, 0);
  auto zp0 = build_zproj(g0, {1});
  auto z0 = build_baby_verma(PChar::zero(g0), restricted_weight(*g0, {1}));
  CHECK(zp0.module.dim() == 3);
  CHECK(are_isomorphic(zp0.module, z0).isomorphic);
  CHECK(build_regular_module(PChar::zero(s.alg)).dim() == 729);
  CHECK(build_regular_module(PChar::zero(g0)).dim() == 27);
  CHECK_THROWS_AS(build_regular_module(PChar::zero(alg(AlgebraKind::GL, 3, 3, 1))), Error);
}

TEST_CASE("spin of the lowest vector in Z(0) for sl_2") {
  const auto g0 = alg(AlgebraKind::SL, 2, 3, 0);
  const auto z = build_baby_verma(PChar::zero(g0), restricted_weight(*g0, {0}));
  // f^2 v has weight -4 = 2
  std::size_t lowest = 0;
  for (std::size_t i = 0; i < z.dim(); ++i)
    if ((*z.weights)[i][0] == 2) lowest = i;
  FpMatrix seed(1, z.dim(), 3);
  seed.set(0, lowest, 1);
  auto w = spin(generator_view(z), seed);
  CHECK(w.dim() == 2);
  CHECK(is_invariant(z, w));
  auto q = quotient_module(z, w);
  CHECK(q.dim() == 1);
  CHECK(check_axioms(q).ok);
  CHECK(check_axioms(submodule(z, w)).ok);
}

TEST_CASE("dual, inflation and twist") {
  Sl2 s(5);
  const auto z = build_baby_verma(PChar::zero(s.alg), restricted_weight(*s.alg, {3}));
  const auto d = dual_module(z);
  CHECK(d.dim() == z.dim());
  CHECK(check_axioms(d).ok);
  CHECK(check_axioms(dual_module(d)).ok);
  const auto g0 = alg(AlgebraKind::SL, 2, 5, 0);
  const auto z0 = build_baby_verma(PChar::zero(g0), restricted_weight(*g0, {2}));
  const auto up = inflate_module(z0, s.alg);
  CHECK(up.dim() == 5);
  CHECK(check_axioms(up).ok);
  const int ht = s.alg->index(1, s.alg->local_h(0));
  CHECK(up.action(ht).is_zero());
  auto tw = twist_module(z, PChar::zero(s.alg));
  CHECK(tw.actions == z.actions);
  // gl_2: eta = kappa(I) vanishes on the derived algebra
  const auto gl = alg(AlgebraKind::GL, 2, 3, 1);
  const auto zg = build_baby_verma(PChar::zero(gl), restricted_weight(*gl, {1, 2}));
  const PChar eta(CurrentElement::homogeneous(gl, FpMatrix::identity(2, 3), 0));
  auto twg = twist_module(zg, eta);
  CHECK(twg.chi == eta);
  CHECK(check_axioms(twg).ok);
}
