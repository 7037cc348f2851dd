#include <doctest.h>

#include "currentrep/error.hpp"
#include "currentrep/induce.hpp"
#include "currentrep/pchar.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

TEST_CASE("element round trip and zero") {
  Sl2 s(5, 2);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    auto c = CurrentElement::random(s.alg, rng);
    PChar chi(c);
    CHECK(chi.dual() == c);
    CHECK(PChar::from_values(s.alg, chi.values()) == chi);
    auto y = CurrentElement::random(s.alg, rng);
    // chi(y) is the t^m coefficient of tr(c y)
    Fp direct = 0;
    for (int i = 0; i <= 2; ++i) {
      auto prod = c.coeff(i) * y.coeff(2 - i);
      direct = fp_add(direct, fp_add(prod(0, 0), prod(1, 1), 5), 5);
    }
    CHECK(chi(y) == direct);
  }
  CHECK(PChar::zero(s.alg).is_zero());
  for (int k = 0; k < s.alg->dim(); ++k) CHECK(PChar::zero(s.alg).on_basis(k) == 0);
}

TEST_CASE("support degrees") {
  Sl2 s(3, 2);
  PChar a(s.at(s.e, 0));
  CHECK(a.homogeneous_degree() == 2);
  PChar b(s.at(s.e, 2));
  CHECK(b.homogeneous_degree() == 0);
  CHECK(b.support_degree() == 0);
  CHECK(PChar::zero(s.alg).support_degree() == 0);
  CHECK(!PChar(s.at(s.e, 0) + s.at(s.h, 1)).homogeneous_degree());
}

TEST_CASE("Jordan decomposition of characters") {
  Sl2 s(3);
  auto j1 = pchar_jordan(PChar(s.at(s.e, 0)));
  CHECK(j1.semisimple.is_zero());
  CHECK(j1.nilpotent == PChar(s.at(s.e, 0)));
  const PChar he(s.at(s.h, 0) + s.at(s.e, 1));
  auto j2 = pchar_jordan(he);
  CHECK(j2.semisimple == he);
  CHECK(j2.nilpotent.is_zero());
  auto j3 = pchar_jordan(PChar(s.at(s.h, 0) + s.at(s.h, 1)));
  CHECK(j3.semisimple == PChar(s.at(s.h, 0)));
  CHECK(j3.nilpotent == PChar(s.at(s.h, 1)));
}

TEST_CASE("stabilizer dimensions") {
  Sl2 s(3);
  CHECK(stabilizer_dim(PChar::zero(s.alg)) == 6);
  CHECK(stabilizer_dim(PChar(s.at(s.e, 0))) == 2);
  CHECK(stabilizer_dim(PChar(s.at(s.e, 1))) == 4);
  // stabilizer elements annihilate chi under the coadjoint action
  std::mt19937_64 rng(2);
  const PChar chi(CurrentElement::random(s.alg, rng));
  for (const auto& y : stabilizer_basis(chi))
    for (int k = 0; k < s.alg->dim(); ++k) CHECK(chi(bracket(y, CurrentElement::basis_element(s.alg, k))) == 0);
}

TEST_CASE("truncation and inflation") {
  Sl2 s(5, 2);
  std::mt19937_64 rng(3);
  const PChar chi(CurrentElement::random(s.alg, rng));
  CHECK(truncate_pchar(chi, 2) == chi);
  auto z = truncate_pchar(PChar::zero(s.alg), 0);
  CHECK(z.is_zero());
  CHECK(z.algebra()->m() == 0);
  CHECK_THROWS_AS(truncate_pchar(PChar(s.at(s.e, 0)), 1), Error);
  // psi on g_1, inflated back to g_2, restricts to itself
  auto c1 = CurrentElement::random(CurrentAlgebra::make(s.alg->desc().with_m(1)), rng);
  const PChar psi(c1);
  auto up = inflate_pchar(psi, s.alg);
  CHECK(up.support_degree() <= 1);
  CHECK(truncate_pchar(up, 1) == psi);
  // orbit dimension is preserved
  CHECK(s.alg->dim() - stabilizer_dim(up) == psi.algebra()->dim() - stabilizer_dim(psi));
}

TEST_CASE("standard Levi forms in gl_3") {
  auto g = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 3, 1));
  FpMatrix reg(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto l1 = standard_levi_form(*g, reg);
  CHECK(l1.partition == std::vector<int>{3});
  CHECK(l1.simple_roots.size() == 2);
  CHECK(l1.center_basis.size() == 1);
  FpMatrix e12(3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  auto l2 = standard_levi_form(*g, e12);
  CHECK(l2.partition == std::vector<int>{2, 1});
  CHECK(l2.center_basis.size() == 2);
  auto l3 = standard_levi_form(*g, FpMatrix(3, 3, 3));
  CHECK(l3.partition == std::vector<int>{1, 1, 1});
  CHECK(l3.center_basis.size() == 3);
  // conjugated nilpotent returns to the same standard form
  FpMatrix gm(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  REQUIRE(determinant(gm) != 0);
  auto l4 = standard_levi_form(*g, gm * e12 * inverse(gm));
  CHECK(l4.partition == std::vector<int>{2, 1});
  CHECK(l4.conjugator * (gm * e12 * inverse(gm)) * inverse(l4.conjugator) == l4.standard_form);
  CHECK_THROWS_AS(standard_levi_form(*g, FpMatrix::identity(3, 3)), Error);
}

TEST_CASE("index estimates") {
  auto a = CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, 3, 1));
  CHECK(index_estimate(a, 200, 1).min_stabilizer_dim == 2);
  auto b = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 3, 1));
  CHECK(index_estimate(b, 200, 1).min_stabilizer_dim == 6);
  auto c = CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, 3, 0));
  CHECK(index_estimate(c, 200, 1).min_stabilizer_dim == 1);
}

TEST_CASE("Lambda_chi") {
  Sl2 s(3);
  for (const PChar& chi : {PChar::zero(s.alg), PChar(s.at(s.e, 0))}) {
    auto ws = enumerate_lambda(chi);
    REQUIRE(ws.size() == 3);
    std::set<Fp> h0;
    for (const auto& w : ws) {
      h0.insert(w.values[0][0]);
      CHECK(w.values[1][0] == 0);
    }
    CHECK(h0 == std::set<Fp>{0, 1, 2});
  }
  // chi = kappa(h): chi(h t) = tr(h h) = 2 forces lambda(h t) = 2, and chi(h) = 0
  auto ws = enumerate_lambda(PChar(s.at(s.h, 0)));
  REQUIRE(ws.size() == 3);
  for (const auto& w : ws) CHECK(w.values[1][0] == 2);
  // a character with chi(h) != 0 needs a field extension
  auto sl20 = CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, 3, 0));
  CHECK_THROWS_AS(enumerate_lambda(PChar(CurrentElement::homogeneous(sl20, s.h, 0))), Error);
}
