#include <doctest.h>

#include "currentrep/error.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK(kind_of([] { make_descriptor(AlgebraKind::SL, 2, 4, 1); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_descriptor(AlgebraKind::SL, 2, 2, 1); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_descriptor(AlgebraKind::SL, 3, 3, 1); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_descriptor(AlgebraKind::GL, 3, 257, 1); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_descriptor(AlgebraKind::GL, 2, 3, -1); }) == ErrorKind::InvalidDescriptor);
  CHECK_NOTHROW(make_descriptor(AlgebraKind::GL, 3, 3, 1));
  CHECK_NOTHROW(make_descriptor(AlgebraKind::SL, 3, 2, 1));
  CHECK(parse_kind("gl") == AlgebraKind::GL);
}

TEST_CASE("dimensions") {
  auto a = CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, 3, 1));
  CHECK(a->dim() == 6);
  CHECK(a->desc().num_positive_roots() == 1);
  CHECK(a->rank() == 1);
  auto b = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 5, 2));
  CHECK(b->dim() == 27);
  CHECK(b->positive_roots().size() == 3);
}

TEST_CASE("bracket examples in (sl_2)_1") {
  Sl2 s(3);
  CHECK(bracket(s.at(s.e, 1), s.at(s.f, 0)) == s.at(s.h, 1));
  CHECK(bracket(s.at(s.e, 1), s.at(s.f, 1)).is_zero());
  CHECK(bracket(s.at(s.h, 0), s.at(s.e, 1)) == s.at(s.e, 1).scaled(2));
}

TEST_CASE("p-map examples") {
  Sl2 s(3);
  CHECK(p_map(s.at(s.e, 1)).is_zero());
  CHECK(p_map(s.at(s.h, 0)) == s.at(s.h, 0));
  const auto x = s.at(s.h, 0) + s.at(s.e, 1);
  CHECK(p_map(x) == x);
}

TEST_CASE("element classification and Jordan decomposition") {
  Sl2 s(3);
  CHECK(classify_element(s.at(s.e, 0) + s.at(s.h, 1)) == ElementClass::Nilpotent);
  CHECK(classify_element(s.at(s.h, 0) + s.at(s.e, 1)) == ElementClass::Semisimple);
  auto g = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 3, 0));
  FpMatrix x(3, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(classify_element(CurrentElement::homogeneous(g, x, 0)) == ElementClass::Mixed);

  auto j1 = jordan_decompose(s.at(s.e, 0));
  CHECK(j1.semisimple.is_zero());
  CHECK(j1.nilpotent == s.at(s.e, 0));
  auto j2 = jordan_decompose(s.at(s.h, 0) + s.at(s.h, 1));
  CHECK(j2.semisimple == s.at(s.h, 0));
  CHECK(j2.nilpotent == s.at(s.h, 1));
  auto j3 = jordan_decompose(s.at(s.h, 0) + s.at(s.e, 1));
  CHECK(j3.semisimple == s.at(s.h, 0) + s.at(s.e, 1));
  CHECK(j3.nilpotent.is_zero());
}

TEST_CASE("trace form kappa_m") {
  Sl2 s(3);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) CHECK(kappa(s.at(s.e, i), s.at(s.f, j)) == (i + j == 1 ? 1u : 0u));
  CHECK(rank(gram_matrix(*s.alg)) == (std::size_t)s.alg->dim());
}

TEST_CASE("centralizers and regularity") {
  Sl2 s(3);
  CHECK(centralizer_basis(CurrentElement(s.alg)).size() == 6);
  CHECK(centralizer_basis(s.at(s.e, 0)).size() == 2);
  CHECK(centralizer_basis(s.at(s.e, 1)).size() == 4);
  CHECK(is_regular(s.at(s.h, 0)));
  CHECK(is_regular(s.at(s.e, 0)));
  CHECK(!is_regular(CurrentElement(s.alg)));
}

TEST_CASE("Lie and restricted axioms on random samples") {
  for (auto d : {make_descriptor(AlgebraKind::SL, 2, 5, 2), make_descriptor(AlgebraKind::GL, 3, 2, 1),
                 make_descriptor(AlgebraKind::SL, 3, 2, 1)}) {
    auto alg = CurrentAlgebra::make(d);
    std::mt19937_64 rng(12);
    for (int s = 0; s < 30; ++s) {
      auto x = CurrentElement::random(alg, rng), y = CurrentElement::random(alg, rng), z = CurrentElement::random(alg, rng);
      CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
      CHECK(bracket(x, y) == bracket(y, x).scaled(d.p - 1));
      CHECK(ad_matrix(p_map(x)) == power(ad_matrix(x), d.p));
      auto jd = jordan_decompose(x);
      CHECK(jd.semisimple + jd.nilpotent == x);
      CHECK(bracket(jd.semisimple, jd.nilpotent).is_zero());
    }
  }
}

TEST_CASE("degree-0 criterion for nilpotency") {
  Sl2 s(5, 2);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    auto x = CurrentElement::random(s.alg, rng);
    const bool x0_nil = power(x.coeff(0), 2).is_zero();
    CHECK((classify_element(x) == ElementClass::Nilpotent) == x0_nil);
  }
}
