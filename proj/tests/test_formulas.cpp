#include <doctest.h>

#include "currentrep/error.hpp"
#include "currentrep/formulas.hpp"
#include "helpers.hpp"

using namespace currentrep;

namespace {

AlgebraPtr alg(AlgebraKind k, int n, std::uint32_t p, int m) { return CurrentAlgebra::make(make_descriptor(k, n, p, m)); }

// Enumerate every tuple (m_{i,alpha}) in [0, p-1]^{mN} directly.
std::map<Weight, std::uint64_t> brute_force_pm(const RootLattice& lat) {
  std::map<Weight, std::uint64_t> out;
  const std::size_t slots = lat.m * lat.roots.size();
  std::vector<std::uint32_t> digits(slots, 0);
  while (true) {
    Weight g(lat.n, 0);
    for (std::size_t s = 0; s < slots; ++s)
      for (int i = 0; i < lat.n; ++i) g[i] += digits[s] * lat.roots[s % lat.roots.size()][i];
    ++out[lat.normalize(g)];
    std::size_t k = 0;
    while (k < slots && ++digits[k] == lat.p) digits[k++] = 0;
    if (k == slots) break;
  }
  return out;
}

}  // namespace

TEST_CASE("partition function against enumeration") {
  for (auto lat : {root_lattice(AlgebraKind::SL, 2, 3, 1), root_lattice(AlgebraKind::SL, 2, 5, 2),
                   root_lattice(AlgebraKind::SL, 3, 2, 1), root_lattice(AlgebraKind::SL, 3, 3, 1),
                   root_lattice(AlgebraKind::GL, 3, 3, 1), root_lattice(AlgebraKind::GL, 2, 3, 0)}) {
    auto table = kostant_table(lat);
    auto brute = brute_force_pm(lat);
    CHECK(table.values == brute);
    CHECK(table.mass() == ipow(lat.p, lat.m * lat.num_positive_roots()));
  }
  auto t0 = kostant_table(root_lattice(AlgebraKind::SL, 2, 3, 0));
  CHECK(t0.at(Weight{0, 0}) == 1);
  CHECK(t0.mass() == 1);
  CHECK(kostant_table(root_lattice(AlgebraKind::SL, 2, 3, 1)).mass() == 3);
}

TEST_CASE("shift sums for sl_2") {
  auto lat = root_lattice(AlgebraKind::SL, 2, 3, 1);
  auto t = kostant_table(lat);
  CHECK(pm_shift_sum(t, Weight{0, 0}).value == 1);
  CHECK(pm_shift_sum(t, Weight{1, 0}).value == 1);
  CHECK(pm_shift_sum(t, Weight{1, 0}).paper_match);
  auto t2 = kostant_table(root_lattice(AlgebraKind::SL, 2, 3, 2));
  for (long long g = -6; g <= 6; ++g) CHECK(pm_shift_sum(t2, Weight{g, 0}).value == 3);
}

TEST_CASE("shift sums when p divides n") {
  // sl_3, p = 3 lies outside the standard hypotheses: the sum sees only the root-lattice coset
  auto lat = root_lattice(AlgebraKind::SL, 3, 3, 1);
  CHECK(lat.dim_center() == 1);
  auto t = kostant_table(lat);
  CHECK(pm_shift_sum(t, Weight{0, 0, 0}).value == 9);
  CHECK(pm_shift_sum(t, Weight{1, 0, 0}).value == 0);
  CHECK(pm_shift_sum(t, Weight{0, 0, 0}).paper_exponent == 1);
}

TEST_CASE("lattice helpers") {
  auto lat = root_lattice(AlgebraKind::SL, 3, 2, 1);
  CHECK(lat.normalize(Weight{2, 1, 1}) == Weight{1, 0, 0});
  CHECK(lat.rank() == 2);
  CHECK(lat.dim_center() == 0);
  CHECK(lattice_box(lat, 1).size() == 9);
  auto gl = root_lattice(AlgebraKind::GL, 2, 3, 1);
  CHECK(gl.central_vanishing(Weight{1, -1}));
  CHECK(!gl.central_vanishing(Weight{1, 0}));
  CHECK(gl.central_vanishing(Weight{3, 0}));
}

TEST_CASE("l-constants") {
  CHECK(l_constants(make_descriptor(AlgebraKind::SL, 2, 3, 1)).l == std::vector<std::uint64_t>{2, 2, 1});
  auto l5 = l_constants(make_descriptor(AlgebraKind::SL, 2, 5, 1));
  CHECK(l5.l == std::vector<std::uint64_t>{2, 2, 2, 2, 1});
  CHECK(l5.mass() == 25);
  auto l3 = l_constants(make_descriptor(AlgebraKind::SL, 3, 2, 0));
  CHECK(l3.mass() == ipow(2, 2 + 3));
}

TEST_CASE("closed forms and their domain") {
  const auto d1 = make_descriptor(AlgebraKind::SL, 2, 3, 1);
  CHECK(verma_exponent(d1, false) == 0);
  CHECK(verma_exponent(make_descriptor(AlgebraKind::SL, 2, 3, 2), false) == 1);
  CHECK(cartan_exponent(d1, false) == 2);
  CHECK(cartan_exponent(make_descriptor(AlgebraKind::GL, 2, 3, 1), true) == 4 - 2 + 1);
  auto a = alg(AlgebraKind::SL, 2, 3, 1);
  auto lc = l_constants(a->desc());
  CHECK(verma_mult_formula(*a, lc, 0, 2) == 1);
  CHECK(cartan_formula(*a, lc, 0, 1) == 2 * 2 * 9);
  auto a0 = alg(AlgebraKind::SL, 2, 3, 0);
  CHECK_THROWS_AS(verma_mult_formula(*a0, l_constants(a0->desc()), 0, 0), Error);
  CHECK_THROWS_AS(ipow(3, -1), Error);
  // gl_1 is a pure torus
  auto t = alg(AlgebraKind::GL, 1, 3, 1);
  CHECK_THROWS_AS(verma_mult_formula(*t, l_constants(t->desc()), 0, 0), Error);
}

TEST_CASE("baby Verma multiplicities are independent of lambda") {
  auto a = alg(AlgebraKind::SL, 2, 3, 1);
  auto rs = restricted_simples(a);
  CHECK(rs.dims == std::vector<std::size_t>{1, 2, 3});
  auto t = multiplicity_tables(a, rs, TableRequest{});
  for (const auto& row : t.verma) CHECK(row == std::vector<std::uint64_t>{2, 2, 1});
}

TEST_CASE("graded convolution for sl_2") {
  auto a = alg(AlgebraKind::SL, 2, 3, 1);
  for (Fp l = 0; l < 3; ++l) CHECK(graded_convolution(a, {l}).match);
  auto b = alg(AlgebraKind::SL, 2, 5, 2);
  CHECK(graded_convolution(b, {4}).match);
}

TEST_CASE("homogeneous classification") {
  auto gl = alg(AlgebraKind::GL, 3, 3, 1);
  FpMatrix reg(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto c1 = classify_simples_homogeneous(PChar(CurrentElement::homogeneous(gl, reg, 0)));
  CHECK(c1.weights.size() == 27);
  CHECK(c1.num_classes == 3);
  std::map<int, int> size1;
  for (int c : c1.class_of) ++size1[c];
  for (auto [c, k] : size1) CHECK(k == 9);
  FpMatrix e12(3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  auto c2 = classify_simples_homogeneous(PChar(CurrentElement::homogeneous(gl, e12, 0)));
  CHECK(c2.num_classes == 9);
  CHECK(c2.predicted_classes == 9);
  // the same character placed in degree 1 reduces to degree 0
  auto c3 = classify_simples_homogeneous(PChar(CurrentElement::homogeneous(gl, e12, 1)));
  CHECK(c3.num_classes == 9);
  CHECK_THROWS_AS(classify_simples_homogeneous(PChar(CurrentElement::homogeneous(gl, reg, 0) +
                                                     CurrentElement::homogeneous(gl, e12, 1))),
                  Error);
}

TEST_CASE("blocks") {
  auto a = alg(AlgebraKind::SL, 2, 3, 1);
  auto rs = restricted_simples(a);
  auto b = blocks(a, rs);
  CHECK(b.num_blocks == 1);
  CHECK(b.predicted == 1);
  auto tb = torus_blocks(a);
  CHECK(tb.num_blocks == 3);
}

TEST_CASE("regular semisimple characters") {
  auto a = alg(AlgebraKind::SL, 2, 3, 1);
  auto h = regular_toral_element(*a);
  REQUIRE(h);
  auto x = CurrentElement::homogeneous(a, *h, 0);
  CHECK(is_regular(x));
  CHECK(classify_element(x) == ElementClass::Semisimple);
  auto audit = semisimple_character_audit(PChar(x));
  CHECK(audit.simple_count == 3);
  CHECK(audit.simple_dims == std::vector<std::size_t>{9, 9, 9});
  CHECK(audit.ok);
  CHECK(!regular_toral_element(*alg(AlgebraKind::GL, 3, 2, 1)));
}
