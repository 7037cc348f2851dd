#include <doctest.h>

#include <json.hpp>

#include "currentrep/error.hpp"
#include "currentrep/induce.hpp"
#include "currentrep/serialize.hpp"
#include "helpers.hpp"

using namespace currentrep;
using testing::Sl2;

TEST_CASE("digit strings") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 31u, 37u, 251u}) {
    auto a = testing::random_matrix(4, 7, p, rng);
    auto s = encode_digits(a);
    CHECK(s.size() == 28 * (p <= 36 ? 1u : 2u));
    CHECK(decode_digits(s, 4, 7, p) == a);
  }
  CHECK_THROWS_AS(decode_digits("12", 1, 3, 3), Error);
  CHECK_THROWS_AS(decode_digits("3", 1, 1, 3), Error);
}

TEST_CASE("element and character round trips") {
  auto a = CurrentAlgebra::make(make_descriptor(AlgebraKind::GL, 3, 5, 2));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 5; ++k) {
    auto x = CurrentElement::random(a, rng);
    CHECK(element_from_json(element_to_json(x)) == x);
    const PChar chi(x);
    CHECK(pchar_from_json(pchar_to_json(chi)) == chi);
    CHECK(pchar_from_json(element_to_json(x)) == chi);
  }
  Sl2 s(3);
  auto j = nlohmann::json::parse(pchar_to_json(PChar(s.at(s.e, 0))));
  CHECK(j["support_degree"] == 1);
  CHECK(j["homogeneous_degree"] == 1);
  CHECK(j["dual_class"] == "nilpotent");
}

TEST_CASE("module round trips") {
  Sl2 s(3);
  auto z = build_baby_verma(PChar(s.at(s.e, 0)), enumerate_lambda(PChar(s.at(s.e, 0)))[1]);
  for (bool compact : {false, true}) {
    auto back = module_from_json(module_to_json(z, compact));
    CHECK(back.dim() == z.dim());
    CHECK(back.actions == z.actions);
    CHECK(back.basis == z.basis);
    CHECK(back.chi == z.chi);
    CHECK(check_axioms(back).ok);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(element_from_json("{"), Error);
  CHECK_THROWS_AS(element_from_json(R"({"kind":"sl","n":2,"p":4,"m":0,"coeff_mats":[[0,0,0,0]]})"), Error);
  CHECK_THROWS_AS(element_from_json(R"({"kind":"sl","n":2,"p":3,"m":0,"coeff_mats":[[1,0,0,0]]})"), Error);
  CHECK_THROWS_AS(module_from_json(R"({"dim":2})"), Error);
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), Error);
}

TEST_CASE("characters as JSON") {
  std::map<std::vector<Fp>, int> ch{{{0}, 3}, {{1}, 3}};
  auto j = nlohmann::json::parse(character_to_json(ch));
  CHECK(j.size() == 2);
}
