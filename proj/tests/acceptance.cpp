// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            run all of C1..C11
//   acceptance C4 [C7]    run the named criteria
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "currentrep/error.hpp"
#include "currentrep/formulas.hpp"
#include "currentrep/suites.hpp"

using namespace currentrep;

namespace {

AlgebraPtr alg(AlgebraKind k, int n, std::uint32_t p, int m) { return CurrentAlgebra::make(make_descriptor(k, n, p, m)); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

// A criterion needs real numbers, so a skipped counted line is a failure too.
void require_report(Outcome& o, const Report& r, const std::string& label) {
  for (const auto& l : r.lines) {
    if (!l.counted) continue;
    if (l.skipped)
      o.require(false, label + ": skipped '" + l.claim + "' (" + l.note + ")");
    else if (!l.match)
      o.require(false, label + ": '" + l.claim + "' formula " + l.formula_value + " oracle " + l.oracle_value);
  }
  if (r.lines.empty()) o.require(false, label + ": empty report");
}

std::vector<std::string> oracles(const Report& r, const std::string& claim) {
  std::vector<std::string> out;
  for (const auto& l : r.lines)
    if (l.claim == claim && !l.skipped) out.push_back(l.oracle_value);
  return out;
}

const ReportLine* find_line(const Report& r, const std::string& claim) {
  for (const auto& l : r.lines)
    if (l.claim == claim) return &l;
  return nullptr;
}

void c1(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int m : {0, 1, 2}) require_report(o, structure_suite(alg(AlgebraKind::SL, 2, p, m), 1, 200), "sl2 p" + std::to_string(p) + " m" + std::to_string(m));
  for (std::uint32_t p : {2u, 3u, 5u}) require_report(o, structure_suite(alg(AlgebraKind::GL, 3, p, 1), 1, 200), "gl3 p" + std::to_string(p));
  bool rejected = false;
  try {
    make_descriptor(AlgebraKind::SL, 2, 2, 1);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::InvalidDescriptor;
  }
  o.require(rejected, "sl2 at p=2 was not rejected");
  o.note("sl2 p=2 rejected (p | n)");
}

void c2(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int m : {0, 1, 2}) {
      auto r = index_suite(alg(AlgebraKind::SL, 2, p, m), 1, 200);
      require_report(o, r, "sl2 p" + std::to_string(p) + " m" + std::to_string(m));
      auto v = oracles(r, "minimal sampled coadjoint stabilizer");
      o.require(v.size() == 1 && v[0] == std::to_string(m + 1), "sl2 index is not m+1");
    }
  auto r = index_suite(alg(AlgebraKind::GL, 3, 3, 1), 1, 200);
  require_report(o, r, "gl3 p3 m1");
  auto v = oracles(r, "minimal sampled coadjoint stabilizer");
  o.require(v.size() == 1 && v[0] == "6", "gl3 index is not 6");
}

void c3(Outcome& o) {
  struct Case {
    std::uint32_t p;
    int m;
    std::string expect;
  };
  // l_mu times p^{(m/2)(dim - r) - r}: (2,2,1) and (2,2,2,2,1) with factors 1, 3, 1
  for (const auto& c : {Case{3, 1, "(2,2,1)"}, Case{3, 2, "(6,6,3)"}, Case{5, 1, "(2,2,2,2,1)"}}) {
    const std::string label = "sl2 p" + std::to_string(c.p) + " m" + std::to_string(c.m);
    auto r = verma_suite(alg(AlgebraKind::SL, 2, c.p, c.m), 1);
    require_report(o, r, label);
    auto v = oracles(r, "composition multiplicities of Z(lambda)");
    o.require(v.size() == c.p, label + ": expected one row per lambda");
    for (const auto& row : v) o.require(row == c.expect, label + ": row " + row + " != " + c.expect);
    o.note(label + " " + c.expect);
  }
}

void c4(Outcome& o) {
  auto r = cartan_suite(alg(AlgebraKind::SL, 2, 3, 1), 1);
  require_report(o, r, "sl2 p3 m1");
  auto v = oracles(r, "regular-module audit");
  o.require(v.size() == 1 && v[0] == "(162,162,81)", "regular module factors are not (162,162,81)");
  auto f = oracles(r, "Z_proj filtration by baby Vermas");
  o.require(f.size() == 1 && f[0] == "[3,0,0;0,3,0;0,0,3]", "Z_proj filtration is not 3 delta");
  o.note("U_0 factors (162,162,81)");
}

void c5(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    auto r = classify_suite(alg(AlgebraKind::SL, 2, p, 1), 1);
    require_report(o, r, "sl2 p" + std::to_string(p));
    o.require(find_line(r, "baby Vermas are simple for regular nilpotent chi") != nullptr, "sl2: no simplicity line");
  }
  auto s3 = classify_suite(alg(AlgebraKind::SL, 3, 2, 1), 1, {{3}});
  require_report(o, s3, "sl3 p2");
  auto gl = classify_suite(alg(AlgebraKind::GL, 3, 3, 1), 1);
  require_report(o, gl, "gl3 p3");
  auto classes = oracles(gl, "isomorphism classes of simple heads");
  o.require(classes == std::vector<std::string>{"3", "9"}, "gl3 classes are not 3 and 9");
  for (const auto& claim : {"within-class heads are isomorphic (checked witnesses)", "cross-class heads are not isomorphic"})
    o.require(oracles(gl, claim).size() == 2, std::string("gl3: missing '") + claim + "'");
  o.note("gl3 classes (3): 3, (2,1): 9");
}

void c6(Outcome& o) {
  auto r = semisimple_suite(alg(AlgebraKind::SL, 2, 3, 1), 1);
  require_report(o, r, "sl2 p3 m1");
  auto n = oracles(r, "number of simple modules");
  o.require(n.size() == 1 && n[0] == "3", "simple count is not 3");
  o.note("3 simples of dim 9");
}

void c7(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int m : {1, 2}) require_report(o, kw_suite(alg(AlgebraKind::SL, 2, p, m), 1, 200), "sl2 p" + std::to_string(p) + " m" + std::to_string(m));
}

void c8(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int m : {1, 2}) require_report(o, partition_suite(root_lattice(AlgebraKind::SL, 2, p, m), 1), "sl2 p" + std::to_string(p) + " m" + std::to_string(m));
  require_report(o, partition_suite(root_lattice(AlgebraKind::SL, 3, 2, 1), 1), "sl3 p2");
  // p | n: the sum over p X*(T) sees only the root-lattice coset
  require_report(o, partition_suite(root_lattice(AlgebraKind::SL, 3, 3, 1), 1), "sl3 p3");
  auto gl = partition_suite(root_lattice(AlgebraKind::GL, 3, 3, 1), 1);
  const ReportLine* paper = find_line(gl, "shift-sum identity over the box");
  const ReportLine* corrected = find_line(gl, "shift-sum identity with the z-corrected constant on central-vanishing weights");
  std::string which = "neither constant";
  if (paper && paper->match)
    which = "paper constant";
  else if (corrected && corrected->match)
    which = "z-corrected constant";
  o.note("gl3 p3 m1 matches the " + which + (paper ? " (sums " + paper->oracle_value + ")" : ""));
  for (const auto& claim : {"partition function mass", "central vanishing", "shift sum is constant on root-lattice cosets", "graded character convolution"}) {
    const ReportLine* l = find_line(gl, claim);
    o.require(l && l->match, std::string("gl3: '") + claim + "'");
  }
}

void c9(Outcome& o) {
  auto r = blocks_suite(alg(AlgebraKind::SL, 2, 3, 1), 1);
  require_report(o, r, "sl2 p3 m1");
  auto b = oracles(r, "number of blocks on the linkage graph");
  o.require(b.size() == 1 && b[0] == "1", "sl2 has more than one block");
  auto gl = blocks_suite(alg(AlgebraKind::GL, 3, 3, 1), 1);
  require_report(o, gl, "gl3 p3 m1");
}

void c10(Outcome& o) {
  require_report(o, invariants_suite(alg(AlgebraKind::SL, 2, 3, 1), 1, 100), "sl2 p3 m1");
  require_report(o, invariants_suite(alg(AlgebraKind::GL, 2, 2, 1), 1, 100), "gl2 p2 m1");
}

void c11(Outcome& o) {
  for (auto [k, n, p, m] : std::vector<std::tuple<AlgebraKind, int, std::uint32_t, int>>{
           {AlgebraKind::SL, 2, 3, 1}, {AlgebraKind::SL, 2, 3, 2}, {AlgebraKind::SL, 2, 5, 2},
           {AlgebraKind::GL, 2, 2, 2}, {AlgebraKind::GL, 3, 3, 2}, {AlgebraKind::SL, 3, 2, 2}})
    require_report(o, degree_suite(alg(k, n, p, m), 1, 100), make_descriptor(k, n, p, m).name());
}

struct Criterion {
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{{"C1", 5, c1},   {"C2", 10, c2},  {"C3", 30, c3},   {"C4", 600, c4},
                                   {"C5", 1200, c5}, {"C6", 60, c6}, {"C7", 900, c7},  {"C8", 60, c8},
                                   {"C9", 1200, c9}, {"C10", 10, c10}, {"C11", 5, c11}};
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs of %.0fs", secs, c.budget_s);
    o.require(secs < c.budget_s, std::string("over budget ") + buf);
    std::string detail = buf;
    for (const auto& n : o.notes) detail += "; " + n;
    std::cout << c.name << (o.pass ? " PASS " : " FAIL ") << detail << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
