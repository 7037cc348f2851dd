#include <doctest.h>

#include <json.hpp>

#include "currentrep/error.hpp"
#include "currentrep/suites.hpp"

using namespace currentrep;

namespace {

ErrorKind kind_of(const SuiteConfig& cfg) {
  try {
    run_suite(cfg);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("partitions and Jordan forms") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(3) == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
  auto j = jordan_matrix({2, 1}, 3);
  CHECK(j == FpMatrix(3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.suite = "structure";
  cfg.p = 4;
  CHECK(kind_of(cfg) == ErrorKind::InvalidDescriptor);
  cfg.p = 3;
  cfg.suite = "nonsense";
  CHECK(kind_of(cfg) == ErrorKind::ParseError);
  CHECK(suite_names().size() == 11);
}

TEST_CASE("verdicts ignore informational and skipped lines") {
  Report r;
  ReportLine ok;
  ok.match = true;
  ReportLine info;
  info.counted = false;
  ReportLine skip;
  skip.skipped = true;
  r.lines = {ok, info, skip};
  CHECK(r.ok());
  CHECK(r.skipped() == 1);
  ReportLine bad;
  r.lines.push_back(bad);
  CHECK(r.mismatches() == 1);
}

TEST_CASE("reports are deterministic and carry their anchors") {
  SuiteConfig cfg;
  cfg.suite = "verma";
  cfg.seed = 5;
  auto a = render(run_suite(cfg), ReportFormat::Json, false);
  auto b = render(run_suite(cfg), ReportFormat::Json, false);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  CHECK(!j.empty());
  for (const auto& line : j) {
    CHECK(!line["paper_ref"].get<std::string>().empty());
    CHECK(!line.contains("millis"));
  }
  auto tsv = render(run_suite(cfg), ReportFormat::Tsv, false);
  CHECK(tsv.find('\t') != std::string::npos);
  CHECK(parse_format("pretty") == ReportFormat::Pretty);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("cheap suites pass") {
  for (std::string s : {"structure", "index", "invariants", "degree", "partition"}) {
    SuiteConfig cfg;
    cfg.suite = s;
    cfg.samples = 40;
    auto r = run_suite(cfg);
    CHECK_MESSAGE(r.ok(), s);
    CHECK(!r.lines.empty());
  }
}

TEST_CASE("the size cap turns lines into skips") {
  SuiteConfig cfg;
  cfg.suite = "partition";
  cfg.limit = 2;
  auto r = run_suite(cfg);
  CHECK(r.ok());
  CHECK(r.skipped() >= 1);
  set_dimension_limit(0);
}
