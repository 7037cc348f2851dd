#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace currentrep {

struct ReportLine {
  std::string claim;
  std::string paper_ref;  // the identity being certified, as a formula
  std::vector<std::pair<std::string, std::string>> params;
  std::string formula_value;
  std::string oracle_value;
  bool match = false;
  bool skipped = false;   // e.g. too large for the dimension cap
  bool counted = true;    // informational lines do not affect the verdict
  std::string note;
  std::uint64_t seed = 0;
  double millis = 0;
};

struct Table {
  std::string name;
  std::vector<std::string> rows, cols;
  std::vector<std::vector<std::string>> cells;
};

struct Report {
  std::string suite;
  std::vector<ReportLine> lines;
  std::vector<Table> tables;
  int mismatches() const;
  int skipped() const;
  bool ok() const { return mismatches() == 0; }
  void append(Report other);
};

enum class ReportFormat { Json, Tsv, Pretty };
ReportFormat parse_format(const std::string& s);
std::string render(const Report& r, ReportFormat f, bool timings = true);
std::string report_json(const Report& r, bool timings = true);
std::string report_tsv(const Report& r, bool timings = true);
std::string report_pretty(const Report& r, bool timings = true);

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    if constexpr (std::is_same_v<T, std::string>)
      s += v[i];
    else
      s += std::to_string(v[i]);
  }
  return s;
}
template <class T>
std::string bracketed(const std::vector<T>& v) {
  return "(" + join(v) + ")";
}

}  // namespace currentrep
