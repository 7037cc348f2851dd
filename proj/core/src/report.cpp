#include "currentrep/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "currentrep/error.hpp"
#include "json.hpp"

namespace currentrep {

int Report::mismatches() const {
  int k = 0;
  for (const auto& l : lines)
    if (l.counted && !l.skipped && !l.match) ++k;
  return k;
}

int Report::skipped() const {
  int k = 0;
  for (const auto& l : lines)
    if (l.skipped) ++k;
  return k;
}

void Report::append(Report other) {
  for (auto& l : other.lines) lines.push_back(std::move(l));
  for (auto& t : other.tables) tables.push_back(std::move(t));
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "tsv") return ReportFormat::Tsv;
  if (s == "pretty") return ReportFormat::Pretty;
  raise(ErrorKind::ParseError, "unknown format " + s);
}

std::string render(const Report& r, ReportFormat f, bool timings) {
  switch (f) {
    case ReportFormat::Json: return report_json(r, timings);
    case ReportFormat::Tsv: return report_tsv(r, timings);
    case ReportFormat::Pretty: return report_pretty(r, timings);
  }
  return {};
}

namespace {

// Integers go out as JSON numbers, everything else as strings.
nlohmann::json value_json(const std::string& s) {
  if (!s.empty() && s.size() < 19) {
    std::size_t i = s[0] == '-' ? 1 : 0;
    bool digits = i < s.size();
    for (; i < s.size(); ++i) digits = digits && s[i] >= '0' && s[i] <= '9';
    if (digits) return std::stoll(s);
  }
  return s;
}

std::string millis_string(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string status(const ReportLine& l) {
  if (l.skipped) return "SKIP";
  if (!l.counted) return l.match ? "info" : "INFO";
  return l.match ? "ok" : "MISMATCH";
}

}  // namespace

std::string report_json(const Report& r, bool timings) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& l : r.lines) {
    nlohmann::ordered_json j;
    j["claim"] = l.claim;
    j["paper_ref"] = l.paper_ref;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : l.params) params[k] = value_json(v);
    j["params"] = std::move(params);
    j["formula_value"] = value_json(l.formula_value);
    j["oracle_value"] = value_json(l.oracle_value);
    j["match"] = l.match;
    j["seed"] = l.seed;
    if (timings) j["millis"] = std::round(l.millis * 10) / 10;
    if (l.skipped) j["skipped"] = true;
    if (!l.counted) j["informational"] = true;
    if (!l.note.empty()) j["note"] = l.note;
    a.push_back(std::move(j));
  }
  return a.dump(2) + "\n";
}

std::string report_tsv(const Report& r, bool timings) {
  std::ostringstream out;
  out << "suite\tclaim\tparams\tformula_value\toracle_value\tstatus\tseed" << (timings ? "\tmillis" : "") << "\n";
  for (const auto& l : r.lines) {
    std::string params;
    for (const auto& [k, v] : l.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    out << r.suite << "\t" << l.claim << "\t" << params << "\t" << l.formula_value << "\t" << l.oracle_value << "\t"
        << status(l) << "\t" << l.seed;
    if (timings) out << "\t" << millis_string(l.millis);
    out << "\n";
  }
  for (const auto& t : r.tables) {
    out << "\n# " << t.name << "\n";
    for (const auto& c : t.cols) out << "\t" << c;
    out << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      out << t.rows[i];
      for (const auto& c : t.cells[i]) out << "\t" << c;
      out << "\n";
    }
  }
  return out.str();
}

std::string report_pretty(const Report& r, bool timings) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.lines.size() << " claims, " << r.mismatches() << " mismatches, "
      << r.skipped() << " skipped\n";
  for (const auto& l : r.lines) {
    std::string params;
    for (const auto& [k, v] : l.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    out << "  [" << status(l) << "] " << l.claim << "  {" << params << "}\n"
        << "      " << l.paper_ref << "\n"
        << "      formula " << l.formula_value << " | oracle " << l.oracle_value;
    if (timings) out << " | " << millis_string(l.millis) << " ms";
    out << "\n";
    if (!l.note.empty()) out << "      note: " << l.note << "\n";
  }
  for (const auto& t : r.tables) {
    out << "  table " << t.name << "\n     ";
    for (const auto& c : t.cols) out << "\t" << c;
    out << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      out << "    " << t.rows[i];
      for (const auto& c : t.cells[i]) out << "\t" << c;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace currentrep
