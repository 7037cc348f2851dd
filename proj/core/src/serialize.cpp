#include "currentrep/serialize.hpp"

#include <fstream>
#include <sstream>

#include "currentrep/error.hpp"
#include "json.hpp"

namespace currentrep {

using nlohmann::json;

namespace {

const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

json matrix_json(const FpMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

FpMatrix matrix_from(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p) {
  if (j.is_string()) return decode_digits(j.get<std::string>(), rows, cols, p);
  if (!j.is_array() || j.size() != rows) raise(ErrorKind::ParseError, "matrix has the wrong number of rows");
  FpMatrix a(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& r = j[i];
    if (!r.is_array() || r.size() != cols) raise(ErrorKind::ParseError, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) a.set(i, c, fp_reduce(r[c].get<long long>(), p));
  }
  return a;
}

json element_json(const CurrentElement& x) {
  const auto& d = x.desc();
  json j;
  j["kind"] = d.kind_name();
  j["n"] = d.n;
  j["p"] = d.p;
  j["m"] = d.m;
  json mats = json::array();
  for (const auto& c : x.coeffs()) {
    json flat = json::array();
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) flat.push_back(c(r, s));
    mats.push_back(std::move(flat));
  }
  j["coeff_mats"] = std::move(mats);
  return j;
}

CurrentElement element_from(const json& j) {
  try {
    const auto d = make_descriptor(parse_kind(j.at("kind").get<std::string>()), j.at("n").get<int>(),
                                   j.at("p").get<std::uint32_t>(), j.at("m").get<int>());
    auto alg = CurrentAlgebra::make(d);
    const json& mats = j.at("coeff_mats");
    if (!mats.is_array() || static_cast<int>(mats.size()) != d.m + 1)
      raise(ErrorKind::ParseError, "coeff_mats must hold m+1 matrices");
    std::vector<FpMatrix> coeffs;
    for (const auto& flat : mats) {
      if (!flat.is_array() || static_cast<int>(flat.size()) != d.n * d.n)
        raise(ErrorKind::ParseError, "coefficient matrix must have n*n entries");
      FpMatrix c(d.n, d.n, d.p);
      for (int r = 0; r < d.n; ++r)
        for (int s = 0; s < d.n; ++s) c.set(r, s, fp_reduce(flat[r * d.n + s].get<long long>(), d.p));
      coeffs.push_back(std::move(c));
    }
    return CurrentElement::from_coeffs(alg, std::move(coeffs));
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

json pchar_json(const PChar& chi) {
  json j = element_json(chi.dual());
  j["support"] = chi.support();
  j["support_degree"] = chi.support_degree();
  if (auto h = chi.homogeneous_degree())
    j["homogeneous_degree"] = *h;
  else
    j["homogeneous_degree"] = nullptr;
  j["dual_class"] = element_class_name(classify_element(chi.dual()));
  return j;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

std::string encode_digits(const FpMatrix& a) {
  std::string s;
  const bool wide = a.p() > 36;
  s.reserve(a.rows() * a.cols() * (wide ? 2 : 1));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Fp v = a(i, j);
      if (wide) {
        s.push_back(kDigits[v >> 4]);
        s.push_back(kDigits[v & 15]);
      } else {
        s.push_back(kDigits[v]);
      }
    }
  return s;
}

FpMatrix decode_digits(const std::string& s, std::size_t rows, std::size_t cols, std::uint32_t p) {
  const bool wide = p > 36;
  if (s.size() != rows * cols * (wide ? 2 : 1)) raise(ErrorKind::ParseError, "digit string has the wrong length");
  FpMatrix a(rows, cols, p);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      int v = digit_value(s[k++]);
      if (wide) v = v * 16 + digit_value(s[k++]);
      if (v < 0 || static_cast<std::uint32_t>(v) >= p) raise(ErrorKind::ParseError, "bad digit");
      a.set(i, j, static_cast<Fp>(v));
    }
  return a;
}

std::string element_to_json(const CurrentElement& x, int indent) { return element_json(x).dump(indent); }

CurrentElement element_from_json(const std::string& text) { return element_from(parse(text)); }

std::string pchar_to_json(const PChar& chi, int indent) { return pchar_json(chi).dump(indent); }

PChar pchar_from_json(const std::string& text) {
  json j = parse(text);
  if (j.contains("chi")) j = j["chi"];
  return PChar(element_from(j));
}

std::string module_to_json(const ModuleRep& m, bool compact, int indent) {
  json j;
  j["name"] = m.name;
  j["chi"] = pchar_json(m.chi);
  j["dim"] = m.dim();
  j["basis"] = m.basis;
  json labels = json::array();
  for (int k : m.basis) labels.push_back(m.alg->basis(k).label);
  j["basis_labels"] = std::move(labels);
  j["vector_labels"] = m.labels;
  json actions = json::array();
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    actions.push_back(compact ? json(encode_digits(m.actions[i])) : matrix_json(m.actions[i]));
  j["actions"] = std::move(actions);
  j["encoding"] = compact ? "digits" : "rows";
  j["weights"] = m.weights ? json(*m.weights) : json(nullptr);
  j["grading"] = m.grading ? json(*m.grading) : json(nullptr);
  return j.dump(indent);
}

ModuleRep module_from_json(const std::string& text) {
  json j = parse(text);
  try {
    ModuleRep m;
    m.chi = PChar(element_from(j.at("chi")));
    m.alg = m.chi.algebra();
    m.dimension = j.at("dim").get<std::size_t>();
    m.name = j.value("name", std::string("module"));
    if (j.contains("basis")) {
      m.basis = j.at("basis").get<std::vector<int>>();
    } else {
      for (const auto& lab : j.at("basis_labels")) {
        int found = -1;
        for (int k = 0; k < m.alg->dim(); ++k)
          if (m.alg->basis(k).label == lab.get<std::string>()) found = k;
        if (found < 0) raise(ErrorKind::ParseError, "unknown basis label " + lab.get<std::string>());
        m.basis.push_back(found);
      }
    }
    for (std::size_t i = 1; i < m.basis.size(); ++i)
      if (m.basis[i] <= m.basis[i - 1]) raise(ErrorKind::ParseError, "basis indices must be ascending");
    for (int k : m.basis)
      if (k < 0 || k >= m.alg->dim()) raise(ErrorKind::ParseError, "basis index out of range");
    const json& acts = j.at("actions");
    if (acts.size() != m.basis.size()) raise(ErrorKind::ParseError, "one action per basis element expected");
    for (const auto& a : acts) m.actions.push_back(matrix_from(a, m.dimension, m.dimension, m.p()));
    if (j.contains("vector_labels") && j["vector_labels"].is_array())
      m.labels = j["vector_labels"].get<std::vector<std::string>>();
    if (j.contains("weights") && !j["weights"].is_null())
      m.weights = j["weights"].get<std::vector<std::vector<Fp>>>();
    if (j.contains("grading") && !j["grading"].is_null())
      m.grading = j["grading"].get<std::vector<std::vector<long long>>>();
    return m;
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

std::string series_to_json(const CompositionSeries& cs, const SimpleCatalog& cat, int indent) {
  json j;
  json f = json::array();
  for (const auto& [t, mult] : cs.multiplicities())
    f.push_back({{"label", cat.type(t).label}, {"dim", cat.type(t).module.dim}, {"mult", mult}});
  j["factors"] = std::move(f);
  j["seed"] = cs.seed;
  j["retries"] = cs.retries;
  return j.dump(indent);
}

std::string character_to_json(const std::map<std::vector<Fp>, int>& ch, int indent) {
  json a = json::array();
  for (const auto& [w, c] : ch) a.push_back({{"weight", w}, {"dim", c}});
  return a.dump(indent);
}

std::string graded_character_to_json(const std::map<std::vector<long long>, int>& ch, int indent) {
  json a = json::array();
  for (const auto& [w, c] : ch) a.push_back({{"weight", w}, {"dim", c}});
  return a.dump(indent);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace currentrep
