#pragma once

#include <map>
#include <string>
#include <vector>

#include "currentrep/meataxe.hpp"

namespace currentrep {

// Row-major base-p digits: one character (0-9a-z) per entry for p <= 36, two hex
// characters otherwise.
std::string encode_digits(const FpMatrix& a);
FpMatrix decode_digits(const std::string& s, std::size_t rows, std::size_t cols, std::uint32_t p);

// {"kind","n","p","m","coeff_mats":[[row-major ints] x (m+1)]}
std::string element_to_json(const CurrentElement& x, int indent = -1);
CurrentElement element_from_json(const std::string& text);
// element fields plus "support", "support_degree", "homogeneous_degree", "dual_class"
std::string pchar_to_json(const PChar& chi, int indent = -1);
// Accepts a PChar or a bare element document.
PChar pchar_from_json(const std::string& text);
// {"chi","dim","basis","basis_labels","actions","weights","grading"}; compact uses digit strings.
std::string module_to_json(const ModuleRep& m, bool compact = false, int indent = -1);
ModuleRep module_from_json(const std::string& text);
// {"factors":[{"label","dim","mult"}],"seed","retries"}
std::string series_to_json(const CompositionSeries& cs, const SimpleCatalog& cat, int indent = -1);
// sorted key-value pairs
std::string character_to_json(const std::map<std::vector<Fp>, int>& ch, int indent = -1);
std::string graded_character_to_json(const std::map<std::vector<long long>, int>& ch, int indent = -1);

std::string read_file(const std::string& path);

}  // namespace currentrep
