#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "currentrep/formulas.hpp"

namespace currentrep {

// Absolute dimensions of the simple U_chi(g_m)-modules (each listed once), read off the
// factors of a module that has every simple as a quotient.
struct SimpleList {
  std::vector<std::size_t> dims;
  std::string method;  // "abelian-cover", "baby-verma" or "regular"
};
enum class EnumerationMode { Auto, AbelianCover, BabyVerma, Regular };
SimpleList simples_of(const PChar& chi, std::uint64_t seed = 1, std::size_t cover_limit = 729,
                      EnumerationMode mode = EnumerationMode::Auto);

// chi(n^+_m) = 0 and chi(h) = 0, so that Lambda_chi lies over F_p.
bool borel_admissible(const PChar& chi);
PChar random_borel_admissible(const AlgebraPtr& alg, std::mt19937_64& rng);
std::uint64_t abelian_cover_dim(const AlgebraDescriptor& d);

struct KwSample {
  PChar chi;
  std::string method;
  int orbit_dim = 0;  // dim g_m - dim g_m^chi
  std::vector<std::size_t> simple_dims;
  std::uint64_t divisor = 1;  // p^{orbit_dim / 2}
  bool divisible = true;
  bool regular = false;
};

struct KwScan {
  AlgebraDescriptor desc;
  std::uint64_t kw1_bound = 0;  // p^{(m+1)(dim g - r)/2}
  std::size_t max_dim = 0;
  bool bound_attained = false;       // at a regular sample
  int violations = 0;                // KW2 divisibility failures
  int bound_exceeded = 0;            // simple dimensions above the KW1 bound
  std::string sampling;
  std::vector<KwSample> samples;
  bool kw1_ok() const { return bound_exceeded == 0 && max_dim == kw1_bound && bound_attained; }
};
// The first sample is the regular toral character when one exists over F_p; the rest
// are uniform when the abelian cover fits in cover_limit and Borel-admissible otherwise.
KwScan kw_scan(const AlgebraPtr& alg, int samples, std::uint64_t seed, std::size_t cover_limit = 729);

}  // namespace currentrep
