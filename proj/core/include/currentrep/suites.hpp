#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "currentrep/formulas.hpp"
#include "currentrep/report.hpp"

namespace currentrep {

struct SuiteConfig {
  std::string suite;
  AlgebraKind kind = AlgebraKind::SL;
  int n = 2;
  std::uint32_t p = 3;
  int m = 1;
  std::uint64_t seed = 1;
  int samples = 200;
  std::size_t limit = 0;  // module dimension cap; 0 keeps dimension_limit()
};

const std::vector<std::string>& suite_names();
// Validates the descriptor first (InvalidDescriptor); unknown suite names raise ParseError.
Report run_suite(const SuiteConfig& cfg);

Report structure_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples);
Report index_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples);
Report verma_suite(const AlgebraPtr& alg, std::uint64_t seed);
Report cartan_suite(const AlgebraPtr& alg, std::uint64_t seed);
// Partitions restricts the nilpotent types tried (empty: every non-zero type).
Report classify_suite(const AlgebraPtr& alg, std::uint64_t seed, const std::vector<std::vector<int>>& partitions = {});
Report semisimple_suite(const AlgebraPtr& alg, std::uint64_t seed);
Report kw_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples, std::size_t cover_limit = 729);
// Lattice-only; runs outside the standard hypotheses as well.
Report partition_suite(const RootLattice& lat, std::uint64_t seed);
Report blocks_suite(const AlgebraPtr& alg, std::uint64_t seed);
Report invariants_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples);
Report degree_suite(const AlgebraPtr& alg, std::uint64_t seed, int samples);

// Block-diagonal Jordan form with blocks in the given order (E_{i,i+1} inside blocks).
FpMatrix jordan_matrix(const std::vector<int>& partition, std::uint32_t p);
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace currentrep
