#ifndef APERY_SUITE_HPP
#define APERY_SUITE_HPP

#include <cstdint>
#include <vector>

#include "apery/congruence.hpp"

namespace apery {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency
};

// Aggregate outcome of the declarative verification battery. Theorem-class
// failures are error-level; conjecture-support failures are reported but
// distinguished.
struct SuiteResult {
  std::vector<CongruenceReport> reports;

  std::size_t theorem_failures() const;
  std::size_t conjecture_failures() const;
};

// Runs every claim battery over seeded deterministic grids:
// supercongruence theorems (including negative multi-indices), the binomial
// and power-sum lemmas, Dwork/Lucas/Jacobsthal/Ljunggren congruences, the
// reflection identities, conjecture-support grids, and the d=5 product-term
// scan.
SuiteResult run_suite(const SuiteConfig& config = {});

}  // namespace apery

#endif
