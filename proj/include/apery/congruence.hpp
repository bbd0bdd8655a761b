#ifndef APERY_CONGRUENCE_HPP
#define APERY_CONGRUENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apery/partition.hpp"
#include "apery/report.hpp"

namespace apery {

// Deterministic 64-bit generator for reproducible grids (splitmix64).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish value in [lo, hi] by modulo reduction; deterministic across
  // platforms, which matters more here than the negligible bias.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi);

private:
  std::uint64_t state_;
};

std::vector<MultiIndex> seeded_multi_indices(std::uint64_t seed, int count,
                                             int dim, std::int64_t lo,
                                             std::int64_t hi);

// A_{lambda,eps}(p^r n) vs A_{lambda,eps}(p^{r-1} n) modulo p^{exponent*r}.
// alpha must be 1 or -1; the claim is checked as asked, including parameter
// ranges where it is known to fail (counterexample runs).
CongruenceCell verify_supercongruence(const FamilySpec& fam, const MultiIndex& n,
                                      std::int64_t p, int r, int exponent);

// Open conjectures: coefficients of the (3;-4) and (4;-27) families modulo
// p^{3r}, p >= 5. Reported as conjecture-support, never theorem.
CongruenceCell verify_conjecture_g(const MultiIndex& n, std::int64_t p, int r);
CongruenceCell verify_conjecture_z(const MultiIndex& n, std::int64_t p, int r);

// A(p^r m + n) A([n/p]) vs A(p^{r-1} m + [n/p]) A(n) modulo p^r.
CongruenceCell verify_dwork(std::int64_t m, std::int64_t n, std::int64_t p, int r);

// A(n) vs the product of A over base-p digits of n, modulo p.
CongruenceCell verify_lucas(std::int64_t n, std::int64_t p);

// binom(ap,bp) vs eps*binom(a,b) modulo p^q with q = v_p(p^3 a b (a-b)) -
// v_p(12); eps = -1 exactly when p = 2 and (a,b) = (0,1) mod 2. When
// a b (a-b) = 0 the modulus is unbounded and exact equality is required.
CongruenceCell verify_jacobsthal(std::int64_t a, std::int64_t b, std::int64_t p);

// binom(pa,pb) vs binom(a,b) modulo p^3 for a, b >= 0 and p >= 5.
CongruenceCell verify_ljunggren(std::int64_t a, std::int64_t b, std::int64_t p);

// sum over k in [1, p^r - 1], p not dividing k, of eps^k * inverse(k^2)
// modulo p^r; must vanish. p >= 5, r >= 0, eps = ±1.
CongruenceCell verify_powersum(std::int64_t p, int r, int eps);

// Single-term congruence A_lambda(p^r n; p k) vs A_lambda(p^{r-1} n; k)
// modulo p^{exponent*r}. exponent 3 needs max part <= 2 and p >= 5;
// exponent 2 needs at least two blocks.
CongruenceCell verify_term_lemma(const Partition& lambda, const MultiIndex& n,
                                 std::int64_t k, std::int64_t p, int r,
                                 int exponent);

// binom(p^r m - 1, k)(-1)^k vs binom(p^{r-1} m - 1, [k/p])(-1)^{[k/p]} mod p^r.
CongruenceCell verify_binom_lemma4(std::int64_t m, std::int64_t k,
                                   std::int64_t p, int r);

// binom(p^r(m1+m2) - k - 1, p^r m1) vs the r-1 analogue with [k/p], mod p^r.
CongruenceCell verify_binom_lemma5(std::int64_t m1, std::int64_t m2,
                                   std::int64_t k, std::int64_t p, int r);

struct ScanBConfig {
  int d = 5;
  std::int64_t b_min = -20;
  std::int64_t b_max = 20;
  bool exclude_zero = true;
  std::vector<std::int64_t> primes = {5, 7, 11};
  int r = 1;
  int exponent = 2;
  std::vector<MultiIndex> grid;  // nonnegative multi-indices of length d
  std::size_t cell_budget = 4'000'000;
  int threads = 0;  // 0 = hardware concurrency
};

struct ScanBResult {
  CongruenceReport report;              // one cell per evaluated (b, p, n)
  std::vector<std::int64_t> survivors;  // b values whose cells all hold
};

// For each b in [b_min, b_max], expands 1/(1 - sum x_i + b prod x_i) far
// enough to compare coefficients at p^r n and p^{r-1} n modulo p^{exponent*r}
// over the grid, stopping at the first failing cell per b.
ScanBResult scan_b(const ScanBConfig& config);

}  // namespace apery

#endif
