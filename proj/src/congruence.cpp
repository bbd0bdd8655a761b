#include "apery/congruence.hpp"

#include <algorithm>
#include <cstdlib>

#include "apery/coeff_table.hpp"
#include "apery/coefficients.hpp"
#include "apery/detail/parallel.hpp"

namespace apery {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::in_range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw arithmetic_error("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::vector<MultiIndex> seeded_multi_indices(std::uint64_t seed, int count,
                                             int dim, std::int64_t lo,
                                             std::int64_t hi) {
  SplitMix64 rng(seed);
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    MultiIndex n(static_cast<std::size_t>(dim));
    for (auto& x : n) x = rng.in_range(lo, hi);
    out.push_back(std::move(n));
  }
  return out;
}

namespace {

void require_prime(std::int64_t p) {
  Integer pz(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
    throw arithmetic_error("p = " + std::to_string(p) + " is not prime");
}

void require_positive_r(int r) {
  if (r < 1) throw arithmetic_error("r must be a positive integer");
}

Integer ipow(std::int64_t base, unsigned long e) {
  return pow_int(Integer(static_cast<long>(base)), e);
}

MultiIndex scale_index(const MultiIndex& n, std::int64_t factor) {
  MultiIndex out;
  out.reserve(n.size());
  for (std::int64_t x : n) out.push_back(x * factor);
  return out;
}

std::int64_t pow64(std::int64_t base, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

nlohmann::ordered_json index_json(const MultiIndex& n) {
  return nlohmann::ordered_json(n);
}

}  // namespace

CongruenceCell verify_supercongruence(const FamilySpec& fam, const MultiIndex& n,
                                      std::int64_t p, int r, int exponent) {
  require_prime(p);
  require_positive_r(r);
  if (exponent != 2 && exponent != 3)
    throw arithmetic_error("exponent must be 2 or 3");
  if (fam.alpha != 1 && fam.alpha != -1)
    throw arithmetic_error("supercongruence check requires alpha in {-1,1}");

  Integer lhs = a_lambda_coeff(fam, scale_index(n, pow64(p, r)));
  Integer rhs = a_lambda_coeff(fam, scale_index(n, pow64(p, r - 1)));
  nlohmann::ordered_json params;
  params["lambda"] = fam.lambda.to_string();
  params["alpha"] = fam.alpha;
  params["n"] = index_json(n);
  params["p"] = p;
  params["r"] = r;
  params["exponent"] = exponent;
  return make_cell("sc", std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, static_cast<unsigned long>(exponent) *
                               static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

namespace {

CongruenceCell verify_conjecture(const char* claim, const FamilySpec& fam,
                                 const MultiIndex& n, std::int64_t p, int r) {
  require_prime(p);
  require_positive_r(r);
  if (p < 5) throw arithmetic_error("conjecture grids use primes p >= 5");
  for (std::int64_t x : n)
    if (x < 0)
      throw arithmetic_error("conjecture grids use nonnegative indices");
  Integer lhs = a_lambda_coeff(fam, scale_index(n, pow64(p, r)));
  Integer rhs = a_lambda_coeff(fam, scale_index(n, pow64(p, r - 1)));
  nlohmann::ordered_json params;
  params["n"] = index_json(n);
  params["p"] = p;
  params["r"] = r;
  return make_cell(claim, std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, 3ul * static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

}  // namespace

CongruenceCell verify_conjecture_g(const MultiIndex& n, std::int64_t p, int r) {
  return verify_conjecture("conjecture-g", *named_family("askey-gasper"), n, p, r);
}

CongruenceCell verify_conjecture_z(const MultiIndex& n, std::int64_t p, int r) {
  return verify_conjecture("conjecture-z", *named_family("almkvist-zudilin"), n, p, r);
}

CongruenceCell verify_dwork(std::int64_t m, std::int64_t n, std::int64_t p, int r) {
  require_prime(p);
  require_positive_r(r);
  if (m < 0 || n < 0) throw arithmetic_error("dwork check requires m, n >= 0");
  const std::int64_t pr = pow64(p, r);
  const std::int64_t prm1 = pow64(p, r - 1);
  const std::int64_t n_div_p = n / p;
  Integer lhs = apery_sum(pr * m + n) * apery_sum(n_div_p);
  Integer rhs = apery_sum(prm1 * m + n_div_p) * apery_sum(n);
  nlohmann::ordered_json params;
  params["m"] = m;
  params["n"] = n;
  params["p"] = p;
  params["r"] = r;
  return make_cell("dwork", std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

CongruenceCell verify_lucas(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n < 0) throw arithmetic_error("lucas check requires n >= 0");
  Integer product = 1;
  std::vector<std::int64_t> digits;
  std::int64_t rest = n;
  do {
    digits.push_back(rest % p);
    product *= apery_sum(rest % p);
    rest /= p;
  } while (rest > 0);
  nlohmann::ordered_json params;
  params["n"] = n;
  params["p"] = p;
  params["digits"] = digits;
  return make_cell("lucas", std::move(params), apery_sum(n), std::move(product),
                   Integer(static_cast<long>(p)), Integer(static_cast<long>(p)));
}

CongruenceCell verify_jacobsthal(std::int64_t a, std::int64_t b, std::int64_t p) {
  require_prime(p);
  const int eps =
      (p == 2 && mod_canonical(a, 2) == 0 && mod_canonical(b, 2) == 1) ? -1 : 1;
  Integer lhs = binom_ext(a * p, b * p);
  Integer rhs = eps * binom_ext(a, b);

  nlohmann::ordered_json params;
  params["a"] = a;
  params["b"] = b;
  params["p"] = p;
  params["eps"] = eps;

  const Integer prod = Integer(static_cast<long>(a)) * b * (a - b);
  Integer modulus;
  if (prod == 0) {
    // Unbounded modulus: the congruence degenerates to exact equality.
    params["q"] = "inf";
    modulus = 0;
  } else {
    const Integer pz(static_cast<long>(p));
    unsigned long q3 = 3 + padic_valuation(prod, pz).value();
    unsigned long v12 = padic_valuation(12, pz).value();
    unsigned long q = q3 > v12 ? q3 - v12 : 0;
    params["q"] = q;
    modulus = ipow(p, q);
  }
  return make_cell("jacobsthal", std::move(params), std::move(lhs),
                   std::move(rhs), std::move(modulus),
                   Integer(static_cast<long>(p)));
}

CongruenceCell verify_ljunggren(std::int64_t a, std::int64_t b, std::int64_t p) {
  require_prime(p);
  if (a < 0 || b < 0) throw arithmetic_error("ljunggren check requires a, b >= 0");
  if (p < 5) throw arithmetic_error("ljunggren check requires p >= 5");
  nlohmann::ordered_json params;
  params["a"] = a;
  params["b"] = b;
  params["p"] = p;
  return make_cell("ljunggren", std::move(params), binom_ext(p * a, p * b),
                   binom_ext(a, b), ipow(p, 3), Integer(static_cast<long>(p)));
}

CongruenceCell verify_powersum(std::int64_t p, int r, int eps) {
  require_prime(p);
  if (p < 5) throw arithmetic_error("powersum lemma requires p >= 5");
  if (r < 0) throw arithmetic_error("powersum lemma requires r >= 0");
  if (eps != 1 && eps != -1) throw arithmetic_error("eps must be ±1");

  const Integer modulus = ipow(p, static_cast<unsigned long>(r));
  Integer sum = 0;
  if (r > 0) {
    const std::int64_t limit = pow64(p, r);
    for (std::int64_t k = 1; k < limit; ++k) {
      if (k % p == 0) continue;
      Integer k2((static_cast<long>(k)));
      k2 = mod_canonical(k2 * k2, modulus);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), k2.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw arithmetic_error("k^2 not invertible (p divides k?)");
      if (eps == -1 && k % 2 != 0)
        sum -= inv;
      else
        sum += inv;
    }
    sum = mod_canonical(sum, modulus);
  }
  nlohmann::ordered_json params;
  params["p"] = p;
  params["r"] = r;
  params["eps"] = eps;
  return make_cell("powersum", std::move(params), std::move(sum), Integer(0),
                   modulus, Integer(static_cast<long>(p)));
}

CongruenceCell verify_term_lemma(const Partition& lambda, const MultiIndex& n,
                                 std::int64_t k, std::int64_t p, int r,
                                 int exponent) {
  require_prime(p);
  require_positive_r(r);
  if (static_cast<int>(n.size()) != lambda.dimension())
    throw arithmetic_error("multi-index length mismatch");
  if (exponent == 3) {
    if (lambda.max_part() > 2 || p < 5)
      throw arithmetic_error("term lemma modulo p^{3r} needs max part <= 2 and p >= 5");
  } else if (exponent == 2) {
    if (lambda.block_count() < 2)
      throw arithmetic_error("term lemma modulo p^{2r} needs at least two blocks");
  } else {
    throw arithmetic_error("exponent must be 2 or 3");
  }

  const std::int64_t pr = pow64(p, r);
  const std::int64_t prm1 = pow64(p, r - 1);
  MultiIndex hi, lo;
  for (std::int64_t x : n) {
    hi.push_back(pr * x);
    lo.push_back(prm1 * x);
  }
  Integer lhs = a_lambda_term(lambda, hi, p * k);
  Integer rhs = a_lambda_term(lambda, lo, k);
  nlohmann::ordered_json params;
  params["lambda"] = lambda.to_string();
  params["n"] = index_json(n);
  params["k"] = k;
  params["p"] = p;
  params["r"] = r;
  params["exponent"] = exponent;
  return make_cell("lemma53", std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, static_cast<unsigned long>(exponent) *
                               static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

CongruenceCell verify_binom_lemma4(std::int64_t m, std::int64_t k,
                                   std::int64_t p, int r) {
  require_prime(p);
  require_positive_r(r);
  const std::int64_t kp = floor_div(k, p);
  Integer lhs = binom_ext(pow64(p, r) * m - 1, k) * parity_sign(k);
  Integer rhs = binom_ext(pow64(p, r - 1) * m - 1, kp) * parity_sign(kp);
  nlohmann::ordered_json params;
  params["m"] = m;
  params["k"] = k;
  params["p"] = p;
  params["r"] = r;
  return make_cell("lemma54", std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

CongruenceCell verify_binom_lemma5(std::int64_t m1, std::int64_t m2,
                                   std::int64_t k, std::int64_t p, int r) {
  require_prime(p);
  require_positive_r(r);
  const std::int64_t pr = pow64(p, r);
  const std::int64_t prm1 = pow64(p, r - 1);
  Integer lhs = binom_ext(pr * m1 + pr * m2 - k - 1, pr * m1);
  Integer rhs = binom_ext(prm1 * m1 + prm1 * m2 - floor_div(k, p) - 1, prm1 * m1);
  nlohmann::ordered_json params;
  params["m1"] = m1;
  params["m2"] = m2;
  params["k"] = k;
  params["p"] = p;
  params["r"] = r;
  return make_cell("lemma55", std::move(params), std::move(lhs), std::move(rhs),
                   ipow(p, static_cast<unsigned long>(r)),
                   Integer(static_cast<long>(p)));
}

ScanBResult scan_b(const ScanBConfig& config) {
  if (config.d < 1) throw arithmetic_error("scan dimension must be >= 1");
  for (std::int64_t p : config.primes) require_prime(p);
  require_positive_r(config.r);
  if (config.grid.empty()) throw arithmetic_error("scan grid is empty");
  for (const MultiIndex& n : config.grid) {
    if (static_cast<int>(n.size()) != config.d)
      throw arithmetic_error("scan grid index length mismatch");
    for (std::int64_t x : n)
      if (x < 0) throw arithmetic_error("scan grid must be nonnegative");
  }

  std::vector<std::int64_t> bs;
  for (std::int64_t b = config.b_min; b <= config.b_max; ++b) {
    if (config.exclude_zero && b == 0) continue;
    bs.push_back(b);
  }

  // Cells per b, cheapest table first; a failing cell ends that b's scan.
  struct PerB {
    std::vector<CongruenceCell> cells;
    bool survives = true;
  };
  std::vector<std::pair<std::int64_t, MultiIndex>> schedule;
  for (std::int64_t p : config.primes)
    for (const MultiIndex& n : config.grid) schedule.emplace_back(p, n);
  std::stable_sort(schedule.begin(), schedule.end(),
                   [&](const auto& a, const auto& b) {
                     auto cost = [&](const auto& item) {
                       double c = 1;
                       for (std::int64_t x : item.second)
                         c *= static_cast<double>(pow64(item.first, config.r) * x + 1);
                       return c;
                     };
                     return cost(a) < cost(b);
                   });

  std::vector<PerB> results(bs.size());
  detail::parallel_for(bs.size(), config.threads, [&](std::size_t bi) {
    const std::int64_t b = bs[bi];
    PerB& out = results[bi];
    const SparsePoly q = scan_denominator(config.d, Integer(static_cast<long>(b)));
    for (const auto& [p, n] : schedule) {
      const std::int64_t pr = pow64(p, config.r);
      const std::int64_t prm1 = pow64(p, config.r - 1);
      std::vector<int> bounds;
      MultiIndex hi, lo;
      for (std::int64_t x : n) {
        bounds.push_back(static_cast<int>(pr * x));
        hi.push_back(pr * x);
        lo.push_back(prm1 * x);
      }
      CoeffTable table = expand(q, bounds, config.cell_budget);
      nlohmann::ordered_json params;
      params["b"] = b;
      params["p"] = p;
      params["r"] = config.r;
      params["n"] = nlohmann::ordered_json(n);
      params["exponent"] = config.exponent;
      CongruenceCell cell = make_cell(
          "scan-b", std::move(params), table.at(hi), table.at(lo),
          ipow(p, static_cast<unsigned long>(config.exponent) *
                      static_cast<unsigned long>(config.r)),
          Integer(static_cast<long>(p)));
      const bool ok = cell.holds;
      out.cells.push_back(std::move(cell));
      if (!ok) {
        out.survives = false;
        break;
      }
    }
  });

  ScanBResult result;
  result.report.claim = "scan-b";
  result.report.claim_class = ClaimClass::conjecture_support;
  result.report.grid =
      "d=" + std::to_string(config.d) + " b in [" + std::to_string(config.b_min) +
      "," + std::to_string(config.b_max) + "]" +
      (config.exclude_zero ? " minus {0}" : "") + ", " +
      std::to_string(config.primes.size()) + " primes, " +
      std::to_string(config.grid.size()) + " indices, r=" +
      std::to_string(config.r) + ", exponent=" + std::to_string(config.exponent);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (auto& cell : results[i].cells)
      result.report.cells.push_back(std::move(cell));
    if (results[i].survives) result.survivors.push_back(bs[i]);
  }
  return result;
}

}  // namespace apery
