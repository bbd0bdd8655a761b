#include "apery/coefficients.hpp"

#include <algorithm>
#include <cstdlib>

namespace apery {

namespace {

void check_dimension(const FamilySpec& fam, std::span<const std::int64_t> n) {
  if (static_cast<int>(n.size()) != fam.lambda.dimension())
    throw arithmetic_error("multi-index length " + std::to_string(n.size()) +
                           " does not match partition dimension " +
                           std::to_string(fam.lambda.dimension()));
}

}  // namespace

Integer a_lambda_term(const Partition& lambda, std::span<const std::int64_t> n,
                      std::int64_t k) {
  Integer term = 1;
  std::vector<std::int64_t> parts;
  for (int j = 0; j < lambda.block_count(); ++j) {
    parts.clear();
    const int s = lambda.offset(j);
    for (int r = 0; r < lambda.part(j); ++r) parts.push_back(n[s + r] - k);
    parts.push_back(k);
    term *= multinomial_ext(parts);
    if (term == 0) return term;
  }
  return term;
}

Integer a_lambda_coeff(const FamilySpec& fam, std::span<const std::int64_t> n) {
  check_dimension(fam, n);
  const std::int64_t alpha = fam.alpha;

  std::int64_t min_entry = n[0];
  std::int64_t abs_sum = 0;
  for (std::int64_t ni : n) {
    min_entry = std::min(min_entry, ni);
    abs_sum += std::llabs(ni);
  }

  if (min_entry >= 0) {
    Integer acc = 0;
    Integer alpha_pow = 1;
    for (std::int64_t k = 0; k <= min_entry; ++k) {
      acc += alpha_pow * a_lambda_term(fam.lambda, n, k);
      alpha_pow *= alpha;
    }
    return acc;
  }

  if (fam.lambda.max_part() < 2)
    throw infinite_support_error(
        "infinite support: all blocks have size 1 and the multi-index has a "
        "negative entry");

  const std::int64_t window = 1 + abs_sum;
  if (alpha == 0) return a_lambda_term(fam.lambda, n, 0);
  if (alpha == 1 || alpha == -1) {
    Integer acc = 0;
    for (std::int64_t k = -window; k <= window; ++k) {
      Integer term = a_lambda_term(fam.lambda, n, k);
      if (term == 0) continue;
      acc += (alpha == -1 && (k % 2 != 0)) ? -term : term;
    }
    return acc;
  }

  // General integer alpha: accumulate alpha^window * sum and divide once, so
  // negative powers of alpha never leave the integers. Divisibility can fail
  // for genuinely non-integral values of the defining limit.
  Integer scaled = 0;
  const Integer a(static_cast<long>(alpha));
  for (std::int64_t k = -window; k <= window; ++k) {
    Integer term = a_lambda_term(fam.lambda, n, k);
    if (term == 0) continue;
    scaled += pow_int(a, static_cast<unsigned long>(window + k)) * term;
  }
  try {
    return exact_div(scaled, pow_int(a, static_cast<unsigned long>(window)));
  } catch (const arithmetic_error&) {
    throw arithmetic_error("non-integral coefficient at negative multi-index");
  }
}

Integer a_lambda_coeff(const FamilySpec& fam, const MultiIndex& n) {
  return a_lambda_coeff(fam, std::span<const std::int64_t>(n));
}

// For both apery_sum and b_sum the summand vanishes outside k in [0, n] when
// n >= 0 and outside k in [0, -n-1] when n < 0: a negative k would need both
// binom(n,k) and binom(n+k,k) nonzero, forcing n >= 0 and n < 0 at once.
Integer apery_sum(std::int64_t n) {
  const std::int64_t hi = n >= 0 ? n : -n - 1;
  Integer acc = 0;
  for (std::int64_t k = 0; k <= hi; ++k) {
    Integer b1 = binom_ext(n, k);
    Integer b2 = binom_ext(n + k, k);
    acc += b1 * b1 * b2 * b2;
  }
  return acc;
}

Integer b_sum(std::int64_t n) {
  const std::int64_t hi = n >= 0 ? n : -n - 1;
  Integer acc = 0;
  for (std::int64_t k = 0; k <= hi; ++k) {
    Integer b1 = binom_ext(n, k);
    acc += b1 * b1 * binom_ext(n + k, k);
  }
  return acc;
}

Integer c_sum(std::int64_t n) {
  if (n < 0) throw arithmetic_error("c_sum requires n >= 0");
  Integer acc = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    Integer b1 = binom_ext(n, k);
    acc += b1 * b1 * binom_ext(n + k, k) * binom_ext(n + 2 * k, k);
  }
  return acc;
}

Integer yd_sum(std::span<const std::int64_t> n) {
  if (n.empty()) throw arithmetic_error("yd_sum requires d >= 1");
  std::int64_t min_entry = n[0];
  for (std::int64_t ni : n) {
    if (ni < 0) throw arithmetic_error("yd_sum requires nonnegative entries");
    min_entry = std::min(min_entry, ni);
  }
  Integer acc = 0;
  for (std::int64_t k = 0; k <= min_entry; ++k) {
    Integer term = 1;
    for (std::int64_t ni : n) term *= binom_ext(ni, k);
    acc += term;
  }
  return acc;
}

Integer yd_sum(const MultiIndex& n) {
  return yd_sum(std::span<const std::int64_t>(n));
}

Integer z_sum(std::int64_t n) {
  if (n < 0) throw arithmetic_error("z_sum requires n >= 0");
  Integer acc = 0;
  for (std::int64_t k = 0; 3 * k <= n; ++k) {
    Integer term = binom_ext(n, 3 * k) * binom_ext(n + k, n) *
                   multinomial_ext({k, k, k});
    Integer scale = pow_int(-3, static_cast<unsigned long>(n - 3 * k));
    acc += scale * term;
  }
  return acc;
}

std::pair<Integer, Integer> reflect_a(std::int64_t n) {
  if (n <= 0) throw arithmetic_error("reflect_a requires n > 0");
  return {apery_sum(-n), apery_sum(n - 1)};
}

std::pair<Integer, Integer> reflect_b(std::int64_t n) {
  if (n <= 0) throw arithmetic_error("reflect_b requires n > 0");
  Integer rhs = b_sum(n - 1);
  if (n % 2 == 0) rhs = -rhs;
  return {b_sum(-n), rhs};
}

std::pair<Integer, Integer> identity25_sides(std::int64_t n) {
  if (n < 0) throw arithmetic_error("identity25_sides requires n >= 0");
  Integer lhs = 0, rhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    Integer b1 = binom_ext(n, k);
    Integer b2 = binom_ext(n + k, k);
    lhs += b1 * b1 * b2;
    Integer t = b1 * b2 * b2;
    rhs += ((n + k) % 2 != 0) ? -t : t;
  }
  return {lhs, rhs};
}

}  // namespace apery
