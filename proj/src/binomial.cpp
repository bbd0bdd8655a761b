#include "apery/binomial.hpp"

#include <algorithm>

namespace apery {

Integer binom_ext(std::int64_t n, std::int64_t k) {
  if (k < 0) {
    if (n - k < 0) return 0;  // neither k nor n-k nonnegative
    k = n - k;                // symmetry binom(n,k) = binom(n,n-k)
  }
  // k >= 0 here; mpz_bin_ui handles negative n via the falling factorial.
  Integer r;
  Integer top(static_cast<long>(n));
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Integer binom_negation(std::int64_t n, std::int64_t k) {
  int sgn = (k >= 0) ? 1 : -1;
  return sgn * parity_sign(k) * binom_ext(-n + k - 1, k);
}

Integer multinomial_ext(std::span<const std::int64_t> parts) {
  std::int64_t total = 0;
  int negatives = 0;
  std::size_t negative_index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += parts[i];
    if (parts[i] < 0) {
      ++negatives;
      negative_index = i;
    }
  }
  const int num_poles = total < 0 ? 1 : 0;
  if (negatives > num_poles) return 0;
  if (negatives < num_poles)
    throw arithmetic_error("multinomial_ext: parts sum negative without a negative part");

  if (negatives == 0) {
    Integer v = factorial(static_cast<unsigned long>(total));
    for (std::int64_t b : parts)
      v = exact_div(v, factorial(static_cast<unsigned long>(b)));
    return v;
  }

  // One pole in numerator and denominator: the limit is an ordinary
  // multinomial with top -b_j - 1 and a parity sign.
  const std::int64_t bj = parts[negative_index];
  Integer v = factorial(static_cast<unsigned long>(-bj - 1));
  v = exact_div(v, factorial(static_cast<unsigned long>(-total - 1)));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == negative_index) continue;
    v = exact_div(v, factorial(static_cast<unsigned long>(parts[i])));
  }
  return parity_sign(bj - total) * v;
}

Integer multinomial_ext(std::initializer_list<std::int64_t> parts) {
  return multinomial_ext(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

}  // namespace apery
