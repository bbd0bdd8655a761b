#ifndef APERY_BINOMIAL_HPP
#define APERY_BINOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "apery/integer.hpp"

namespace apery {

// Binomial coefficient extended to all integer pairs as the limiting value of
// the gamma quotient. It is nonzero only when (k >= 0 and n-k >= 0), or
// (n < 0 and k >= 0), or (n < 0 and n-k >= 0); in each case at least one of
// k, n-k is nonnegative and the symmetry binom(n,k) = binom(n,n-k) reduces the
// evaluation to a falling-factorial product.
Integer binom_ext(std::int64_t n, std::int64_t k);

// sgn(k)*(-1)^k*binom(-n+k-1, k), with sgn(k) = -1 for k < 0. Kept as a
// distinct code path; agrees with binom_ext on all integer pairs.
Integer binom_negation(std::int64_t n, std::int64_t k);

// Multinomial coefficient with top value sum(parts), extended by the same
// gamma limit. Counting poles of the gamma factors: with P_num = [sum < 0]
// and P_den = #{negative parts}, the value is 0 when P_den > P_num, the
// ordinary multinomial when both are 0, and for a single negative part b_j
//   (-1)^(b_j - N) * (-b_j-1)! / ((-N-1)! * prod_{i != j} b_i!)
// where N = sum(parts). P_den < P_num cannot occur.
Integer multinomial_ext(std::span<const std::int64_t> parts);
Integer multinomial_ext(std::initializer_list<std::int64_t> parts);

// +1 for even k, -1 for odd k (k may be negative).
inline int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace apery

#endif
