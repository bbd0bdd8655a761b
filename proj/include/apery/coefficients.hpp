#ifndef APERY_COEFFICIENTS_HPP
#define APERY_COEFFICIENTS_HPP

#include <cstdint>
#include <span>
#include <utility>

#include "apery/binomial.hpp"
#include "apery/partition.hpp"

namespace apery {

// Raised when an evaluation has infinitely many nonzero terms: all blocks of
// the partition have size 1 while the multi-index carries a negative entry.
class infinite_support_error : public arithmetic_error {
public:
  using arithmetic_error::arithmetic_error;
};

// The coefficient family
//   A_{lambda,alpha}(n) = sum_k alpha^k prod_j multinomial over block j with
//                         parts (n_{s(j)+1}-k, ..., n_{s(j)+lambda_j}-k, k).
// For n >= 0 the sum runs over k in [0, min n_i]; otherwise over the
// conservative window |k| <= 1 + sum |n_i| with the pole-count zero test
// discarding vanishing terms. Requires max(lambda) >= 2 when n has negative
// entries (finite support), and throws infinite_support_error otherwise.
Integer a_lambda_coeff(const FamilySpec& fam, std::span<const std::int64_t> n);
Integer a_lambda_coeff(const FamilySpec& fam, const MultiIndex& n);

// Single summand A_lambda(n; k): the product of extended multinomials above,
// without the alpha weight.
Integer a_lambda_term(const Partition& lambda, std::span<const std::int64_t> n,
                      std::int64_t k);

// sum_k binom(n,k)^2 binom(n+k,k)^2 over all integers k (finite for every n).
Integer apery_sum(std::int64_t n);

// sum_k binom(n,k)^2 binom(n+k,k).
Integer b_sum(std::int64_t n);

// sum_k binom(n,k)^2 binom(n+k,k) binom(n+2k,k), n >= 0.
Integer c_sum(std::int64_t n);

// sum_{k>=0} binom(n_1,k)...binom(n_d,k), all n_i >= 0.
Integer yd_sum(std::span<const std::int64_t> n);
Integer yd_sum(const MultiIndex& n);

// sum_{k=0}^{n} (-3)^(n-3k) binom(n,3k) binom(n+k,n) (3k)!/k!^3, n >= 0.
Integer z_sum(std::int64_t n);

// (apery_sum(-n), apery_sum(n-1)) for n > 0; the components agree.
std::pair<Integer, Integer> reflect_a(std::int64_t n);

// (b_sum(-n), (-1)^(n-1) b_sum(n-1)) for n > 0; the components agree.
std::pair<Integer, Integer> reflect_b(std::int64_t n);

// Both sides of the identity
//   sum_k binom(n,k)^2 binom(n+k,k) = sum_k (-1)^(n+k) binom(n,k) binom(n+k,k)^2
// for n >= 0.
std::pair<Integer, Integer> identity25_sides(std::int64_t n);

}  // namespace apery

#endif
