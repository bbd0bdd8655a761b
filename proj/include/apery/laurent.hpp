#ifndef APERY_LAURENT_HPP
#define APERY_LAURENT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apery/partition.hpp"
#include "apery/sparse_poly.hpp"

namespace apery {

// Constant term of L^n for n >= 0.
Integer constant_term_power(const SparsePoly& laurent, std::int64_t n);

// Constant term of prod_i forms[i]^{e_i} / x^e, i.e. the coefficient of x^e
// in the product of the (ordinary polynomial) forms. All e_i >= 0.
Integer mixed_constant_term(std::span<const SparsePoly> forms,
                            std::span<const std::int64_t> exponents);

// (x1+x2)(x3+1)(x1+x2+x3)(x2+x3+1) / (x1 x2 x3): the three-variable Laurent
// polynomial whose n-th power has the Apery number A(n) as constant term.
SparsePoly apery_laurent_poly();

// (x1+x2+x3), (x1+x2), (x3+x4), (x2+x3+x4): coefficient of x^n in the mixed
// power product gives the four-variable Apery coefficient A(n).
std::vector<SparsePoly> apery_linear_forms();

}  // namespace apery

#endif
