#ifndef APERY_MACMAHON_HPP
#define APERY_MACMAHON_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apery/sparse_poly.hpp"

namespace apery {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Coefficient of x^m in prod_i (sum_j a[i][j] x_j)^{m_i}, m >= 0.
Integer linear_form_coefficient(const IntMatrix& a,
                                std::span<const std::int64_t> m);

// det(I - A X) with X = diag(x_1..x_n), expanded by the Leibniz formula.
// Matrices larger than 5x5 are rejected.
SparsePoly det_identity_minus_ax(const IntMatrix& a);

// Master-theorem identity at one exponent: compares the x^m coefficient of
// 1/det(I - AX) (via expand) with linear_form_coefficient.
bool macmahon_check(const IntMatrix& a, std::span<const std::int64_t> m);

IntMatrix apery_master_matrix();        // rows generate the Apery linear forms
IntMatrix b_master_matrix();            // rows generate the zeta(2) forms
IntMatrix askey_gasper_master_matrix();

}  // namespace apery

#endif
