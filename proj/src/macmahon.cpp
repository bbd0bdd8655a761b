#include "apery/macmahon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "apery/coeff_table.hpp"

namespace apery {

namespace {

int checked_size(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  return static_cast<int>(n);
}

}  // namespace

Integer linear_form_coefficient(const IntMatrix& a,
                                std::span<const std::int64_t> m) {
  const int n = checked_size(a);
  if (m.size() != a.size())
    throw std::invalid_argument("exponent length does not match matrix size");
  std::vector<int> caps;
  for (std::int64_t mi : m) {
    if (mi < 0) throw arithmetic_error("exponents must be nonnegative");
    caps.push_back(static_cast<int>(mi));
  }
  SparsePoly product = SparsePoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    SparsePoly form(n);
    for (int j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      form.add_term(e, Integer(static_cast<long>(a[i][j])));
    }
    product = product.mul_truncated(
        form.pow_truncated(static_cast<unsigned>(m[i]), caps), caps);
  }
  return product.coeff(caps);
}

SparsePoly det_identity_minus_ax(const IntMatrix& a) {
  const int n = checked_size(a);
  if (n > 5)
    throw arithmetic_error("Leibniz determinant limited to matrices up to 5x5");

  SparsePoly det(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;

    SparsePoly term = SparsePoly::constant(n, sign);
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      const int j = perm[static_cast<std::size_t>(i)];
      SparsePoly entry(n);  // (I - AX)_{ij} = delta_ij - a_ij x_j
      if (i == j) entry.add_term(std::vector<int>(static_cast<std::size_t>(n), 0), 1);
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        entry.add_term(e, Integer(-static_cast<long>(
                              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])));
      }
      if (entry.term_count() == 0) zero = true;
      term = term * entry;
    }
    if (!zero) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool macmahon_check(const IntMatrix& a, std::span<const std::int64_t> m) {
  SparsePoly det = det_identity_minus_ax(a);
  std::vector<int> bounds;
  for (std::int64_t mi : m) {
    if (mi < 0) throw arithmetic_error("exponents must be nonnegative");
    bounds.push_back(static_cast<int>(mi));
  }
  CoeffTable table = expand(det, bounds);
  return table.at(m) == linear_form_coefficient(a, m);
}

IntMatrix apery_master_matrix() {
  return {{1, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 1}};
}

IntMatrix b_master_matrix() { return {{1, 1, 1}, {1, 1, 0}, {0, 1, 1}}; }

IntMatrix askey_gasper_master_matrix() {
  return {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

}  // namespace apery
