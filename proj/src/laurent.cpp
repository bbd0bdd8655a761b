#include "apery/laurent.hpp"

#include <stdexcept>

namespace apery {

Integer constant_term_power(const SparsePoly& laurent, std::int64_t n) {
  if (n < 0) throw arithmetic_error("constant_term_power requires n >= 0");
  SparsePoly power = SparsePoly::constant(laurent.dim(), 1);
  for (std::int64_t i = 0; i < n; ++i) power = power * laurent;
  return power.constant_term();
}

Integer mixed_constant_term(std::span<const SparsePoly> forms,
                            std::span<const std::int64_t> exponents) {
  if (forms.size() != exponents.size())
    throw std::invalid_argument("one exponent per form required");
  if (forms.empty()) throw std::invalid_argument("no forms given");
  const int d = forms[0].dim();
  std::vector<int> caps;
  caps.reserve(exponents.size());
  for (std::int64_t e : exponents) {
    if (e < 0)
      throw arithmetic_error("mixed_constant_term requires exponents >= 0");
    caps.push_back(static_cast<int>(e));
  }
  SparsePoly product = SparsePoly::constant(d, 1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].dim() != d) throw std::invalid_argument("form dimension mismatch");
    if (forms[i].has_negative_exponent())
      throw arithmetic_error("mixed forms must be ordinary polynomials");
    product = product.mul_truncated(
        forms[i].pow_truncated(static_cast<unsigned>(exponents[i]), caps), caps);
  }
  return product.coeff(caps);
}

SparsePoly apery_laurent_poly() {
  SparsePoly f1(3), f2(3), f3(3), f4(3);
  f1.add_term({1, 0, 0}, 1);
  f1.add_term({0, 1, 0}, 1);
  f2.add_term({0, 0, 1}, 1);
  f2.add_term({0, 0, 0}, 1);
  f3.add_term({1, 0, 0}, 1);
  f3.add_term({0, 1, 0}, 1);
  f3.add_term({0, 0, 1}, 1);
  f4.add_term({0, 1, 0}, 1);
  f4.add_term({0, 0, 1}, 1);
  f4.add_term({0, 0, 0}, 1);
  SparsePoly numerator = (f1 * f2) * (f3 * f4);
  SparsePoly laurent(3);
  for (const auto& [e, c] : numerator.terms())
    laurent.add_term({e[0] - 1, e[1] - 1, e[2] - 1}, c);
  return laurent;
}

std::vector<SparsePoly> apery_linear_forms() {
  SparsePoly f1(4), f2(4), f3(4), f4(4);
  f1.add_term({1, 0, 0, 0}, 1);
  f1.add_term({0, 1, 0, 0}, 1);
  f1.add_term({0, 0, 1, 0}, 1);
  f2.add_term({1, 0, 0, 0}, 1);
  f2.add_term({0, 1, 0, 0}, 1);
  f3.add_term({0, 0, 1, 0}, 1);
  f3.add_term({0, 0, 0, 1}, 1);
  f4.add_term({0, 1, 0, 0}, 1);
  f4.add_term({0, 0, 1, 0}, 1);
  f4.add_term({0, 0, 0, 1}, 1);
  return {f1, f2, f3, f4};
}

}  // namespace apery
