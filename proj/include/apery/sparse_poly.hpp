#ifndef APERY_SPARSE_POLY_HPP
#define APERY_SPARSE_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "apery/integer.hpp"

namespace apery {

// Multivariate polynomial with integer coefficients, stored sparsely by
// exponent vector. Exponents are signed, so the same type carries Laurent
// polynomials. Zero coefficients are never stored.
class SparsePoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Integer>;

  explicit SparsePoly(int dim) : dim_(dim) {}

  static SparsePoly constant(int dim, Integer c);
  static SparsePoly monomial(Exponents e, Integer c);

  int dim() const { return dim_; }
  std::size_t term_count() const { return terms_.size(); }
  bool has_negative_exponent() const;

  // Adds c * x^e into the polynomial.
  void add_term(std::span<const int> e, const Integer& c);
  void add_term(std::initializer_list<int> e, const Integer& c);

  // Coefficient at exponent e (zero when absent).
  const Integer& coeff(std::span<const int> e) const;
  const Integer& coeff(std::initializer_list<int> e) const;
  const Integer& constant_term() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;

  // Product where any monomial exceeding caps componentwise is dropped.
  // Useful when only the coefficient at a fixed nonnegative exponent is
  // wanted: exponents never decrease when multiplying polynomials with
  // nonnegative exponents.
  SparsePoly mul_truncated(const SparsePoly& o, std::span<const int> caps) const;

  SparsePoly pow(unsigned e) const;
  SparsePoly pow_truncated(unsigned e, std::span<const int> caps) const;

  const TermMap& terms() const { return terms_; }
  bool operator==(const SparsePoly& o) const = default;

private:
  int dim_;
  TermMap terms_;
};

}  // namespace apery

#endif
