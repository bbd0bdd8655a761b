#ifndef APERY_QSERIES_HPP
#define APERY_QSERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apery/integer.hpp"

namespace apery {

// Truncated power series in q with exact integer coefficients c_0..c_N.
// Operations keep the truncation order of the left operand.
class QSeries {
public:
  explicit QSeries(int order) : c_(static_cast<std::size_t>(order) + 1, Integer(0)) {
    if (order < 0) throw arithmetic_error("negative truncation order");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Integer& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  QSeries operator*(const QSeries& o) const;
  QSeries operator+(const QSeries& o) const;
  QSeries scaled(const Integer& f) const;

  // Multiplicative inverse; the constant term must be 1 or -1.
  QSeries inverse() const;

  // Integer powers, negative allowed via inverse().
  QSeries pow(std::int64_t e) const;

  // Multiplication by q^w (coefficients shift up, w >= 0).
  QSeries shifted_up(int w) const;

  // (1 - q^s)^e for any integer e, via the binomial series.
  static QSeries one_minus_q_pow(int s, std::int64_t e, int order);

  bool operator==(const QSeries& o) const = default;

private:
  std::vector<Integer> c_;
};

// One rescaled eta-like factor: the pair (scale s, exponent e).
struct EtaFactor {
  int scale;
  std::int64_t exponent;
};

// prod_s prod_{n>=1} (1 - q^{s n})^{e_s}: the Euler-product part of an eta
// quotient, without the q^{sum(s e)/24} prefactor.
QSeries eta_euler_product(std::span<const EtaFactor> factors, int order);

// q^{sum(s e)/24} times the Euler product. The leading exponent must come out
// a nonnegative integer; otherwise throws "non-integral leading exponent".
QSeries eta_quotient_qexp(std::span<const EtaFactor> factors, int order);

// (eta_1 eta_6 / eta_2 eta_3)^12, the weight-one modular function t.
const std::vector<EtaFactor>& modular_t_factors();
// eta_2^7 eta_3^7 / eta_1^5 eta_6^5, the weight-zero form F.
const std::vector<EtaFactor>& modular_f_factors();

// Checks sum_{n <= N} A(n) t(q)^n == F(q) through order q^N.
bool verify_modular_parametrization(int order);

}  // namespace apery

#endif
