#include "apery/qseries.hpp"

#include <cstdlib>

#include "apery/binomial.hpp"
#include "apery/coefficients.hpp"

namespace apery {

QSeries QSeries::operator*(const QSeries& o) const {
  const int n = order();
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    const int jmax = std::min(n - i, o.order());
    for (int j = 0; j <= jmax; ++j)
      r[i + j] += c_[static_cast<std::size_t>(i)] * o[j];
  }
  return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
  const int n = order();
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    r[i] = c_[static_cast<std::size_t>(i)];
    if (i <= o.order()) r[i] += o[i];
  }
  return r;
}

QSeries QSeries::scaled(const Integer& f) const {
  QSeries r(order());
  for (int i = 0; i <= order(); ++i) r[i] = c_[static_cast<std::size_t>(i)] * f;
  return r;
}

QSeries QSeries::inverse() const {
  const Integer& u = c_[0];
  if (u != 1 && u != -1)
    throw arithmetic_error("series inverse needs unit constant term");
  const int n = order();
  QSeries r(n);
  r[0] = u;  // 1/u = u for u = ±1
  for (int i = 1; i <= n; ++i) {
    Integer acc = 0;
    for (int j = 1; j <= i; ++j) acc += c_[static_cast<std::size_t>(j)] * r[i - j];
    r[i] = -u * acc;
  }
  return r;
}

QSeries QSeries::pow(std::int64_t e) const {
  const QSeries base = e >= 0 ? *this : inverse();
  std::uint64_t k = static_cast<std::uint64_t>(e >= 0 ? e : -e);
  QSeries r(order());
  r[0] = 1;
  QSeries sq = base;
  while (k) {
    if (k & 1) r = r * sq;
    sq = sq * sq;
    k >>= 1;
  }
  return r;
}

QSeries QSeries::shifted_up(int w) const {
  if (w < 0) throw arithmetic_error("shift must be nonnegative");
  QSeries r(order());
  for (int i = 0; i + w <= order(); ++i) r[i + w] = c_[static_cast<std::size_t>(i)];
  return r;
}

QSeries QSeries::one_minus_q_pow(int s, std::int64_t e, int order) {
  QSeries r(order);
  for (int j = 0; j * s <= order; ++j)
    r[j * s] = parity_sign(j) * binom_ext(e, j);
  return r;
}

QSeries eta_euler_product(std::span<const EtaFactor> factors, int order) {
  QSeries r(order);
  r[0] = 1;
  for (const EtaFactor& f : factors) {
    if (f.scale <= 0) throw arithmetic_error("eta scale must be positive");
    for (int n = 1; n * f.scale <= order; ++n)
      r = r * QSeries::one_minus_q_pow(n * f.scale, f.exponent, order);
  }
  return r;
}

QSeries eta_quotient_qexp(std::span<const EtaFactor> factors, int order) {
  std::int64_t weight24 = 0;
  for (const EtaFactor& f : factors) weight24 += f.scale * f.exponent;
  if (weight24 % 24 != 0 || weight24 < 0)
    throw arithmetic_error("non-integral leading exponent");
  const std::int64_t w = weight24 / 24;
  QSeries euler = eta_euler_product(factors, order);
  if (w > order) return QSeries(order);
  return euler.shifted_up(static_cast<int>(w));
}

const std::vector<EtaFactor>& modular_t_factors() {
  static const std::vector<EtaFactor> f = {{1, 12}, {6, 12}, {2, -12}, {3, -12}};
  return f;
}

const std::vector<EtaFactor>& modular_f_factors() {
  static const std::vector<EtaFactor> f = {{2, 7}, {3, 7}, {1, -5}, {6, -5}};
  return f;
}

bool verify_modular_parametrization(int order) {
  const QSeries t = eta_quotient_qexp(modular_t_factors(), order);
  const QSeries f = eta_quotient_qexp(modular_f_factors(), order);
  // t = q(1 + ...), so t^n only contributes from q^n on; Horner from the top.
  QSeries sum(order);
  for (int n = order; n >= 0; --n) {
    sum = sum * t;
    sum[0] += apery_sum(n);
  }
  return sum == f;
}

}  // namespace apery
