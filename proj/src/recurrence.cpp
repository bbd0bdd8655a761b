#include "apery/recurrence.hpp"

namespace apery {

namespace {

template <typename Step>
RecurrenceRun run(std::int64_t count, Step&& step) {
  if (count < 0) throw arithmetic_error("recurrence count must be >= 0");
  RecurrenceRun result;
  result.values.reserve(static_cast<std::size_t>(count) + 1);
  result.values.emplace_back(1);  // u_0
  Integer prev = 0;               // u_{-1}
  for (std::int64_t n = 0; n < count; ++n) {
    auto [numerator, divisor] = step(n, result.values.back(), prev);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                divisor.get_mpz_t());
    if (r != 0) {
      result.non_integral_at = n + 1;
      return result;
    }
    prev = result.values.back();
    result.values.push_back(std::move(q));
  }
  return result;
}

}  // namespace

RecurrenceRun run_cubic(const CubicRecurrenceParams& p, std::int64_t count) {
  return run(count, [&p](std::int64_t n, const Integer& un, const Integer& um1) {
    Integer nn(static_cast<long>(n));
    Integer numerator = (2 * nn + 1) * (p.a * nn * nn + p.a * nn + p.b) * un -
                        nn * (p.c * nn * nn + p.d) * um1;
    Integer divisor = (nn + 1) * (nn + 1) * (nn + 1);
    return std::pair{std::move(numerator), std::move(divisor)};
  });
}

RecurrenceRun run_quadratic(const QuadraticRecurrenceParams& p,
                            std::int64_t count) {
  return run(count, [&p](std::int64_t n, const Integer& un, const Integer& um1) {
    Integer nn(static_cast<long>(n));
    Integer numerator =
        (p.a * nn * nn + p.a * nn + p.b) * un - p.c * nn * nn * um1;
    Integer divisor = (nn + 1) * (nn + 1);
    return std::pair{std::move(numerator), std::move(divisor)};
  });
}

}  // namespace apery
