#ifndef APERY_RECURRENCE_HPP
#define APERY_RECURRENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "apery/integer.hpp"

namespace apery {

// (n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - n (c n^2 + d) u_{n-1}
struct CubicRecurrenceParams {
  std::int64_t a, b, c, d;
};

// (n+1)^2 u_{n+1} = (a n^2 + a n + b) u_n - c n^2 u_{n-1}
struct QuadraticRecurrenceParams {
  std::int64_t a, b, c;
};

// Outcome of running a recurrence with u_{-1} = 0, u_0 = 1. Division by the
// leading (n+1)-power must be exact at every step; for generic parameters it
// is not, and the first offending index is reported rather than thrown.
struct RecurrenceRun {
  std::vector<Integer> values;                    // u_0 .. u_k, k <= count
  std::optional<std::int64_t> non_integral_at;    // index of the value that failed
  bool complete() const { return !non_integral_at.has_value(); }
};

RecurrenceRun run_cubic(const CubicRecurrenceParams& p, std::int64_t count);
RecurrenceRun run_quadratic(const QuadraticRecurrenceParams& p, std::int64_t count);

}  // namespace apery

#endif
