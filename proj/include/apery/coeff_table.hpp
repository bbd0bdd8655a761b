#ifndef APERY_COEFF_TABLE_HPP
#define APERY_COEFF_TABLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apery/partition.hpp"
#include "apery/sparse_poly.hpp"

#include <json.hpp>

namespace apery {

class table_too_large_error : public arithmetic_error {
public:
  table_too_large_error(std::size_t cells, std::size_t budget)
      : arithmetic_error("table too large: " + std::to_string(cells) +
                         " cells exceed budget " + std::to_string(budget)),
        cells(cells) {}
  std::size_t cells;
};

// Dense rectangular table of Taylor coefficients of 1/Q up to per-variable
// degree caps. Storage is row-major over 0 <= n_i <= bounds[i].
class CoeffTable {
public:
  CoeffTable(std::vector<int> bounds);

  int dim() const { return static_cast<int>(bounds_.size()); }
  const std::vector<int>& bounds() const { return bounds_; }
  std::size_t cell_count() const { return cells_.size(); }

  const Integer& at(std::span<const int> n) const;
  const Integer& at(std::span<const std::int64_t> n) const;
  const Integer& at(std::initializer_list<int> n) const;
  Integer& at_mutable(std::span<const int> n);

  // Coefficients at (i, i, ..., i) for 0 <= i <= max_i, the diagonal.
  std::vector<Integer> diagonal() const;

  // {"d":..., "bounds":[...], "entries":[{"n":[...],"c":"<decimal>"}]}
  // Coefficients serialize as decimal strings; entries in row-major order.
  nlohmann::ordered_json to_json() const;
  static CoeffTable from_json(const nlohmann::ordered_json& j);

  bool operator==(const CoeffTable& o) const = default;

private:
  std::vector<int> bounds_;
  std::vector<std::size_t> strides_;
  std::vector<Integer> cells_;
};

enum class FillOrder { total_degree, lexicographic };

inline constexpr std::size_t kDefaultCellBudget = 4'000'000;

// Taylor coefficients of 1/Q by the convolution recurrence
//   c(n) = [n = 0] - sum_{0 != m <= n} q(m) c(n - m)
// filled in nondecreasing total degree (or lexicographically; the orders
// agree). Requires Q(0) = 1 and the cell count within budget.
CoeffTable expand(const SparsePoly& q, std::vector<int> bounds,
                  std::size_t cell_budget = kDefaultCellBudget,
                  FillOrder order = FillOrder::total_degree);

// prod_j [1 - sum of block-j variables] - alpha * x_1 ... x_d.
SparsePoly family_denominator(const FamilySpec& fam);

// The classical five-variable rational function with the same diagonal:
//   (1 - x1) [ (1 - x2)(1 - x3)(1 - x4)(1 - x5) - x1 x2 x3 ].
SparsePoly apery_denominator5();

// 1 - (x_1 + ... + x_d) + b * x_1 ... x_d.
SparsePoly scan_denominator(int d, const Integer& b);

}  // namespace apery

#endif
