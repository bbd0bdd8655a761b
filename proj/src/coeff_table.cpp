#include "apery/coeff_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apery {

CoeffTable::CoeffTable(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw std::invalid_argument("table needs dimension >= 1");
  std::size_t total = 1;
  strides_.assign(bounds_.size(), 0);
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    if (bounds_[i] < 0) throw std::invalid_argument("negative degree bound");
    strides_[i] = total;
    total *= static_cast<std::size_t>(bounds_[i]) + 1;
  }
  cells_.assign(total, Integer(0));
}

namespace {
template <typename T>
std::size_t flat_index(const std::vector<int>& bounds,
                       const std::vector<std::size_t>& strides,
                       std::span<const T> n) {
  if (n.size() != bounds.size())
    throw std::invalid_argument("index length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0 || static_cast<std::int64_t>(n[i]) > bounds[i])
      throw std::out_of_range("index outside table bounds");
    idx += static_cast<std::size_t>(n[i]) * strides[i];
  }
  return idx;
}
}  // namespace

const Integer& CoeffTable::at(std::span<const int> n) const {
  return cells_[flat_index<int>(bounds_, strides_, n)];
}

const Integer& CoeffTable::at(std::span<const std::int64_t> n) const {
  return cells_[flat_index<std::int64_t>(bounds_, strides_, n)];
}

const Integer& CoeffTable::at(std::initializer_list<int> n) const {
  return at(std::span<const int>(n.begin(), n.size()));
}

Integer& CoeffTable::at_mutable(std::span<const int> n) {
  return cells_[flat_index<int>(bounds_, strides_, n)];
}

std::vector<Integer> CoeffTable::diagonal() const {
  int max_i = *std::min_element(bounds_.begin(), bounds_.end());
  std::vector<Integer> diag;
  diag.reserve(static_cast<std::size_t>(max_i) + 1);
  std::vector<int> n(bounds_.size(), 0);
  for (int i = 0; i <= max_i; ++i) {
    std::fill(n.begin(), n.end(), i);
    diag.push_back(at(n));
  }
  return diag;
}

nlohmann::ordered_json CoeffTable::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = dim();
  j["bounds"] = bounds_;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::vector<int> n(bounds_.size(), 0);
  for (std::size_t flat = 0; flat < cells_.size(); ++flat) {
    nlohmann::ordered_json entry;
    entry["n"] = n;
    entry["c"] = cells_[flat].get_str();
    entries.push_back(std::move(entry));
    for (std::size_t i = n.size(); i-- > 0;) {
      if (++n[i] <= bounds_[i]) break;
      n[i] = 0;
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

CoeffTable CoeffTable::from_json(const nlohmann::ordered_json& j) {
  CoeffTable t(j.at("bounds").get<std::vector<int>>());
  if (j.at("d").get<int>() != t.dim())
    throw std::invalid_argument("dimension field disagrees with bounds");
  for (const auto& entry : j.at("entries")) {
    auto n = entry.at("n").get<std::vector<int>>();
    t.at_mutable(n) = Integer(entry.at("c").get<std::string>());
  }
  return t;
}

namespace {

// Enumerates all cells with the given total degree inside the bounds box.
template <typename Fn>
void for_each_with_total(const std::vector<int>& bounds, int total, Fn&& fn) {
  std::vector<int> n(bounds.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == n.size()) {
      if (remaining <= bounds[i]) {
        n[i] = remaining;
        fn(n);
      }
      return;
    }
    int hi = std::min(remaining, bounds[i]);
    for (int v = 0; v <= hi; ++v) {
      n[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

CoeffTable expand(const SparsePoly& q, std::vector<int> bounds,
                  std::size_t cell_budget, FillOrder order) {
  if (q.dim() != static_cast<int>(bounds.size()))
    throw std::invalid_argument("bounds length does not match dimension");
  if (q.has_negative_exponent())
    throw arithmetic_error("expand requires a polynomial denominator");
  if (q.constant_term() != 1) throw arithmetic_error("constant term not 1");

  std::size_t cells = 1;
  for (int b : bounds) {
    std::size_t next = cells * (static_cast<std::size_t>(b) + 1);
    if (b >= 0 && next / (static_cast<std::size_t>(b) + 1) != cells)
      throw table_too_large_error(SIZE_MAX, cell_budget);
    cells = next;
  }
  if (cells > cell_budget) throw table_too_large_error(cells, cell_budget);

  CoeffTable table(bounds);

  std::vector<int> shifted(bounds.size());
  auto fill_cell = [&](const std::vector<int>& n) {
    bool origin = std::all_of(n.begin(), n.end(), [](int x) { return x == 0; });
    Integer acc = origin ? Integer(1) : Integer(0);
    for (const auto& [m, qc] : q.terms()) {
      bool inside = true;
      bool nonzero_m = false;
      for (std::size_t i = 0; i < n.size(); ++i) {
        shifted[i] = n[i] - m[i];
        if (m[i] != 0) nonzero_m = true;
        if (shifted[i] < 0) {
          inside = false;
          break;
        }
      }
      if (!inside || !nonzero_m) continue;
      acc -= qc * table.at(shifted);
    }
    table.at_mutable(n) = std::move(acc);
  };

  if (order == FillOrder::total_degree) {
    int max_total = std::accumulate(bounds.begin(), bounds.end(), 0);
    for (int t = 0; t <= max_total; ++t)
      for_each_with_total(bounds, t, fill_cell);
  } else {
    // Row-major order also respects the dependency n - m < n (componentwise).
    std::vector<int> n(bounds.size(), 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
      fill_cell(n);
      for (std::size_t i = n.size(); i-- > 0;) {
        if (++n[i] <= bounds[i]) break;
        n[i] = 0;
      }
    }
  }
  return table;
}

SparsePoly family_denominator(const FamilySpec& fam) {
  const int d = fam.lambda.dimension();
  SparsePoly q = SparsePoly::constant(d, 1);
  for (int j = 0; j < fam.lambda.block_count(); ++j) {
    SparsePoly factor = SparsePoly::constant(d, 1);
    for (int r = 0; r < fam.lambda.part(j); ++r) {
      std::vector<int> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(fam.lambda.offset(j) + r)] = 1;
      factor.add_term(e, -1);
    }
    q = q * factor;
  }
  std::vector<int> top(static_cast<std::size_t>(d), 1);
  q.add_term(top, Integer(-fam.alpha));
  return q;
}

SparsePoly apery_denominator5() {
  SparsePoly inner = SparsePoly::constant(5, 1);
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> e(5, 0);
    e[static_cast<std::size_t>(i)] = 1;
    SparsePoly factor = SparsePoly::constant(5, 1);
    factor.add_term(e, -1);
    inner = inner * factor;
  }
  inner.add_term({1, 1, 1, 0, 0}, -1);
  SparsePoly front = SparsePoly::constant(5, 1);
  front.add_term({1, 0, 0, 0, 0}, -1);
  return front * inner;
}

SparsePoly scan_denominator(int d, const Integer& b) {
  SparsePoly q = SparsePoly::constant(d, 1);
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    q.add_term(e, -1);
  }
  q.add_term(std::vector<int>(static_cast<std::size_t>(d), 1), b);
  return q;
}

}  // namespace apery
