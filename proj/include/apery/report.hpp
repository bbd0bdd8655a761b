#ifndef APERY_REPORT_HPP
#define APERY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apery/integer.hpp"

#include <json.hpp>

namespace apery {

enum class ClaimClass { theorem, conjecture_support };

std::string to_string(ClaimClass c);

// One verified congruence instance. holds is true exactly when modulus
// divides lhs - rhs; modulus 0 encodes an exact-equality claim (0 divides
// only 0). defect is the p-adic valuation of lhs - rhs at the cell's prime,
// infinite when the sides are equal.
struct CongruenceCell {
  std::string claim;
  nlohmann::ordered_json params;
  Integer lhs;
  Integer rhs;
  Integer modulus;
  bool holds = false;
  Valuation defect = Valuation::infinite();

  nlohmann::ordered_json to_json() const;
};

// Builds a cell, deriving holds and the defect valuation. prime may be 0 for
// exact-equality claims without p-adic structure (defect then reports 0 for
// unequal sides).
CongruenceCell make_cell(std::string claim, nlohmann::ordered_json params,
                         Integer lhs, Integer rhs, Integer modulus,
                         const Integer& prime);

struct CongruenceReport {
  std::string claim;
  ClaimClass claim_class = ClaimClass::theorem;
  std::string grid;
  std::vector<CongruenceCell> cells;

  std::size_t tested() const { return cells.size(); }
  std::size_t failed() const;
  std::optional<std::size_t> first_failure() const;
  bool all_hold() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace apery

#endif
