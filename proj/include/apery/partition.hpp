#ifndef APERY_PARTITION_HPP
#define APERY_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apery/integer.hpp"

namespace apery {

// Multi-index argument to the multivariate coefficient functions.
using MultiIndex = std::vector<std::int64_t>;

// Composition (lambda_1, ..., lambda_l) of positive parts, grouping the d
// variables into l blocks; s(j) = lambda_1 + ... + lambda_{j-1}.
class Partition {
public:
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Parses a comma list such as "2,2".
  static Partition parse(std::string_view csv);

  int block_count() const { return static_cast<int>(parts_.size()); }
  int dimension() const { return dimension_; }
  int part(int j) const { return parts_[static_cast<std::size_t>(j)]; }
  int offset(int j) const { return offsets_[static_cast<std::size_t>(j)]; }
  int max_part() const { return max_part_; }
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int dimension_ = 0;
  int max_part_ = 0;
};

// A member of the coefficient family: partition lambda plus the integer
// parameter alpha of the rational function's product term.
struct FamilySpec {
  Partition lambda;
  std::int64_t alpha = 1;
};

// The named specializations studied in the source material.
//   apery-A (2,2;1)   apery-B (2,1;1)    sequence-C (3,1;1)
//   franel (1,1,1;1)  yang-zudilin (1,1,1,1;1)
//   delannoy (2;1)    askey-gasper (3;-4) almkvist-zudilin (4;-27)
std::optional<FamilySpec> named_family(std::string_view tag);
const std::vector<std::string>& named_family_tags();

// Comma-separated signed integers, e.g. "1,-2,3".
MultiIndex parse_multi_index(std::string_view csv);

}  // namespace apery

#endif
