#include "apery/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace apery {

namespace {

std::vector<std::int64_t> split_ints(std::string_view csv) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view item = csv.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("cannot parse integer list item '" +
                                  std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("partition needs at least one part");
  offsets_.reserve(parts_.size());
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    offsets_.push_back(dimension_);
    dimension_ += p;
    max_part_ = std::max(max_part_, p);
  }
}

Partition Partition::parse(std::string_view csv) {
  std::vector<int> parts;
  for (std::int64_t v : split_ints(csv)) parts.push_back(static_cast<int>(v));
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

const std::vector<std::pair<std::string, FamilySpec>>& family_table() {
  static const std::vector<std::pair<std::string, FamilySpec>> table = {
      {"apery-A", {Partition({2, 2}), 1}},
      {"apery-B", {Partition({2, 1}), 1}},
      {"sequence-C", {Partition({3, 1}), 1}},
      {"franel", {Partition({1, 1, 1}), 1}},
      {"yang-zudilin", {Partition({1, 1, 1, 1}), 1}},
      {"delannoy", {Partition({2}), 1}},
      {"askey-gasper", {Partition({3}), -4}},
      {"almkvist-zudilin", {Partition({4}), -27}},
  };
  return table;
}

}  // namespace

std::optional<FamilySpec> named_family(std::string_view tag) {
  for (const auto& [name, spec] : family_table())
    if (name == tag) return spec;
  return std::nullopt;
}

const std::vector<std::string>& named_family_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& [name, spec] : family_table()) t.push_back(name);
    return t;
  }();
  return tags;
}

MultiIndex parse_multi_index(std::string_view csv) { return split_ints(csv); }

}  // namespace apery
