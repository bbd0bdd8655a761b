#include "apery/report.hpp"

#include <sstream>

namespace apery {

std::string to_string(ClaimClass c) {
  return c == ClaimClass::theorem ? "theorem" : "conjecture-support";
}

nlohmann::ordered_json CongruenceCell::to_json() const {
  nlohmann::ordered_json j;
  j["params"] = params;
  j["lhs"] = lhs.get_str();
  j["rhs"] = rhs.get_str();
  j["modulus"] = modulus.get_str();
  j["holds"] = holds;
  if (defect.is_infinite())
    j["defect_valuation"] = "inf";
  else
    j["defect_valuation"] = defect.value();
  return j;
}

CongruenceCell make_cell(std::string claim, nlohmann::ordered_json params,
                         Integer lhs, Integer rhs, Integer modulus,
                         const Integer& prime) {
  CongruenceCell cell;
  cell.claim = std::move(claim);
  cell.params = std::move(params);
  Integer diff = lhs - rhs;
  cell.holds = mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
  if (diff == 0)
    cell.defect = Valuation::infinite();
  else if (prime > 1)
    cell.defect = padic_valuation(diff, prime);
  else
    cell.defect = Valuation::finite(0);
  cell.lhs = std::move(lhs);
  cell.rhs = std::move(rhs);
  cell.modulus = std::move(modulus);
  return cell;
}

std::size_t CongruenceReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : cells)
    if (!c.holds) ++n;
  return n;
}

std::optional<std::size_t> CongruenceReport::first_failure() const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!cells[i].holds) return i;
  return std::nullopt;
}

nlohmann::ordered_json CongruenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["class"] = to_string(claim_class);
  j["grid"] = grid;
  nlohmann::ordered_json summary;
  summary["tested"] = tested();
  summary["failed"] = failed();
  if (auto ff = first_failure())
    summary["first_failure"] = *ff;
  else
    summary["first_failure"] = nullptr;
  j["summary"] = std::move(summary);
  nlohmann::ordered_json cell_array = nlohmann::ordered_json::array();
  for (const auto& c : cells) cell_array.push_back(c.to_json());
  j["cells"] = std::move(cell_array);
  return j;
}

namespace {

// Renders params as semicolon-joined key=value pairs; list values join with
// spaces so fields stay comma-free.
std::string params_compact(const nlohmann::ordered_json& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : params.items()) {
    if (!first) out << ';';
    first = false;
    out << key << '=';
    if (value.is_array()) {
      bool inner_first = true;
      for (const auto& v : value) {
        if (!inner_first) out << ' ';
        inner_first = false;
        out << v.dump();
      }
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
  }
  return out.str();
}

}  // namespace

std::string CongruenceReport::to_csv() const {
  std::ostringstream out;
  out << "claim,class,params,lhs,rhs,modulus,holds,defect_valuation\n";
  for (const auto& c : cells) {
    out << claim << ',' << to_string(claim_class) << ','
        << params_compact(c.params) << ',' << c.lhs.get_str() << ','
        << c.rhs.get_str() << ',' << c.modulus.get_str() << ','
        << (c.holds ? "true" : "false") << ',' << c.defect.to_string() << '\n';
  }
  return out.str();
}

std::string CongruenceReport::to_text() const {
  std::ostringstream out;
  out << "claim: " << claim << " [" << to_string(claim_class) << "]\n"
      << "grid: " << grid << "\n"
      << "tested: " << tested() << "  failed: " << failed() << "\n";
  for (const auto& c : cells) {
    if (c.holds) continue;
    out << "  FAIL " << params_compact(c.params) << "  lhs=" << c.lhs.get_str()
        << " rhs=" << c.rhs.get_str() << " modulus=" << c.modulus.get_str()
        << " defect=" << c.defect.to_string() << "\n";
  }
  return out.str();
}

}  // namespace apery
