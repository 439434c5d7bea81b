#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fcy {

// One verification case: pass means expected == got, exactly.  Values are
// JSON with exact scalars rendered as strings; there are no tolerances
// anywhere.
struct CaseResult {
  std::string id;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;
  double wall_ms = 0.0;

  size_t passed() const;
  size_t failed() const;
  bool all_pass() const { return failed() == 0; }

  // wall_ms is excluded from the determinism contract; drop it to compare
  // reports byte for byte
  nlohmann::json to_json(bool include_wall = true) const;
  std::string to_csv() const;
};

// format is "json" or "csv"
std::string export_report(const Report& r, const std::string& format);

}  // namespace fcy
