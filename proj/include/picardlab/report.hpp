#pragma once

#include <string>
#include <vector>

namespace picardlab {

enum class CheckStatus { Pass, Fail, Error };

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string counterexample;  // empty on pass
};

struct Report {
  std::vector<CheckRecord> records;

  bool all_pass() const {
    for (const auto& r : records)
      if (r.status != CheckStatus::Pass) return false;
    return true;
  }
  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void extend(const std::vector<CheckRecord>& rs) {
    records.insert(records.end(), rs.begin(), rs.end());
  }
};

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "error";
  }
}

}  // namespace picardlab
