#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qfrob {

enum class Outcome { PASS, FAIL, SKIP };

const char* to_string(Outcome o);

struct CheckRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Outcome verdict = Outcome::PASS;
  std::string witness;  // empty unless FAIL
  long millis = 0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct ReportMeta {
  std::string campaign;
  std::string type;
  std::vector<int> word;  // 1-based letters
  std::vector<int> l;
  std::vector<std::vector<int>> lambda;
  std::string lambda_source;  // "oracle" or "config"
  std::string note;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct VerdictReport {
  ReportMeta meta;
  std::vector<CheckRecord> checks;

  bool passed() const;
  void zero_timings();
  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

enum class Format { JSON, TEXT };

std::string emit(const VerdictReport& r, Format f);
// Inverse of the json emitter; throws nlohmann::json::exception on bad input.
VerdictReport parse_report(const std::string& json);

}  // namespace qfrob
