#pragma once

// Machine-readable run reports: line-delimited JSON records plus a columnar
// CSV summary. Byte-identical for identical configs: no timestamps, ordered
// keys, fixed float formatting.

#include <string>
#include <vector>

#include <json.hpp>

namespace coverdet {

struct CheckRecord {
  std::string id;
  std::string status;  // pass | fail | pending
  std::string value;   // printable exact value or formatted float
  bool has_numeric = false;
  double numeric = 0.0;
  bool has_error = false;
  double error_bound = 0.0;
  std::string note;
};

struct RunReport {
  std::string tool;
  nlohmann::ordered_json config_echo;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  int exit_code() const;  // 0 all pass (pending allowed), 1 any fail

  nlohmann::ordered_json to_json() const;
  std::string to_jsonl() const;
  std::string to_csv() const;

  static RunReport from_jsonl(const std::string& text);
};

std::string format_double(double v);

}  // namespace coverdet
