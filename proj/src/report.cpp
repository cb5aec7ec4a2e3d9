#include "coverdet/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace coverdet {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

int RunReport::exit_code() const { return all_pass() ? 0 : 1; }

namespace {

nlohmann::ordered_json record_json(const CheckRecord& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["status"] = c.status;
  j["value"] = c.value;
  if (c.has_numeric) j["numeric"] = format_double(c.numeric);
  if (c.has_error) j["error_bound"] = format_double(c.error_bound);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

CheckRecord record_from_json(const nlohmann::ordered_json& j) {
  CheckRecord c;
  c.id = j.at("id").get<std::string>();
  c.status = j.at("status").get<std::string>();
  c.value = j.at("value").get<std::string>();
  if (j.contains("numeric")) {
    c.has_numeric = true;
    c.numeric = std::stod(j.at("numeric").get<std::string>());
  }
  if (j.contains("error_bound")) {
    c.has_error = true;
    c.error_bound = std::stod(j.at("error_bound").get<std::string>());
  }
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

}  // namespace

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "coverdet/report/v1";
  j["tool"] = tool;
  j["environment"] = {{"version", "0.1.0"}, {"scalars", "exact rational / Q(zeta_d)"}, {"float", "ieee-double"}};
  j["config"] = config_echo;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back(record_json(c));
  return j;
}

std::string RunReport::to_jsonl() const {
  std::ostringstream out;
  nlohmann::ordered_json head;
  head["schema"] = "coverdet/report/v1";
  head["tool"] = tool;
  head["environment"] = {{"version", "0.1.0"}, {"scalars", "exact rational / Q(zeta_d)"}, {"float", "ieee-double"}};
  head["config"] = config_echo;
  out << head.dump() << "\n";
  for (const auto& c : checks) out << record_json(c).dump() << "\n";
  return out.str();
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  out << "id,status,value,numeric,error_bound,note\n";
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
      if (ch == '"') r += '"';
      r += ch;
    }
    r += '"';
    return r;
  };
  for (const auto& c : checks) {
    out << esc(c.id) << "," << c.status << "," << esc(c.value) << ",";
    if (c.has_numeric) out << format_double(c.numeric);
    out << ",";
    if (c.has_error) out << format_double(c.error_bound);
    out << "," << esc(c.note) << "\n";
  }
  return out.str();
}

RunReport RunReport::from_jsonl(const std::string& text) {
  RunReport rep;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::ordered_json::parse(line);
    if (first) {
      if (j.value("schema", "") != "coverdet/report/v1") throw std::runtime_error("unknown report schema");
      rep.tool = j.value("tool", "");
      if (j.contains("config")) rep.config_echo = j["config"];
      first = false;
      continue;
    }
    rep.checks.push_back(record_from_json(j));
  }
  return rep;
}

}  // namespace coverdet
