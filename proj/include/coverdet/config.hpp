#pragma once

// Declarative experiment configuration with a versioned schema. All defaults
// are materialized into the echoed config so reports are self-describing.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coverdet/covering.hpp"

namespace coverdet {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExperimentConfig {
  std::string base = "cp1";  // cp1 | cpn:<n> | curve:<g>
  int k = 1;
  int d = 2;
  // alpha: "cyclic:<c0,c1,...>" (coefficients of alpha_d) or explicit lists
  std::string alpha_mode = "cyclic";
  std::vector<std::vector<Rational>> alpha_coeffs;  // one list per alpha_i when explicit
  std::vector<Rational> alpha_d_coeffs;             // cyclic mode
  bool has_alpha = false;
  std::vector<int> xi{0};
  int group_element = 1;
  int series_order = 8;
  double quad_tol = 1e-8;
  int quad_max_levels = 12;
  std::string out;
  std::string format = "json";

  CoveringSpec covering_spec() const;
  nlohmann::ordered_json echo() const;

  static ExperimentConfig from_json(const nlohmann::ordered_json& j);
  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig defaults() { return ExperimentConfig{}; }
};

Rational parse_rational(const nlohmann::ordered_json& j);

}  // namespace coverdet
