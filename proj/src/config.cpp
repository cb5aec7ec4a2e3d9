#include "coverdet/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace coverdet {

Rational parse_rational(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Int(s));
      return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse rational value '" + s + "'");
    }
  }
  throw ConfigError("rational values must be integers or 'p/q' strings");
}

namespace {

std::string rational_str(const Rational& r) { return to_string(r); }

std::string format_double_cfg(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Rational> parse_coeff_list(const nlohmann::ordered_json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field + ": expected an array of coefficients");
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(parse_rational(c));
  return v;
}

}  // namespace

CoveringSpec ExperimentConfig::covering_spec() const {
  CoveringSpec spec;
  auto parse_param = [](const std::string& text, int lo, int hi) {
    try {
      size_t used = 0;
      int v = std::stoi(text, &used);
      if (used != text.size() || v < lo || v > hi) throw std::invalid_argument("range");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("base: cannot parse parameter '" + text + "'");
    }
  };
  if (base == "cp1") {
    spec.base_kind = BaseKind::CP1;
    spec.base_param = 1;
  } else if (base.rfind("cpn:", 0) == 0) {
    spec.base_kind = BaseKind::CPn;
    spec.base_param = parse_param(base.substr(4), 0, 8);
  } else if (base.rfind("curve:", 0) == 0) {
    spec.base_kind = BaseKind::Curve;
    spec.base_param = parse_param(base.substr(6), 0, 64);
  } else {
    throw ConfigError("base: expected cp1, cpn:<n> or curve:<g>");
  }
  spec.k = k;
  spec.d = d;
  spec.xi = xi;
  if (has_alpha) {
    spec.has_sections = true;
    spec.alpha.assign(d, RatPoly());
    if (alpha_mode == "cyclic") {
      spec.alpha[d - 1] = RatPoly(std::vector<Rational>(alpha_d_coeffs));
    } else {
      if (static_cast<int>(alpha_coeffs.size()) != d)
        throw ConfigError("alpha: explicit mode needs d coefficient lists");
      for (int i = 0; i < d; ++i) spec.alpha[i] = RatPoly(std::vector<Rational>(alpha_coeffs[i]));
    }
  }
  try {
    spec.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (spec.has_sections && alpha_mode == "cyclic" && !spec.cyclic())
    throw ConfigError("alpha: cyclic mode forces alpha_1..alpha_{d-1} = 0");
  return spec;
}

nlohmann::ordered_json ExperimentConfig::echo() const {
  nlohmann::ordered_json j;
  j["schema"] = "coverdet/config/v1";
  j["base"] = base;
  j["k"] = k;
  j["d"] = d;
  if (has_alpha) {
    if (alpha_mode == "cyclic") {
      std::string s = "cyclic:";
      for (size_t i = 0; i < alpha_d_coeffs.size(); ++i) {
        if (i) s += ",";
        s += rational_str(alpha_d_coeffs[i]);
      }
      j["alpha"] = s;
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& ai : alpha_coeffs) {
        auto inner = nlohmann::ordered_json::array();
        for (const auto& c : ai) inner.push_back(rational_str(c));
        arr.push_back(inner);
      }
      j["alpha"] = arr;
    }
  } else {
    j["alpha"] = nullptr;
  }
  j["xi"] = xi;
  j["g"] = group_element;
  j["series_order"] = series_order;
  j["quadrature"] = {{"tol", format_double_cfg(quad_tol)}, {"max_levels", quad_max_levels}};
  j["out"] = out;
  j["format"] = format;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::ordered_json& j) {
  ExperimentConfig c;
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (j.contains("schema") && j["schema"] != "coverdet/config/v1")
    throw ConfigError("schema: expected coverdet/config/v1");
  auto get_int = [&](const char* field, int dflt, int lo, int hi) {
    if (!j.contains(field)) return dflt;
    if (!j[field].is_number_integer()) throw ConfigError(std::string(field) + ": expected an integer");
    int v = j[field].get<int>();
    if (v < lo || v > hi) throw ConfigError(std::string(field) + ": out of range");
    return v;
  };
  if (j.contains("base")) {
    if (!j["base"].is_string()) throw ConfigError("base: expected a string");
    c.base = j["base"].get<std::string>();
  }
  c.k = get_int("k", c.k, 1, 64);
  c.d = get_int("d", c.d, 2, 64);
  c.group_element = get_int("g", c.group_element, 0, c.d - 1);
  c.series_order = get_int("series_order", c.series_order, 0, 64);
  if (j.contains("xi")) {
    if (!j["xi"].is_array() || j["xi"].empty()) throw ConfigError("xi: expected a nonempty array of twists");
    c.xi.clear();
    for (const auto& e : j["xi"]) {
      if (!e.is_number_integer()) throw ConfigError("xi: entries must be integers");
      c.xi.push_back(e.get<int>());
    }
  }
  if (j.contains("alpha") && !j["alpha"].is_null()) {
    c.has_alpha = true;
    const auto& a = j["alpha"];
    if (a.is_string()) {
      std::string s = a.get<std::string>();
      if (s.rfind("cyclic:", 0) != 0) throw ConfigError("alpha: string form must be 'cyclic:<coeffs>'");
      c.alpha_mode = "cyclic";
      std::stringstream ss(s.substr(7));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        c.alpha_d_coeffs.push_back(parse_rational(nlohmann::ordered_json(tok)));
      }
      if (c.alpha_d_coeffs.empty()) throw ConfigError("alpha: cyclic form needs coefficients of alpha_d");
    } else if (a.is_array()) {
      c.alpha_mode = "explicit";
      for (const auto& ai : a) c.alpha_coeffs.push_back(parse_coeff_list(ai, "alpha"));
    } else {
      throw ConfigError("alpha: expected 'cyclic:<coeffs>' or an array of coefficient lists");
    }
  }
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    if (q.contains("tol")) {
      if (q["tol"].is_number())
        c.quad_tol = q["tol"].get<double>();
      else if (q["tol"].is_string())
        c.quad_tol = std::stod(q["tol"].get<std::string>());
      else
        throw ConfigError("quadrature.tol: expected a number");
      if (!(c.quad_tol > 0)) throw ConfigError("quadrature.tol: must be positive");
    }
    if (q.contains("max_levels")) c.quad_max_levels = q["max_levels"].get<int>();
  }
  if (j.contains("out")) c.out = j["out"].get<std::string>();
  if (j.contains("format")) {
    c.format = j["format"].get<std::string>();
    if (c.format != "json" && c.format != "csv") throw ConfigError("format: expected json or csv");
  }
  c.covering_spec();  // validate eagerly
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

}  // namespace coverdet
