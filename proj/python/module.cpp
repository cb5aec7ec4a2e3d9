// Python bindings for the main operations: Euler characteristics of the
// branched cover, smoothness checks, torsion identities, Lefschetz
// consistency, R-genus coefficients, log-norm quadrature and the full
// check-suite / theorem-ledger drivers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coverdet/cech.hpp"
#include "coverdet/equivariant.hpp"
#include "coverdet/quadrature.hpp"
#include "coverdet/smoothness.hpp"
#include "coverdet/suite.hpp"
#include "coverdet/zeta.hpp"

namespace py = pybind11;
using namespace coverdet;

namespace {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

CoveringSpec spec_from(int d, int k, const std::vector<int>& xi,
                       const std::vector<std::vector<std::string>>& alpha) {
  CoveringSpec s;
  s.d = d;
  s.k = k;
  s.xi = xi.empty() ? std::vector<int>{0} : xi;
  if (!alpha.empty()) {
    s.has_sections = true;
    for (const auto& ai : alpha) {
      std::vector<Rational> cs;
      for (const auto& c : ai) cs.push_back(rational_from_string(c));
      s.alpha.push_back(RatPoly(std::move(cs)));
    }
  }
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_coverdet, m) {
  m.doc() = "determinant-line and characteristic-class checks for branched coverings of line bundles";

  m.def("bernoulli", [](int n) { return to_string(bernoulli(n)); }, py::arg("n"));
  m.def("zeta_negative", [](int n) { return to_string(zeta_negative(n)); }, py::arg("n"));
  m.def(
      "zeta_prime_negative",
      [](int n) {
        auto v = zeta_prime_negative(n);
        return py::make_tuple(v.value, v.error);
      },
      py::arg("n"));
  m.def(
      "r_coefficients",
      [](int max_order) {
        std::vector<std::tuple<int, double, double>> out;
        for (const auto& e : r_coefficient_table(max_order).entries)
          out.emplace_back(e.n, e.coefficient, e.error_bound);
        return out;
      },
      py::arg("max_order"));

  m.def(
      "chi_cover",
      [](int d, int k, const std::vector<int>& xi) {
        auto spec = spec_from(d, k, xi, {});
        auto g = build_geometry<Rational>(spec);
        Rational a = euler_char_W(g, spec);
        Rational b = euler_char_W_direct_sum(g, spec);
        return py::make_tuple(to_string(a), to_string(b));
      },
      py::arg("d"), py::arg("k"), py::arg("xi") = std::vector<int>{0},
      "chi(W, xi') by the pushforward route and by the direct-image sum");
  m.def(
      "riemann_hurwitz_genus", [](int d, int k) { return riemann_hurwitz_genus(spec_from(d, k, {0}, {})); },
      py::arg("d"), py::arg("k"));

  m.def(
      "check_smoothness",
      [](int d, int k, const std::vector<std::vector<std::string>>& alpha) {
        auto r = check_smoothness(spec_from(d, k, {0}, alpha));
        return py::make_tuple(r.smooth, r.witness);
      },
      py::arg("d"), py::arg("k"), py::arg("alpha"),
      "alpha is a list of d coefficient lists (rational strings), alpha[i] for alpha_{i+1}");

  m.def(
      "delta_matrix",
      [](int d, int k, const std::vector<std::vector<std::string>>& alpha) {
        auto a = cech::delta_matrix_inverse(spec_from(d, k, {0}, alpha));
        std::vector<std::vector<std::string>> out;
        for (const auto& row : a) {
          std::vector<std::string> r;
          for (const auto& p : row) r.push_back(p.str("z"));
          out.push_back(std::move(r));
        }
        return out;
      },
      py::arg("d"), py::arg("k"), py::arg("alpha") = std::vector<std::vector<std::string>>{});

  m.def(
      "section_identities",
      [](int d, int k, const std::vector<std::vector<std::string>>& alpha) {
        auto rep = cech::verify_section_identities(spec_from(d, k, {0}, alpha));
        py::dict values, identities;
        for (const auto& v : rep.values) values[py::str(v.name)] = to_string(v.value);
        for (const auto& c : rep.identities) identities[py::str(c.name)] = c.pass;
        return py::make_tuple(rep.all_pass(), values, identities);
      },
      py::arg("d"), py::arg("k"), py::arg("alpha") = std::vector<std::vector<std::string>>{});

  m.def(
      "lefschetz_consistent",
      [](int d, int k) {
        for (const auto& c : equivariant::lefschetz_consistency(spec_from(d, k, {0}, {})))
          if (!c.agree) return false;
        return true;
      },
      py::arg("d"), py::arg("k"));

  m.def(
      "fs_log_norm_integral",
      [](int m, const std::vector<std::complex<double>>& coeffs, double tol) {
        quadrature::FSSection s;
        s.m = m;
        s.coeffs = coeffs;
        quadrature::QuadratureOptions opt;
        opt.abs_tol = tol;
        auto r = quadrature::fs_log_norm_integral(s, opt);
        return py::make_tuple(r.value, r.error_estimate, r.converged);
      },
      py::arg("m"), py::arg("coeffs"), py::arg("tol") = 1e-8);

  m.def(
      "metric_rescale_probe",
      [](int g, int d, int k, const std::vector<std::vector<std::string>>& alpha, const std::vector<double>& scales) {
        auto rep = quadrature::metric_rescale_probe(g, spec_from(d, k, {0}, alpha), scales);
        std::vector<std::tuple<double, double, double, bool>> out;
        for (const auto& s : rep.scales) out.emplace_back(s.scale, s.residual, s.bound, s.pass);
        return out;
      },
      py::arg("g"), py::arg("d"), py::arg("k"), py::arg("alpha"), py::arg("scales"),
      "constant-rescale response of the log-norm term against the transgression prediction");

  m.def(
      "run_check_suite",
      [](const std::string& config_json) {
        auto cfg = ExperimentConfig::from_json(nlohmann::ordered_json::parse(config_json));
        auto rep = run_check_suite(cfg);
        return py::make_tuple(rep.exit_code(), rep.to_jsonl());
      },
      py::arg("config_json"));
  m.def(
      "compute_theorem",
      [](const std::string& config_json, const std::string& which) {
        auto cfg = ExperimentConfig::from_json(nlohmann::ordered_json::parse(config_json));
        return compute_theorem(cfg, which).to_jsonl();
      },
      py::arg("config_json"), py::arg("which"));
}
