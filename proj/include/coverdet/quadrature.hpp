#pragma once

// Log-norm integrals over P^1 with the Fubini-Study metric, normalized to
// unit mass. The analytic content of the curve-base comparison terms is
// int log ||s||^2 w_FS for a section s of O(m) with squared norm
// |p(z)|^2 / (1+|z|^2)^m; quadrature is chart-split and adaptive with
// refinement driven toward the zeros of p.

#include <complex>
#include <string>
#include <vector>

#include "coverdet/covering.hpp"
#include "coverdet/cyclotomic.hpp"

namespace coverdet::quadrature {

struct FSSection {
  int m = 0;                                 // twist degree
  std::vector<std::complex<double>> coeffs;  // deg <= m

  static FSSection from_poly(int m, const RatPoly& p);
  std::complex<double> eval(std::complex<double> z) const;
  FSSection chart_swap() const;  // w^m p(1/w)
  bool is_zero_poly() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int refinement_levels = 0;
  bool converged = false;
  std::vector<double> level_values;  // value at each refinement cap
  std::vector<double> level_errors;  // successive differences
};

struct QuadratureOptions {
  double abs_tol = 1e-8;
  int min_levels = 4;
  int max_levels = 12;
};

// integral of log||s||^2 against the mass-one Fubini-Study form; also used
// with a constant metric rescale: log(c ||s||^2)
QuadratureResult fs_log_norm_integral(const FSSection& s, const QuadratureOptions& opt = {}, double log_scale = 0.0);

// quadrature of the constant 1 against w_FS (mass check, shares the code path)
QuadratureResult fs_mass(const QuadratureOptions& opt = {});

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

struct LogTermResult {
  std::complex<double> prefactor_deg0;  // scalar part (cyclotomic evaluated)
  std::complex<double> prefactor_mass;  // coefficient pairing the log integral
  QuadratureResult quad;
  std::complex<double> value;  // prefactor_mass * (integral + log metric scale)
  double error = 0.0;
};

// first term of the equivariant comparison formula on a curve base:
// int_S td(TS) td_g(N_{S/V}) td^{-1}([W], h^{[dS]}) ch(xi) log||alpha_d||^2;
// only total-degree-two products integrate, so the value is the degree-one
// prefactor coefficient times the log-norm integral
LogTermResult theorem41_log_term(int g, const CoveringSpec& spec, double metric_scale = 1.0,
                                 const QuadratureOptions& opt = {});

struct IsometryFit {
  std::vector<std::complex<double>> points;  // branch points (Sigma)
  std::vector<double> log_ratio;             // log of required metric ratio at each point
  double constant_fit = 0.0;                 // mean of log_ratio (constant rescale proxy)
  double max_discrepancy = 0.0;              // spread around the constant fit
};

// pointwise ratio between the isometry-normalized metric on N_{W/V} = [W]
// and the Fubini-Study metric on [dS], over the branch locus
IsometryFit isometry_constant_fit(const CoveringSpec& spec);

struct ProbeScale {
  double scale;
  double measured;
  double predicted;
  double residual;
  double bound;
  bool pass;
};

struct ProbeReport {
  std::vector<ProbeScale> scales;
  bool all_pass() const {
    for (const auto& s : scales)
      if (!s.pass) return false;
    return true;
  }
};

// metric-independence probe: under a constant rescale of h^{[dS]} the
// measured change of the log-norm term must equal the transgression
// prediction log(c) times the prefactor mass, within quadrature error
ProbeReport metric_rescale_probe(int g, const CoveringSpec& spec, const std::vector<double>& scales,
                                 const QuadratureOptions& opt = {});

}  // namespace coverdet::quadrature
