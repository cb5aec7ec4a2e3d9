#include "coverdet/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coverdet/series.hpp"

namespace coverdet::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 6-point Gauss-Legendre on [0,1]
const double kNodes[6] = {0.03376524289842399, 0.16939530676686776, 0.38069040695840155,
                          0.61930959304159845, 0.83060469323313224, 0.96623475710157601};
const double kWeights[6] = {0.08566224618958517, 0.18038078652406930, 0.23395696728634552,
                            0.23395696728634552, 0.18038078652406930, 0.08566224618958517};

struct Cell {
  double r0, r1, p0, p1;
};

}  // namespace

FSSection FSSection::from_poly(int m, const RatPoly& p) {
  FSSection s;
  s.m = m;
  if (p.degree() > m) throw std::invalid_argument("section degree exceeds twist");
  for (int i = 0; i <= p.degree(); ++i) s.coeffs.push_back({to_double(p.coeff(i)), 0.0});
  return s;
}

std::complex<double> FSSection::eval(std::complex<double> z) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

FSSection FSSection::chart_swap() const {
  FSSection s;
  s.m = m;
  s.coeffs.assign(m + 1, {0.0, 0.0});
  for (size_t i = 0; i < coeffs.size(); ++i) s.coeffs[m - i] = coeffs[i];
  while (!s.coeffs.empty() && std::abs(s.coeffs.back()) == 0.0) s.coeffs.pop_back();
  return s;
}

bool FSSection::is_zero_poly() const {
  for (const auto& c : coeffs)
    if (std::abs(c) != 0.0) return false;
  return true;
}

namespace {

// integrand over the unit disk in polar coordinates, including the jacobian:
// f(r, phi) = [log|q|^2 - m log(1+r^2) + log_scale] * (2 r / (1+r^2)^2)
// against dr dphi / (2 pi); the angular mass integrates to one.
struct DiskIntegrand {
  const FSSection* q;
  double log_scale;

  double operator()(double r, double phi) const {
    std::complex<double> z = std::polar(r, phi);
    double a2 = std::norm(q->eval(z));
    if (a2 < 1e-300) a2 = 1e-300;  // integrable singularity, clamp at the node
    double lg = std::log(a2) - q->m * std::log1p(r * r) + log_scale;
    double jac = 2.0 * r / ((1.0 + r * r) * (1.0 + r * r));
    return lg * jac / (2.0 * kPi);
  }
};

struct MassIntegrand {
  double operator()(double r, double phi) const {
    (void)phi;
    double jac = 2.0 * r / ((1.0 + r * r) * (1.0 + r * r));
    return jac / (2.0 * kPi);
  }
};

template <class F>
double gauss_cell(const F& f, const Cell& c) {
  double dr = c.r1 - c.r0, dp = c.p1 - c.p0;
  double acc = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) acc += kWeights[i] * kWeights[j] * f(c.r0 + kNodes[i] * dr, c.p0 + kNodes[j] * dp);
  return acc * dr * dp;
}

// adaptive quad-tree with a depth cap; deterministic recursion order gives a
// fixed summation tree
template <class F>
double integrate_capped(const F& f, const Cell& c, double tol, int depth, int cap) {
  double coarse = gauss_cell(f, c);
  double rm = 0.5 * (c.r0 + c.r1), pm = 0.5 * (c.p0 + c.p1);
  Cell sub[4] = {{c.r0, rm, c.p0, pm}, {c.r0, rm, pm, c.p1}, {rm, c.r1, c.p0, pm}, {rm, c.r1, pm, c.p1}};
  double fine = 0.0;
  for (const auto& s : sub) fine += gauss_cell(f, s);
  if (depth >= cap) return fine;
  if (std::abs(fine - coarse) <= tol * (c.r1 - c.r0) * (c.p1 - c.p0)) return fine;
  double acc = 0.0;
  for (const auto& s : sub) acc += integrate_capped(f, s, tol, depth + 1, cap);
  return acc;
}

template <class F>
QuadratureResult run_levels(const F& f, const QuadratureOptions& opt) {
  QuadratureResult res;
  Cell disk{0.0, 1.0, 0.0, 2.0 * kPi};
  double prev = 0.0;
  for (int cap = 1; cap <= opt.max_levels; ++cap) {
    double v = integrate_capped(f, disk, opt.abs_tol, 0, cap);
    res.level_values.push_back(v);
    if (cap > 1) res.level_errors.push_back(std::abs(v - prev));
    prev = v;
    res.refinement_levels = cap;
    if (cap >= opt.min_levels && res.level_errors.size() >= 2) {
      double last = res.level_errors.back();
      if (last <= opt.abs_tol) {
        res.converged = true;
        break;
      }
    }
  }
  res.value = res.level_values.back();
  res.error_estimate = res.level_errors.empty() ? 0.0 : std::max(res.level_errors.back(), 1e-16);
  return res;
}

QuadratureResult combine(const QuadratureResult& a, const QuadratureResult& b) {
  QuadratureResult r;
  r.value = a.value + b.value;
  r.error_estimate = a.error_estimate + b.error_estimate;
  r.refinement_levels = std::max(a.refinement_levels, b.refinement_levels);
  r.converged = a.converged && b.converged;
  size_t n = std::min(a.level_errors.size(), b.level_errors.size());
  for (size_t i = 0; i < n; ++i) r.level_errors.push_back(a.level_errors[i] + b.level_errors[i]);
  n = std::min(a.level_values.size(), b.level_values.size());
  for (size_t i = 0; i < n; ++i) r.level_values.push_back(a.level_values[i] + b.level_values[i]);
  return r;
}

}  // namespace

QuadratureResult fs_log_norm_integral(const FSSection& s, const QuadratureOptions& opt, double log_scale) {
  if (s.is_zero_poly()) throw std::invalid_argument("log norm of the zero section");
  if (static_cast<int>(s.coeffs.size()) - 1 > s.m) throw std::invalid_argument("section degree exceeds twist");
  QuadratureOptions half = opt;
  half.abs_tol = opt.abs_tol / 2;
  FSSection swapped = s.chart_swap();
  DiskIntegrand f0{&s, log_scale};
  DiskIntegrand f1{&swapped, log_scale};
  // the two chart integrals each carry half the FS mass
  auto a = run_levels(f0, half);
  auto b = run_levels(f1, half);
  auto r = combine(a, b);
  // log_scale was applied on both charts over total mass one, but each chart
  // covers half the sphere; the decomposition is exact, no correction needed
  return r;
}

QuadratureResult fs_mass(const QuadratureOptions& opt) {
  QuadratureOptions half = opt;
  half.abs_tol = opt.abs_tol / 2;
  MassIntegrand f;
  auto a = run_levels(f, half);
  auto b = run_levels(f, half);
  return combine(a, b);
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
  // Durand-Kerner with deterministic starting values
  std::vector<std::complex<double>> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  std::complex<double> lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<std::complex<double>> r(n);
  std::complex<double> seed(0.4, 0.9);
  r[0] = seed;
  for (int i = 1; i < n; ++i) r[i] = r[i - 1] * seed;
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = n; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  for (int it = 0; it < 200; ++it) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= r[i] - r[j];
      std::complex<double> delta = eval(r[i]) / denom;
      r[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  return r;
}

namespace {

// degree-zero and degree-one coefficients of the curve-base prefactor
// td(TS) td_g(N_{S/V}) td^{-1}([W]) ch(xi) over Q(zeta_d)
std::pair<std::complex<double>, std::complex<double>> prefactor_parts(int g, const CoveringSpec& spec) {
  auto geom = build_geometry<CyclotomicField>(spec);
  const auto& S = geom.S;
  if (S->top_degree != 1) throw std::invalid_argument("log-norm term needs a curve base");
  auto td = todd_of_sum(tangent_lines(S), S);
  // N_{S/V} = L with the weight-g fiber action
  auto tdg_series = equivariant_todd_line(g % spec.d, spec.d, S->top_degree);
  auto tdg = apply_genus_line(GenusSpec<CyclotomicField>{GenusKind::Multiplicative, tdg_series}, geom.c1L);
  auto tdinv = apply_genus_line(
      GenusSpec<CyclotomicField>{GenusKind::Multiplicative, todd_inverse_series<CyclotomicField>(S->top_degree)},
      geom.c1L * CyclotomicField(spec.d));
  auto ch_xi = ch_of_sum(xi_lines(geom, spec), S);
  auto pref = td * tdg * tdinv * ch_xi;
  Monomial unit(S->gens.size(), 0), point(S->gens.size(), 0);
  point[0] = 1;
  return {pref.coeff(unit).to_complex(), pref.coeff(point).to_complex()};
}

}  // namespace

LogTermResult theorem41_log_term(int g, const CoveringSpec& spec, double metric_scale, const QuadratureOptions& opt) {
  if (!spec.cyclic()) throw std::invalid_argument("log-norm term needs the cyclic case");
  auto [c0, c1] = prefactor_parts(g, spec);
  FSSection s = FSSection::from_poly(spec.d * spec.k, spec.alpha_d());
  LogTermResult out;
  out.prefactor_deg0 = c0;
  out.prefactor_mass = c1;
  out.quad = fs_log_norm_integral(s, opt, std::log(metric_scale));
  out.value = c1 * out.quad.value;
  out.error = std::abs(c1) * out.quad.error_estimate;
  return out;
}

IsometryFit isometry_constant_fit(const CoveringSpec& spec) {
  if (!spec.cyclic()) throw std::invalid_argument("isometry fit needs the cyclic case");
  IsometryFit fit;
  FSSection s = FSSection::from_poly(spec.d * spec.k, spec.alpha_d());
  auto roots = polynomial_roots(s.coeffs);
  int dk = spec.d * spec.k;
  // the derivative of alpha_d trivializes N_{W/V} = [W] over each branch
  // point; compare the transported tangent norm with the FS norm of [dS]
  auto ratio_at = [&](const FSSection& sec, std::complex<double> p) {
    std::vector<std::complex<double>> dc;
    for (size_t i = 1; i < sec.coeffs.size(); ++i) dc.push_back(sec.coeffs[i] * static_cast<double>(i));
    std::complex<double> dv(0.0, 0.0);
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) dv = dv * p + *it;
    double t = std::norm(dv) / std::pow(1.0 + std::norm(p), dk - 2);
    return std::log(t);
  };
  FSSection swapped = s.chart_swap();
  for (auto p : roots) {
    if (std::abs(p) <= 1.0)
      fit.log_ratio.push_back(ratio_at(s, p));
    else
      fit.log_ratio.push_back(ratio_at(swapped, 1.0 / p));
    fit.points.push_back(p);
  }
  if (static_cast<int>(roots.size()) < dk) {
    // branch point at infinity (deg alpha_d = dk - 1): use the swapped chart at 0
    fit.points.push_back({std::numeric_limits<double>::infinity(), 0.0});
    fit.log_ratio.push_back(ratio_at(swapped, {0.0, 0.0}));
  }
  double mean = 0.0;
  for (double v : fit.log_ratio) mean += v;
  if (!fit.log_ratio.empty()) mean /= static_cast<double>(fit.log_ratio.size());
  fit.constant_fit = mean;
  for (double v : fit.log_ratio) fit.max_discrepancy = std::max(fit.max_discrepancy, std::abs(v - mean));
  return fit;
}

ProbeReport metric_rescale_probe(int g, const CoveringSpec& spec, const std::vector<double>& scales,
                                 const QuadratureOptions& opt) {
  ProbeReport rep;
  auto base = theorem41_log_term(g, spec, 1.0, opt);
  for (double c : scales) {
    auto scaled = theorem41_log_term(g, spec, c, opt);
    double measured = (scaled.value - base.value).real();
    double predicted = (base.prefactor_mass * std::log(c)).real();
    double residual = std::abs(measured - predicted);
    double bound = scaled.error + base.error + 1e-12;
    rep.scales.push_back({c, measured, predicted, residual, bound, residual <= bound});
  }
  return rep;
}

}  // namespace coverdet::quadrature
