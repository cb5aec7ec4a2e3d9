#include "coverdet/equivariant.hpp"

#include <stdexcept>

namespace coverdet::equivariant {

Cyclotomic character_on_Lj(int g, int j, int d) { return Cyclotomic::zeta_power(d, -static_cast<long>(j) * g); }

FixedLocusData fixed_locus(int g, const CoveringSpec& spec) {
  if (g % spec.d == 0) throw std::invalid_argument("fixed_locus: g != 0");
  if (!spec.cyclic()) throw std::invalid_argument("fixed_locus: cyclic case only");
  auto ctx = CycloContext::get(spec.d);
  FixedLocusData data;
  data.g = g % spec.d;
  data.weight_on_normal_S = CyclotomicField::zeta_power(ctx, g);
  data.weight_on_normal_PL = CyclotomicField::zeta_power(ctx, -g);
  data.sigma_degree = spec.d * spec.k;
  data.weight_on_sigma_in_W = CyclotomicField::zeta_power(ctx, g);
  return data;
}

Cyclotomic equivariant_euler_direct(int g, const CoveringSpec& spec) {
  if (!spec.cyclic()) throw std::invalid_argument("equivariant structure needs the cyclic case");
  auto geom = build_geometry<Rational>(spec);
  auto dec = direct_image(geom, spec);
  Cyclotomic acc(spec.d);
  for (int j = 0; j < spec.d; ++j) {
    Rational chi = euler_char<Rational>(geom.S, dec.summands[j]);
    acc = acc + character_on_Lj(g, j, spec.d) * chi;
  }
  return acc;
}

CyclotomicField atiyah_bott_fixed_point(int g, const CoveringSpec& spec) {
  if (g % spec.d == 0) throw std::invalid_argument("fixed-point formula needs g != 0");
  if (!spec.cyclic()) throw std::invalid_argument("fixed-point formula needs the cyclic case");
  if (spec.base_kind == BaseKind::CPn && spec.base_param != 1)
    throw std::invalid_argument("fixed-point formula needs a curve base");
  auto data = fixed_locus(g, spec);
  // the tangent line of W at a branch point carries the fiber rotation
  CyclotomicField denom = CyclotomicField(1) - data.weight_on_sigma_in_W.inverse();
  return CyclotomicField(Rational(data.sigma_degree)) / denom;
}

std::vector<LefschetzCheck> lefschetz_consistency(const CoveringSpec& spec) {
  std::vector<LefschetzCheck> out;
  for (int g = 1; g < spec.d; ++g) {
    CyclotomicField direct = equivariant_euler_direct(g, spec).to_field();
    CyclotomicField ab = atiyah_bott_fixed_point(g, spec);
    out.push_back({g, direct, ab, direct == ab});
  }
  return out;
}

GradedClass<CyclotomicField> ch_g_direct_image(int g, const CoveringSpec& spec,
                                               const BuiltGeometry<CyclotomicField>& geom) {
  auto ctx = CycloContext::get(spec.d);
  auto ch = chern_character_genus<CyclotomicField>(geom.S->top_degree);
  GradedClass<CyclotomicField> acc(geom.S);
  for (int j = 0; j < spec.d; ++j) {
    auto line = geom.c1L * CyclotomicField(Rational(-j));
    acc = acc + apply_genus_line(ch, line) * CyclotomicField::zeta_power(ctx, -static_cast<long>(j) * g);
  }
  return acc;
}

GradedClass<CyclotomicField> ch_g_direct_image(int g, const CoveringSpec& spec) {
  auto geom = build_geometry<CyclotomicField>(spec);
  return ch_g_direct_image(g, spec, geom);
}

namespace {

// exact multiplier of r_n in int_S td(TS) A_n(TS) ch((+)_j L^{-j}) ch(xi)
Rational s_term_multiplier(const CoveringSpec& spec, int n) {
  auto geom = build_geometry<Rational>(spec);
  auto tl = tangent_lines(geom.S);
  auto td = todd_of_sum(tl, geom.S);
  auto an = power_sum_of_lines(tl, geom.S, n);
  std::vector<GradedClass<Rational>> bare;  // R pi_W* O_W without the twist
  for (int j = 0; j < spec.d; ++j) bare.push_back(geom.c1L * Rational(-j));
  auto ch_dec = ch_of_sum(bare, geom.S);
  auto ch_xi = ch_of_sum(xi_lines(geom, spec), geom.S);
  return (td * an * ch_dec * ch_xi).integrate();
}

// exact multiplier of r_n in int_W td(TW) A_n(TW) ch(xi'), via the pushforward
Rational w_term_multiplier(const CoveringSpec& spec, int n) {
  auto geom = build_geometry<Rational>(spec);
  auto cw = class_of_W(geom);
  auto tl = tangent_lines(geom.V);
  auto td_v = todd_of_sum(tl, geom.V);
  auto td_w_inv =
      apply_genus_line(GenusSpec<Rational>{GenusKind::Multiplicative, todd_inverse_series<Rational>(geom.V->top_degree)}, cw);
  auto an = power_sum_of_lines(tl, geom.V, n) - cw.pow(n);
  std::vector<GradedClass<Rational>> xi_v;
  for (int e : spec.xi) xi_v.push_back(pullback_to_total(geom.V, GradedClass<Rational>::generator(geom.S, 0, Rational(e))));
  auto ch = ch_of_sum(xi_v, geom.V);
  return restrict_integrate(td_v * td_w_inv * an * ch, cw);
}

RTermBreakdown assemble(const std::vector<std::pair<int, Rational>>& mult) {
  RTermBreakdown out;
  out.multipliers = mult;
  for (const auto& [n, m] : mult) {
    auto rc = r_coefficient(n);
    out.value += to_double(m) * rc.value;
    out.error += std::abs(to_double(m)) * rc.error;
  }
  return out;
}

}  // namespace

RTermBreakdown theorem32_S_term(const CoveringSpec& spec) {
  auto geom = build_geometry<Rational>(spec);
  std::vector<std::pair<int, Rational>> mult;
  for (int n = 1; n <= geom.S->top_degree; n += 2) mult.push_back({n, s_term_multiplier(spec, n)});
  return assemble(mult);
}

RTermBreakdown theorem32_W_term(const CoveringSpec& spec) {
  auto geom = build_geometry<Rational>(spec);
  std::vector<std::pair<int, Rational>> mult;
  for (int n = 1; n <= geom.V->top_degree; n += 2) mult.push_back({n, w_term_multiplier(spec, n)});
  return assemble(mult);
}

RTermBreakdown theorem32_R_terms(const CoveringSpec& spec) {
  auto s = theorem32_S_term(spec);
  auto w = theorem32_W_term(spec);
  RTermBreakdown out;
  std::map<int, Rational> acc;
  for (const auto& [n, m] : s.multipliers) acc[n] += m;
  for (const auto& [n, m] : w.multipliers) acc[n] -= m;
  for (const auto& [n, m] : acc) out.multipliers.push_back({n, m});
  out.value = s.value - w.value;
  out.error = s.error + w.error;
  return out;
}

EquivariantRTerm theorem41_character_term(int g, const CoveringSpec& spec) {
  auto geom = build_geometry<CyclotomicField>(spec);
  auto tl = tangent_lines(geom.S);
  auto td = todd_of_sum(tl, geom.S);
  auto ch_xi = ch_of_sum(xi_lines(geom, spec), geom.S);
  auto chg = ch_g_direct_image(g, spec, geom);
  EquivariantRTerm out;
  for (int n = 1; n <= geom.S->top_degree; n += 2) {
    auto an = power_sum_of_lines(tl, geom.S, n);
    CyclotomicField mult = (td * an * ch_xi * chg).integrate();
    out.multipliers.push_back({n, mult});
    auto rc = r_coefficient(n);
    out.value += mult.to_complex() * rc.value;
    out.error += std::abs(mult.to_complex()) * rc.error;
  }
  return out;
}

EquivariantRProvider trivial_r_provider() {
  return [](int g, int d, int order) -> std::optional<std::vector<double>> {
    if (g % d != 0) return std::nullopt;
    std::vector<double> c(order + 1, 0.0);
    for (int n = 1; n <= order; n += 2) c[n] = r_coefficient(n).value;
    return c;
  };
}

SigmaTermResult theorem41_sigma_R_term(int g, const CoveringSpec& spec, const EquivariantRProvider& provider) {
  SigmaTermResult out;
  if (!provider) {
    out.note = "equivariant R(theta, x) series provider not configured";
    return out;
  }
  auto coeffs = provider(g, spec.d, 0);
  if (!coeffs) {
    out.note = "provider has no series at theta = 2 pi g / d";
    return out;
  }
  // Sigma is zero-dimensional: only the degree-zero parts contribute, with
  // td_g(TW)|_p = 1/(1 - zeta^{-g}) at each of the d k points
  auto ctx = CycloContext::get(spec.d);
  CyclotomicField tdg = (CyclotomicField(1) - CyclotomicField::zeta_power(ctx, -g)).inverse();
  int sigma = spec.d * spec.k;
  double r0 = coeffs->empty() ? 0.0 : (*coeffs)[0];
  out.pending = false;
  out.value = -std::complex<double>(sigma * spec.xi_rank(), 0.0) * tdg.to_complex() * r0;
  out.error = 0.0;
  out.note = "evaluated from provider";
  return out;
}

Theorem41Terms theorem41_topological_terms(int g, const CoveringSpec& spec, const EquivariantRProvider& provider) {
  return {theorem41_character_term(g, spec), theorem41_sigma_R_term(g, spec, provider)};
}

bool verify_pl_telescoping(const CoveringSpec& spec) {
  auto geom = build_geometry<Rational>(spec);
  auto cs = class_of_S(geom);
  for (int i = 1; i <= spec.d; ++i) {
    auto restricted = restrict_to_infinity_section(cs * Rational(-i), geom.c1L);
    if (!restricted.is_zero()) return false;
  }
  auto cw = class_of_W(geom);
  return restrict_to_infinity_section(-cw, geom.c1L).is_zero();
}

}  // namespace coverdet::equivariant
