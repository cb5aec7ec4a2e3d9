#pragma once

// Z/dZ-equivariant structure of the cyclic cover t^d + alpha_d = 0: the
// characters on the direct-image summands, the holomorphic Lefschetz count
// from the fixed points Sigma, equivariant Chern characters, and the
// R-genus terms of the comparison formulas.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coverdet/covering.hpp"
#include "coverdet/cyclotomic.hpp"
#include "coverdet/series.hpp"
#include "coverdet/zeta.hpp"

namespace coverdet::equivariant {

// character of g on the summand L^{-j}: zeta^{-jg} under (g.f)(t) = f(g^{-1}t)
Cyclotomic character_on_Lj(int g, int j, int d);

// fixed loci of a nontrivial group element: the zero section, the infinity
// section, and the branch locus Sigma on the cover, with the action weights
// on the normal lines
struct FixedLocusData {
  int g = 0;
  CyclotomicField weight_on_normal_S;    // zeta^{g} on N_{S/V}
  CyclotomicField weight_on_normal_PL;   // zeta^{-g} on N_{P(L)/V}
  int sigma_degree = 0;                  // |Sigma| = d k
  CyclotomicField weight_on_sigma_in_W;  // zeta^{g} on N_{Sigma/W} = N_{S/V}
};

FixedLocusData fixed_locus(int g, const CoveringSpec& spec);

// sum_j zeta^{-jg} chi(S, L^{-j} (x) xi); exact in the group ring
Cyclotomic equivariant_euler_direct(int g, const CoveringSpec& spec);

// fixed-point count over Sigma: |Sigma| / (1 - zeta^{-g}); exact in Q(zeta_d)
CyclotomicField atiyah_bott_fixed_point(int g, const CoveringSpec& spec);

struct LefschetzCheck {
  int g;
  CyclotomicField direct;
  CyclotomicField fixed_point;
  bool agree;
};

std::vector<LefschetzCheck> lefschetz_consistency(const CoveringSpec& spec);

// sum_j zeta^{-jg} ch(L^{-j}) as a class on S over Q(zeta_d)
GradedClass<CyclotomicField> ch_g_direct_image(int g, const CoveringSpec& spec);
GradedClass<CyclotomicField> ch_g_direct_image(int g, const CoveringSpec& spec,
                                               const BuiltGeometry<CyclotomicField>& geom);

struct RTermBreakdown {
  // exact multipliers of the odd R-series coefficients r_n
  std::vector<std::pair<int, Rational>> multipliers;
  double value = 0.0;
  double error = 0.0;
};

// the two non-equivariant R-genus terms of the comparison formula:
// int_S td(TS) R(TS) ch(R pi_W* O_W) ch(xi) - int_W td(TW) R(TW) ch(xi')
RTermBreakdown theorem32_R_terms(const CoveringSpec& spec);

// the same S-side term alone (used by the equivariant ledger at g = 0)
RTermBreakdown theorem32_S_term(const CoveringSpec& spec);
RTermBreakdown theorem32_W_term(const CoveringSpec& spec);

struct EquivariantRTerm {
  std::vector<std::pair<int, CyclotomicField>> multipliers;  // exact in Q(zeta_d)
  std::complex<double> value;
  double error = 0.0;
};

// int_S td(TS) R(TS) ch(xi) ch_g(R pi_W* O_W), exact ring data times the
// numeric R coefficients
EquivariantRTerm theorem41_character_term(int g, const CoveringSpec& spec);

// provider for the equivariant series R(theta, x); returns the coefficient
// list of R(2 pi g/d, x) through the requested order, or nothing when the
// series is not available. The shipped implementation only covers theta = 0
// where R(0, x) = R(x).
using EquivariantRProvider = std::function<std::optional<std::vector<double>>(int g, int d, int order)>;

EquivariantRProvider trivial_r_provider();

struct SigmaTermResult {
  bool pending = true;
  std::string note;
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
};

// -int_Sigma td_g(TW) R_g(TW) ch(xi): a sum over the d k points of Sigma of
// degree-zero data; evaluates only when a provider supplies R(theta, x)
SigmaTermResult theorem41_sigma_R_term(int g, const CoveringSpec& spec, const EquivariantRProvider& provider);

struct Theorem41Terms {
  EquivariantRTerm character_term;  // exact ring data, numeric with bound
  SigmaTermResult sigma_term;       // pending without a provider, never zero
};

// the two R-genus terms of the equivariant comparison formula
Theorem41Terms theorem41_topological_terms(int g, const CoveringSpec& spec,
                                           const EquivariantRProvider& provider = nullptr);

// class-level shadow of the projective-bundle telescoping cancellation:
// every [-iS] and [-W] restricts trivially to the infinity section
bool verify_pl_telescoping(const CoveringSpec& spec);

}  // namespace coverdet::equivariant
