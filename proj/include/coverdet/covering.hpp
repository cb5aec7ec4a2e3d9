#pragma once

// Covering data: the degree-d branched cover W in P(L+1) cut out by
// t^d + sum_i alpha_i t^{d-i}, its divisor classes, direct-image
// decompositions, and Euler-characteristic consistency checks run through
// independent routes (HRR on V, HRR on W, direct-image sums on S,
// Riemann-Hurwitz).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverdet/polynomial.hpp"
#include "coverdet/rational.hpp"
#include "coverdet/ring.hpp"
#include "coverdet/series.hpp"

namespace coverdet {

enum class BaseKind { CP1, CPn, Curve };

struct CoveringSpec {
  BaseKind base_kind = BaseKind::CP1;
  int base_param = 1;  // n for CPn, genus for Curve; 1 for CP1
  int k = 1;           // c1(L) = k * (hyperplane or point class)
  int d = 2;
  bool has_sections = false;
  std::vector<RatPoly> alpha;  // alpha[i-1] = alpha_i in H^0(L^i), base CP1 only
  std::vector<int> xi{0};      // twist degrees; {0} is the trivial line

  int xi_rank() const { return static_cast<int>(xi.size()); }

  bool cyclic() const {
    if (!has_sections) return true;  // class-level computations treat the cover as cyclic-shaped
    for (int i = 0; i + 1 < static_cast<int>(alpha.size()); ++i)
      if (!alpha[i].is_zero()) return false;
    return true;
  }

  const RatPoly& alpha_d() const {
    if (!has_sections || static_cast<int>(alpha.size()) != d)
      throw std::invalid_argument("explicit sections not available");
    return alpha.back();
  }

  void validate() const {
    if (d < 2) throw std::invalid_argument("covering degree d must be >= 2");
    if (has_sections) {
      if (base_kind != BaseKind::CP1) throw std::invalid_argument("explicit sections only over CP1");
      if (static_cast<int>(alpha.size()) != d) throw std::invalid_argument("need alpha_1..alpha_d");
      for (int i = 1; i <= d; ++i)
        if (alpha[i - 1].degree() > i * k)
          throw std::invalid_argument("deg alpha_" + std::to_string(i) + " exceeds " + std::to_string(i * k));
    }
  }
};

template <class K>
struct BuiltGeometry {
  PresPtr<K> S;
  PresPtr<K> V;
  GradedClass<K> c1L;      // on S
  GradedClass<K> c1L_V;    // pullback on V
  GradedClass<K> h;        // c1(O_V(1))
  int d = 0;
};

template <class K>
BuiltGeometry<K> build_geometry(const CoveringSpec& spec) {
  spec.validate();
  BuiltGeometry<K> g;
  switch (spec.base_kind) {
    case BaseKind::CP1:
      g.S = make_projective_space<K>(1);
      break;
    case BaseKind::CPn:
      g.S = make_projective_space<K>(spec.base_param);
      break;
    case BaseKind::Curve:
      g.S = make_curve<K>(spec.base_param);
      break;
  }
  g.c1L = GradedClass<K>::generator(g.S, 0, K(spec.k));
  g.V = make_total_space<K>(g.S, g.c1L);
  g.c1L_V = pullback_to_total(g.V, g.c1L);
  g.h = GradedClass<K>::generator(g.V, static_cast<int>(g.V->gens.size()) - 1);
  g.d = spec.d;
  return g;
}

// c1([S]) = c1(L) + h, from [S] = pi^* L (x) O_V(1)
template <class K>
GradedClass<K> class_of_S(const BuiltGeometry<K>& g) {
  return g.c1L_V + g.h;
}

// c1([W]) = d (c1(L) + h), from div f(alpha) = W - dS
template <class K>
GradedClass<K> class_of_W(const BuiltGeometry<K>& g) {
  return class_of_S(g) * K(g.d);
}

// xi as a list of line classes on the base
template <class K>
std::vector<GradedClass<K>> xi_lines(const BuiltGeometry<K>& g, const CoveringSpec& spec) {
  std::vector<GradedClass<K>> v;
  for (int e : spec.xi) v.push_back(GradedClass<K>::generator(g.S, 0, K(e)));
  return v;
}

template <class K>
struct DirectImageDecomp {
  // summands[j] = line classes of L^{-j} (x) xi, j = 0..d-1
  std::vector<std::vector<GradedClass<K>>> summands;
  int rank() const {
    int r = 0;
    for (const auto& s : summands) r += static_cast<int>(s.size());
    return r;
  }
};

template <class K>
DirectImageDecomp<K> direct_image(const BuiltGeometry<K>& g, const CoveringSpec& spec) {
  DirectImageDecomp<K> dec;
  auto xi = xi_lines(g, spec);
  for (int j = 0; j < spec.d; ++j) {
    std::vector<GradedClass<K>> lines;
    for (const auto& x : xi) lines.push_back(x - g.c1L * K(j));
    dec.summands.push_back(std::move(lines));
  }
  return dec;
}

// R^0/R^1 pi_* of O_V(-k) and of O_V([-kS]), as lists of L-exponents
struct HigherDirectImages {
  std::vector<int> r1_of_minus_k;   // R^1 pi_* O_V(-(k+1)) = (+) L^i, i=1..k
  std::vector<int> r0_of_minus_kS;  // empty: R^0 pi_* [-kS] = 0 for k >= 1
  std::vector<int> r1_of_minus_kS;  // R^1 pi_* [-kS] = (+) L^{-j}, j=1..k-1
};

inline HigherDirectImages higher_direct_images_O(int k) {
  if (k < 0) throw std::invalid_argument("higher_direct_images_O: k >= 0");
  HigherDirectImages h;
  for (int i = 1; i <= k; ++i) h.r1_of_minus_k.push_back(i);
  for (int j = 1; j <= k - 1; ++j) h.r1_of_minus_kS.push_back(-j);
  return h;
}

// chi(space, (+) lines) = integral of Td(T) ch((+) lines); exact, and
// integral for genuine sheaf data
template <class K>
Rational euler_char(const PresPtr<K>& pres, const std::vector<GradedClass<K>>& bundle_lines);

template <>
inline Rational euler_char<Rational>(const PresPtr<Rational>& pres,
                                     const std::vector<GradedClass<Rational>>& bundle_lines) {
  auto td = todd_of_sum(tangent_lines(pres), pres);
  auto ch = ch_of_sum(bundle_lines, pres);
  Rational chi = (td * ch).integrate();
  if (!is_integer(chi)) throw std::runtime_error("non-integer Euler characteristic: inconsistent input");
  return chi;
}

// chi(V, [-mS]^{a} (x) pi^* xi) helper: bundle lines on V
template <class K>
Rational euler_char_V_twisted(const BuiltGeometry<K>& g, int m, const CoveringSpec& spec) {
  auto cs = class_of_S(g);
  std::vector<GradedClass<K>> lines;
  for (int e : spec.xi) {
    auto xiv = pullback_to_total(g.V, GradedClass<K>::generator(g.S, 0, K(e)));
    lines.push_back(xiv - cs * K(m));
  }
  return euler_char<K>(g.V, lines);
}

// chi(W, xi') by HRR on W through the pushforward route:
// Td(TW) = Td(TV)/Td([W]) restricted, integrated against c1([W])
template <class K>
Rational euler_char_W(const BuiltGeometry<K>& g, const CoveringSpec& spec) {
  auto cw = class_of_W(g);
  auto td_v = todd_of_sum(tangent_lines(g.V), g.V);
  auto td_w_inv = apply_genus_line(GenusSpec<K>{GenusKind::Multiplicative, todd_inverse_series<K>(g.V->top_degree)}, cw);
  std::vector<GradedClass<K>> xi_v;
  for (int e : spec.xi)
    xi_v.push_back(pullback_to_total(g.V, GradedClass<K>::generator(g.S, 0, K(e))));
  auto ch = ch_of_sum(xi_v, g.V);
  Rational chi = restrict_integrate(td_v * td_w_inv * ch, cw);
  if (!is_integer(chi)) throw std::runtime_error("non-integer chi(W): inconsistent input");
  return chi;
}

// independent route via Eq-(1.2)-type decomposition: sum_j chi(S, L^{-j} xi)
template <class K>
Rational euler_char_W_direct_sum(const BuiltGeometry<K>& g, const CoveringSpec& spec) {
  auto dec = direct_image(g, spec);
  Rational chi(0);
  for (const auto& lines : dec.summands) chi += euler_char<K>(g.S, lines);
  return chi;
}

// Riemann-Hurwitz genus for the cyclic cover over a curve base:
// 2 g_W - 2 = d (2 g_S - 2) + (d-1) |Sigma|, |Sigma| = d k
inline int riemann_hurwitz_genus(const CoveringSpec& spec) {
  if (!spec.cyclic()) throw std::invalid_argument("riemann_hurwitz_genus: cyclic case only");
  int gs = 0;
  if (spec.base_kind == BaseKind::Curve)
    gs = spec.base_param;
  else if (spec.base_kind == BaseKind::CPn && spec.base_param != 1)
    throw std::invalid_argument("riemann_hurwitz_genus: curve base only");
  int sigma = spec.d * spec.k;
  int two_g_minus_2 = spec.d * (2 * gs - 2) + sigma * (spec.d - 1);
  if (two_g_minus_2 % 2 != 0) throw std::runtime_error("Riemann-Hurwitz parity failure");
  return two_g_minus_2 / 2 + 1;
}

struct EulerCheck {
  std::string id;
  Rational lhs;
  Rational rhs;
  Rational residual;
};

struct EulerReport {
  std::vector<EulerCheck> checks;
  bool all_zero() const {
    for (const auto& c : checks)
      if (c.residual != 0) return false;
    return true;
  }
};

// additivity residuals for the short exact sequences of section 2 and the
// Leray degeneration, each side by its own route
template <class K>
EulerReport check_sequence_additivity(const CoveringSpec& spec) {
  auto g = build_geometry<K>(spec);
  EulerReport rep;
  auto add = [&](const std::string& id, Rational lhs, Rational rhs) {
    rep.checks.push_back({id, lhs, rhs, lhs - rhs});
  };
  const int d = spec.d;

  Rational chi_V_xi = euler_char_V_twisted(g, 0, spec);
  Rational chi_W = euler_char_W(g, spec);

  // 0 -> [-W] xi -> xi -> j_* xi' -> 0
  add("seq_2.13", chi_V_xi - euler_char_V_twisted(g, d, spec), chi_W);

  // 0 -> [-dS] xi -> xi -> i_* ((+)_{i<d} L^{-i} xi) -> 0
  Rational sum_chi_S(0);
  {
    auto dec = direct_image(g, spec);
    for (const auto& lines : dec.summands) sum_chi_S += euler_char<K>(g.S, lines);
  }
  add("seq_2.25", chi_V_xi - euler_char_V_twisted(g, d, spec), sum_chi_S);

  // 0 -> [-(i+1)S] xi -> [-iS] xi -> i_* (L^{-i} xi) -> 0, i = 0..d-1
  for (int i = 0; i < d; ++i) {
    std::vector<GradedClass<K>> lines;
    for (int e : spec.xi)
      lines.push_back(GradedClass<K>::generator(g.S, 0, K(e)) - g.c1L * K(i));
    add("seq_2.35_i" + std::to_string(i),
        euler_char_V_twisted(g, i, spec) - euler_char_V_twisted(g, i + 1, spec),
        euler_char<K>(g.S, lines));
  }

  // direct sum of the above
  {
    Rational lhs(0);
    for (int i = 0; i < d; ++i)
      lhs += euler_char_V_twisted(g, i, spec) - euler_char_V_twisted(g, i + 1, spec);
    add("seq_2.36", lhs, sum_chi_S);
  }

  // Leray: chi(V, eta) = chi(S, R^0) - chi(S, R^1) for eta = [-mS] xi
  for (int m = 0; m <= d; ++m) {
    Rational rhs(0);
    if (m == 0) {
      rhs = euler_char<K>(g.S, xi_lines(g, spec));
    } else {
      for (int j = 1; j <= m - 1; ++j) {
        std::vector<GradedClass<K>> lines;
        for (int e : spec.xi)
          lines.push_back(GradedClass<K>::generator(g.S, 0, K(e)) - g.c1L * K(j));
        rhs -= euler_char<K>(g.S, lines);
      }
    }
    add("leray_2.33_m" + std::to_string(m), euler_char_V_twisted(g, m, spec), rhs);
  }

  // direct-image chi equality, Eq. (1.2) with Prop. 2.2
  add("directimage_chi", chi_W, sum_chi_S);

  return rep;
}

}  // namespace coverdet
