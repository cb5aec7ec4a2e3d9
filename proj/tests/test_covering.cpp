#include <doctest.h>

#include <complex>
#include <random>

#include "coverdet/covering.hpp"
#include "coverdet/smoothness.hpp"

using namespace coverdet;

namespace {

CoveringSpec make_spec(int d, int k, std::vector<int> xi = {0}) {
  CoveringSpec s;
  s.d = d;
  s.k = k;
  s.xi = std::move(xi);
  return s;
}

CoveringSpec cyclic_spec(int d, int k, RatPoly alpha_d) {
  CoveringSpec s = make_spec(d, k);
  s.has_sections = true;
  s.alpha.assign(d, RatPoly());
  s.alpha[d - 1] = std::move(alpha_d);
  return s;
}

}  // namespace

TEST_CASE("divisor classes of S and W") {
  auto spec = make_spec(3, 1);
  auto g = build_geometry<Rational>(spec);
  auto a = pullback_to_total(g.V, GradedClass<Rational>::generator(g.S, 0));
  CHECK(class_of_S(g) == a + g.h);
  CHECK(class_of_W(g) == class_of_S(g) * Rational(3));
  // [S]|_S = L: the restricted class integrates to deg L
  CHECK(restrict_to_zero_section(class_of_S(g)).integrate() == 1);
}

TEST_CASE("direct image decomposition") {
  auto spec = make_spec(2, 1);
  auto g = build_geometry<Rational>(spec);
  auto dec = direct_image(g, spec);
  REQUIRE(dec.summands.size() == 2);
  CHECK(dec.summands[0][0].is_zero());            // O
  CHECK(dec.summands[1][0] == -(g.c1L));          // L^{-1}
  CHECK(dec.rank() == 2);

  CoveringSpec bad = make_spec(1, 1);
  CHECK_THROWS(bad.validate());

  auto spec2 = make_spec(3, 2, {0, 1});
  auto g2 = build_geometry<Rational>(spec2);
  CHECK(direct_image(g2, spec2).rank() == 3 * 2);
}

TEST_CASE("higher direct images") {
  auto h1 = higher_direct_images_O(1);
  CHECK(h1.r1_of_minus_k == std::vector<int>{1});  // R^1 pi_* O_V(-2) = L
  CHECK(h1.r0_of_minus_kS.empty());
  CHECK(h1.r1_of_minus_kS.empty());  // R pi_* [-S] = 0
  auto h3 = higher_direct_images_O(3);
  CHECK(h3.r1_of_minus_kS == std::vector<int>{-1, -2});
  // Serre-duality rank symmetry: rank R^1 pi_* O_V(-(k+1)) = k
  for (int k = 0; k <= 6; ++k) CHECK(static_cast<int>(higher_direct_images_O(k).r1_of_minus_k.size()) == k);
}

TEST_CASE("euler characteristics by HRR") {
  auto p1 = make_projective_space<Rational>(1);
  for (int m = -3; m <= 3; ++m) {
    auto line = GradedClass<Rational>::generator(p1, 0, Rational(m));
    CHECK(euler_char<Rational>(p1, {line}) == m + 1);
  }
  for (int n = 1; n <= 3; ++n) {
    auto pn = make_projective_space<Rational>(n);
    CHECK(euler_char<Rational>(pn, {GradedClass<Rational>(pn)}) == 1);
  }
  for (int g = 0; g <= 3; ++g) {
    auto c = make_curve<Rational>(g);
    CHECK(euler_char<Rational>(c, {GradedClass<Rational>(c)}) == 1 - g);
  }
}

TEST_CASE("chi of the cover against frozen values") {
  CHECK(euler_char_W(build_geometry<Rational>(make_spec(2, 1)), make_spec(2, 1)) == 1);  // g_W = 0
  CHECK(euler_char_W(build_geometry<Rational>(make_spec(2, 2)), make_spec(2, 2)) == 0);  // g_W = 1
  CHECK(euler_char_W(build_geometry<Rational>(make_spec(3, 1)), make_spec(3, 1)) == 0);  // g_W = 1
}

TEST_CASE("riemann-hurwitz genus") {
  CHECK(riemann_hurwitz_genus(make_spec(2, 1)) == 0);
  CHECK(riemann_hurwitz_genus(make_spec(2, 2)) == 1);
  CHECK(riemann_hurwitz_genus(make_spec(3, 1)) == 1);
  // curve base
  CoveringSpec s = make_spec(2, 1);
  s.base_kind = BaseKind::Curve;
  s.base_param = 1;
  CHECK(riemann_hurwitz_genus(s) == 2);
}

TEST_CASE("direct image chi equality and RH cross-check on the grid") {
  for (int d : {2, 3, 4})
    for (int k : {1, 2, 3})
      for (int e : {0, 1}) {
        auto spec = make_spec(d, k, {e});
        auto g = build_geometry<Rational>(spec);
        CHECK(euler_char_W(g, spec) == euler_char_W_direct_sum(g, spec));
        if (e == 0) {
          CHECK(euler_char_W(g, spec) == Rational(d) - Rational(k * d * (d - 1), 2));
          CHECK(Rational(1) - euler_char_W(g, spec) == riemann_hurwitz_genus(spec));
        }
      }
}

TEST_CASE("sequence additivity residuals vanish on the grid") {
  for (int d : {2, 3, 4})
    for (int k : {1, 2, 3})
      for (int e : {0, 1}) {
        auto rep = check_sequence_additivity<Rational>(make_spec(d, k, {e}));
        for (const auto& c : rep.checks) {
          INFO(c.id << " at d=" << d << " k=" << k << " e=" << e);
          CHECK(c.residual == 0);
        }
      }
}

TEST_CASE("chi over a curve base") {
  CoveringSpec s = make_spec(2, 2);
  s.base_kind = BaseKind::Curve;
  s.base_param = 2;  // genus two base
  auto g = build_geometry<Rational>(s);
  CHECK(euler_char_W(g, s) == euler_char_W_direct_sum(g, s));
  auto rep = check_sequence_additivity<Rational>(s);
  for (const auto& c : rep.checks) CHECK(c.residual == 0);
}

TEST_CASE("smoothness of cyclic covers") {
  // alpha_2 = z(z-1): simple zeros, full degree
  auto ok = cyclic_spec(2, 1, RatPoly{Rational(0), Rational(-1), Rational(1)});
  CHECK(check_smoothness(ok).smooth);

  // alpha_2 = z^2: double zero at z = 0
  auto dbl = cyclic_spec(2, 1, RatPoly{Rational(0), Rational(0), Rational(1)});
  auto r = check_smoothness(dbl);
  CHECK_FALSE(r.smooth);
  CHECK(r.witness.find("z = 0") != std::string::npos);

  // alpha_2 = 1: degree 0 < dk - 1, double point on the fiber at infinity
  auto cst = cyclic_spec(2, 1, RatPoly{Rational(1)});
  auto rc = check_smoothness(cst);
  CHECK_FALSE(rc.smooth);
  CHECK(rc.witness.find("infinity") != std::string::npos);

  // degree dk - 1: simple branch point at infinity is fine
  auto near = cyclic_spec(2, 2, RatPoly{Rational(1), Rational(0), Rational(0), Rational(1)});  // 1 + z^3
  CHECK(check_smoothness(near).smooth);
}

namespace {

// numeric oracle for the smoothness check: multistart Newton on the system
// (F, F_t) followed by inspection of |F_z| at the solutions, run on both
// charts. Returns true when a singular point was found.
bool numeric_singular_oracle(const CoveringSpec& spec) {
  using C = std::complex<double>;
  std::mt19937 rng(987);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  for (int chart = 0; chart < 2; ++chart) {
    std::vector<std::vector<double>> a(spec.d + 1);  // a[i] = coeffs of alpha_i (index 1..d)
    for (int i = 1; i <= spec.d; ++i) {
      RatPoly p = spec.alpha[i - 1];
      if (chart == 1) p = p.reversed(i * spec.k);
      for (int j = 0; j <= p.degree(); ++j) a[i].push_back(to_double(p.coeff(j)));
    }
    auto alpha_at = [&](int i, C z, int deriv) {
      C acc(0.0, 0.0);
      for (size_t j = deriv; j < a[i].size(); ++j) {
        double fac = deriv == 1 ? static_cast<double>(j) : 1.0;
        acc += fac * a[i][j] * std::pow(z, static_cast<double>(j - deriv));
      }
      return acc;
    };
    auto F = [&](C z, C t, int dt, int dz) {
      C acc(0.0, 0.0);
      // t^d term
      if (dz == 0) {
        double fac = 1.0;
        int e = spec.d - dt;
        if (dt == 1) fac = spec.d;
        if (dt <= 1 && e >= 0) acc += fac * std::pow(t, static_cast<double>(e));
      }
      for (int i = 1; i <= spec.d; ++i) {
        int e = spec.d - i;
        if (dt == 1 && e == 0) continue;
        double fac = dt == 1 ? static_cast<double>(e) : 1.0;
        acc += fac * alpha_at(i, z, dz) * std::pow(t, static_cast<double>(e - dt));
      }
      return acc;
    };
    for (int start = 0; start < 500; ++start) {
      C z(box(rng), box(rng)), t(box(rng), box(rng));
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        C f = F(z, t, 0, 0), ft = F(z, t, 1, 0);
        C fz = F(z, t, 0, 1), ftz = F(z, t, 1, 1);
        // F_tt by finite structure: derivative of F_t in t
        C h(1e-6, 0.0);
        C ftt = (F(z, t + h, 1, 0) - F(z, t - h, 1, 0)) / (2.0 * h);
        C det = fz * ftt - ft * ftz;
        if (std::abs(det) < 1e-14) break;
        // solve J [dz, dt]^T = [f, ft]^T with J = [[fz, ft], [ftz, ftt]]
        C dz_step = (f * ftt - ft * ft) / det;
        C dt_step = (fz * ft - f * ftz) / det;
        z -= dz_step;
        t -= dt_step;
        if (std::abs(dz_step) + std::abs(dt_step) < 1e-12) {
          converged = true;
          break;
        }
      }
      if (!converged) continue;
      if (std::abs(F(z, t, 0, 0)) > 1e-8 || std::abs(F(z, t, 1, 0)) > 1e-8) continue;
      if (std::abs(F(z, t, 0, 1)) < 1e-7) return true;  // singular witness
    }
  }
  return false;
}

}  // namespace

TEST_CASE("smoothness agrees with a numeric multistart oracle") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> cd(-2, 2);
  int singular_seen = 0, smooth_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    int d = 2 + trial % 2, k = 1 + (trial / 2) % 2;
    CoveringSpec spec = make_spec(d, k);
    spec.has_sections = true;
    for (int i = 1; i <= d; ++i) {
      std::vector<Rational> cs;
      for (int j = 0; j <= i * k; ++j) cs.emplace_back(cd(rng));
      spec.alpha.push_back(RatPoly(std::move(cs)));
    }
    bool degenerate = spec.alpha.back().is_zero();
    if (degenerate) continue;  // covers with alpha_d = 0 contain the zero section
    auto exact = check_smoothness(spec);
    bool numeric_singular = numeric_singular_oracle(spec);
    INFO("trial " << trial << " d=" << d << " k=" << k << " exact="
                  << (exact.smooth ? "smooth" : "singular: " + exact.witness));
    if (exact.smooth) {
      ++smooth_seen;
      CHECK_FALSE(numeric_singular);
    } else {
      ++singular_seen;
      CHECK(numeric_singular);
    }
  }
  // the random family must exercise both outcomes for the oracle to mean much
  CHECK(smooth_seen > 0);
  CHECK(singular_seen > 0);
}

TEST_CASE("smoothness with general sections") {
  // t^2 + t + z^2: singular fibers at z = +-1/2 but F_z != 0 there
  CoveringSpec gen = make_spec(2, 1);
  gen.has_sections = true;
  gen.alpha = {RatPoly{Rational(1)}, RatPoly{Rational(0), Rational(0), Rational(1)}};
  CHECK(check_smoothness(gen).smooth);

  // t^3 + t + (z^3 - z): exercises the modular gcd path
  CoveringSpec gen3 = make_spec(3, 1);
  gen3.has_sections = true;
  gen3.alpha = {RatPoly(), RatPoly{Rational(1)}, RatPoly{Rational(0), Rational(-1), Rational(0), Rational(1)}};
  CHECK(check_smoothness(gen3).smooth);

  // (t^2 - 1)^2 + z = t^4 - 2 t^2 + (1 + z): smooth affine, singular at infinity
  CoveringSpec quartic = make_spec(4, 1);
  quartic.has_sections = true;
  quartic.alpha = {RatPoly(), RatPoly{Rational(-2)}, RatPoly(), RatPoly{Rational(1), Rational(1)}};
  auto rq = check_smoothness(quartic);
  CHECK_FALSE(rq.smooth);
  CHECK(rq.witness.find("infinity") != std::string::npos);

  // affine double point with F_z = 0: t^2 - z^2 has a node at the origin
  CoveringSpec node = make_spec(2, 1);
  node.has_sections = true;
  node.alpha = {RatPoly(), RatPoly{Rational(0), Rational(0), Rational(-1)}};
  auto rn = check_smoothness(node);
  CHECK_FALSE(rn.smooth);
  CHECK(rn.witness.find("z = 0") != std::string::npos);
}
