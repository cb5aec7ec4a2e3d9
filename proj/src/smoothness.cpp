#include "coverdet/smoothness.hpp"

#include <functional>
#include <vector>

namespace coverdet {

namespace {

// polynomial in t with Q[z] coefficients, index = t-exponent
struct BiPoly {
  std::vector<RatPoly> c;

  int deg_t() const {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d].is_zero()) --d;
    return d;
  }
  RatPoly coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : RatPoly(); }

  BiPoly dt() const {
    BiPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Rational(static_cast<long>(i)));
    return r;
  }
  BiPoly dz() const {
    BiPoly r;
    for (const auto& p : c) r.c.push_back(p.derivative());
    return r;
  }

  RatPoly eval_z0_in_t() const {  // substitute z = 0, view as polynomial in t
    std::vector<Rational> v;
    for (const auto& p : c) v.push_back(p.coeff(0));
    return RatPoly(std::move(v));
  }
};

BiPoly build_f(const CoveringSpec& spec, bool infinity_chart) {
  BiPoly f;
  f.c.assign(spec.d + 1, RatPoly());
  f.c[spec.d] = RatPoly(Rational(1));
  for (int i = 1; i <= spec.d; ++i) {
    RatPoly a = spec.alpha[i - 1];
    if (infinity_chart) a = a.reversed(i * spec.k);
    f.c[spec.d - i] = f.c[spec.d - i] + a;
  }
  return f;
}

// resultant in t of two bivariate polynomials, computed over Q(z)
RatPoly resultant_t(const BiPoly& a, const BiPoly& b) {
  // Sylvester determinant over Q[z], cofactor expansion (sizes <= 2d-1)
  int m = a.deg_t(), n = b.deg_t();
  if (m < 0 || n < 0) return RatPoly();
  int sz = m + n;
  if (sz == 0) return RatPoly(Rational(1));
  std::vector<std::vector<RatPoly>> s(sz, std::vector<RatPoly>(sz));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
  // division-free determinant by expansion along the first column
  std::function<RatPoly(std::vector<std::vector<RatPoly>>&)> det = [&](std::vector<std::vector<RatPoly>>& mat) -> RatPoly {
    size_t k = mat.size();
    if (k == 1) return mat[0][0];
    RatPoly acc;
    for (size_t i = 0; i < k; ++i) {
      if (mat[i][0].is_zero()) continue;
      std::vector<std::vector<RatPoly>> sub;
      for (size_t r = 0; r < k; ++r) {
        if (r == i) continue;
        sub.emplace_back(mat[r].begin() + 1, mat[r].end());
      }
      RatPoly term = mat[i][0] * det(sub);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(s);
}

// ---- arithmetic in Q[z]/(q) with branch splitting --------------------------

struct Branch {
  RatPoly q;                  // squarefree modulus
  std::vector<RatPoly> poly;  // polynomial in t, coefficients reduced mod q
};

RatPoly reduce(const RatPoly& a, const RatPoly& q) { return a % q; }

void reduce_all(std::vector<RatPoly>& v, const RatPoly& q) {
  for (auto& p : v) p = reduce(p, q);
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::string describe_roots(const RatPoly& w, const std::string& chart) {
  // try to exhibit a rational root for a readable witness
  RatPoly p = w.monic();
  if (p.degree() >= 1) {
    // candidate rational roots from the factored constant term of a scaled copy
    for (long num = -20; num <= 20; ++num)
      for (long den = 1; den <= 6; ++den) {
        Rational r(num, den);
        if (p.eval(r) == Rational(0))
          return chart + " fiber at z = " + to_string(r);
      }
  }
  return chart + " fiber where " + p.str("z") + " = 0";
}

// gcd in (Q[z]/(q))[t] via Euclid with dynamic splitting; calls sink with
// (branch modulus, monic gcd) for every branch
void gcd_branches(RatPoly q, std::vector<RatPoly> a, std::vector<RatPoly> b,
                  const std::function<void(const RatPoly&, const std::vector<RatPoly>&)>& sink) {
  reduce_all(a, q);
  reduce_all(b, q);
  if (q.degree() == 0) return;  // empty branch
  if (b.empty()) {
    if (a.empty()) throw std::runtime_error("gcd_branches: both arguments vanish");
    // normalize a to monic lead, splitting where the lead degenerates
    RatPoly lead = a.back();
    auto [g, u, v] = extended_gcd(lead, q);
    if (g.degree() == 0) {
      std::vector<RatPoly> mon = a;
      for (auto& p : mon) p = reduce(p * u, q);
      sink(q, mon);
      return;
    }
    RatPoly q1 = g;                // lead vanishes identically here
    RatPoly q2 = (q / g).monic();  // lead invertible here
    std::vector<RatPoly> a_drop(a.begin(), a.end() - 1);
    gcd_branches(q1, a_drop, {}, sink);
    gcd_branches(q2, a, {}, sink);
    return;
  }
  // one division step a mod b, splitting on the lead of b
  RatPoly lead = b.back();
  auto [g, u, v] = extended_gcd(lead, q);
  if (g.degree() != 0) {
    RatPoly q1 = g;
    RatPoly q2 = (q / g).monic();
    std::vector<RatPoly> b_drop(b.begin(), b.end() - 1);
    gcd_branches(q1, a, b_drop, sink);
    gcd_branches(q2, a, b, sink);
    return;
  }
  // lead invertible: monicize b and reduce a
  std::vector<RatPoly> bm = b;
  for (auto& p : bm) p = reduce(p * u, q);
  std::vector<RatPoly> r = a;
  int db = static_cast<int>(bm.size()) - 1;
  while (static_cast<int>(r.size()) - 1 >= db) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < db) break;
    RatPoly f = r.back();
    int sh = static_cast<int>(r.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) r[sh + i] = reduce(r[sh + i] - f * bm[i], q);
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  gcd_branches(q, bm, r, sink);
}

// resultant in t of a monic g with h over Q[z]/(q), division-free
RatPoly resultant_mod(const std::vector<RatPoly>& g, const std::vector<RatPoly>& h, const RatPoly& q) {
  BiPoly bg, bh;
  bg.c = g;
  bh.c = h;
  RatPoly r = resultant_t(bg, bh);
  return reduce(r, q);
}

}  // namespace

SmoothnessResult check_smoothness(const CoveringSpec& spec) {
  spec.validate();
  if (!spec.has_sections) throw std::invalid_argument("check_smoothness needs explicit sections");

  for (int chart = 0; chart < 2; ++chart) {
    bool inf = chart == 1;
    BiPoly f = build_f(spec, inf);
    BiPoly ft = f.dt();
    BiPoly fz = f.dz();
    std::string chart_name = inf ? "chart at infinity," : "affine chart,";

    if (inf) {
      // only w = 0 is new in this chart
      RatPoly f0 = f.eval_z0_in_t();
      RatPoly ft0 = ft.eval_z0_in_t();
      RatPoly fz0 = fz.eval_z0_in_t();
      RatPoly u = gcd(f0, ft0);
      if (u.degree() >= 1) {
        RatPoly w = gcd(u, fz0);
        if (w.degree() >= 1)
          return {false, "chart at infinity, fiber at w = 0 (common zero of F, F_t, F_w)"};
      }
      continue;
    }

    RatPoly disc = resultant_t(f, ft);
    if (disc.is_zero())
      return {false, "t-discriminant vanishes identically (non-reduced cover)"};
    RatPoly q = squarefree_part(disc);
    if (q.degree() == 0) continue;  // no singular fiber candidates

    SmoothnessResult found{true, ""};
    gcd_branches(q, f.c, ft.c, [&](const RatPoly& qb, const std::vector<RatPoly>& g) {
      if (!found.smooth) return;
      if (static_cast<int>(g.size()) - 1 < 1)
        throw std::runtime_error("discriminant root without a multiple fiber point");
      std::vector<RatPoly> h = fz.c;
      for (auto& p : h) p = reduce(p, qb);
      while (!h.empty() && h.back().is_zero()) h.pop_back();
      RatPoly res = h.empty() ? RatPoly() : resultant_mod(g, h, qb);
      RatPoly w = res.is_zero() ? qb : gcd(res, qb);
      if (w.degree() >= 1) found = {false, describe_roots(w, chart_name)};
    });
    if (!found.smooth) return found;
  }
  return {true, ""};
}

}  // namespace coverdet
