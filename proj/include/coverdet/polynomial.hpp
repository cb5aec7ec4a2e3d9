#pragma once

// Dense univariate polynomials over an exact field. Used for sections of
// O(m) on the projective line, resultant/gcd based smoothness checks and
// cyclotomic arithmetic.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coverdet/rational.hpp"

namespace coverdet {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(K c) : c_{std::move(c)} { normalize(); }
  Poly(std::initializer_list<K> cs) : c_(cs) { normalize(); }
  explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { normalize(); }

  static Poly monomial(int n, K coef = K(1)) {
    std::vector<K> v(n + 1, K(0));
    v[n] = std::move(coef);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(1); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[i];
  }
  const std::vector<K>& coeffs() const { return c_; }
  K lead() const {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const {
    std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<K> v(c_);
    for (auto& k : v) k = -k;
    return Poly(std::move(v));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
  }
  Poly operator*(const K& k) const {
    std::vector<K> v(c_);
    for (auto& x : v) x = x * k;
    return Poly(std::move(v));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  template <class V>
  V eval(const V& x) const {
    V acc = V(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + V(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<int>(i));
    return Poly(std::move(v));
  }

  // x^n p(1/x): chart swap for a section of O(n), requires deg <= n
  Poly reversed(int n) const {
    if (degree() > n) throw std::invalid_argument("reversed: degree exceeds twist");
    std::vector<K> v(n + 1, K(0));
    for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
    return Poly(std::move(v));
  }

  std::pair<Poly, Poly> divmod(const Poly& div) const {
    if (div.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly r = *this;
    int dd = div.degree();
    if (r.degree() < dd) return {Poly(), r};
    std::vector<K> q(r.degree() - dd + 1, K(0));
    K inv_lead = K(1) / div.lead();
    while (!r.is_zero() && r.degree() >= dd) {
      int sh = r.degree() - dd;
      K f = r.lead() * inv_lead;
      q[sh] = f;
      std::vector<K> nv(r.c_);
      for (int i = 0; i <= dd; ++i) nv[sh + i] -= f * div.c_[i];
      r = Poly(std::move(nv));
    }
    return {Poly(std::move(q)), r};
  }
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / lead());
  }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

// returns (g, u, v) with u*a + v*b = g, g monic (or zero)
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> u0{K(1)}, u1, v0, v1{K(1)};
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  K inv = K(1) / r0.lead();
  return {r0 * inv, u0 * inv, v0 * inv};
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& a) {
  if (a.degree() <= 0) return a.monic();
  Poly<K> g = gcd(a, a.derivative());
  return (a / g).monic();
}

template <class K>
K resultant(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  if (b.degree() == 0) return pow_k(b.lead(), a.degree());
  if (a.degree() == 0) return pow_k(a.lead(), b.degree());
  Poly<K> r = a % b;
  if (r.is_zero()) return K(0);
  K sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? K(-1) : K(1);
  return sign * pow_k(b.lead(), a.degree() - r.degree()) * resultant(b, r);
}

template <class K>
K pow_k(K base, int n) {
  K r(1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

template <class K>
std::string Poly<K>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == K(0)) continue;
    if (!s.empty()) s += " + ";
    s += to_string(c_[i]);
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

using RatPoly = Poly<Rational>;

}  // namespace coverdet
