#pragma once

// Truncated formal power series and the genus calculus: Todd, inverse Todd,
// Chern character, the partial geometric factor (1 - e^{-dx})/x, and the
// equivariant Todd factor of a line with a root-of-unity action.

#include <stdexcept>
#include <vector>

#include "coverdet/cyclotomic.hpp"
#include "coverdet/rational.hpp"
#include "coverdet/ring.hpp"
#include "coverdet/zeta.hpp"

namespace coverdet {

template <class K>
class TruncatedSeries {
 public:
  TruncatedSeries() : order_(0), c_(1, K(0)) {}
  explicit TruncatedSeries(int order) : order_(order), c_(order + 1, K(0)) {}
  TruncatedSeries(int order, std::vector<K> c) : order_(order), c_(std::move(c)) {
    c_.resize(order + 1, K(0));
  }

  static TruncatedSeries constant(int order, K v) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(v);
    return s;
  }

  int order() const { return order_; }
  const K& coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("series coefficient index");
    return c_[i];
  }
  K& coeff(int i) { return c_[i]; }
  const std::vector<K>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  TruncatedSeries operator-(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) {
      if (c_[i] == K(0)) continue;
      for (int j = 0; i + j <= order_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
  }
  TruncatedSeries operator*(const K& k) const {
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * k;
    return r;
  }
  bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

  TruncatedSeries reciprocal() const {
    if (c_[0] == K(0)) throw std::domain_error("reciprocal: constant term not invertible");
    TruncatedSeries r(order_);
    K inv0 = K(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      K acc(0);
      for (int i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
      r.c_[n] = -inv0 * acc;
    }
    return r;
  }

  // substitute a series with zero constant term
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    check(inner);
    if (!(inner.c_[0] == K(0))) throw std::domain_error("compose: inner constant term must vanish");
    TruncatedSeries r = constant(order_, c_[0]);
    TruncatedSeries p = constant(order_, K(1));
    for (int n = 1; n <= order_; ++n) {
      p = p * inner;
      r = r + p * c_[n];
    }
    return r;
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  }
  int order_;
  std::vector<K> c_;
};

namespace detail {
template <class K>
struct scalar_from_rational {
  static K get(const Rational& r) { return K(r); }
};
template <>
struct scalar_from_rational<Rational> {
  static Rational get(const Rational& r) { return r; }
};
template <>
struct scalar_from_rational<double> {
  static double get(const Rational& r) { return to_double(r); }
};
template <>
struct scalar_from_rational<CyclotomicField> {
  static CyclotomicField get(const Rational& r) { return CyclotomicField(r); }
};
}  // namespace detail

template <class K>
K from_rational(const Rational& r) {
  return detail::scalar_from_rational<K>::get(r);
}

// x/(1 - e^{-x}); coefficient of x^n is (-1)^n B_n / n!
template <class K = Rational>
TruncatedSeries<K> todd_series(int order) {
  if (order < 0) throw std::invalid_argument("todd_series: order >= 0");
  TruncatedSeries<K> s(order);
  Rational fact(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    Rational c = bernoulli(n) / fact;
    if (n % 2 == 1) c = -c;
    s.coeff(n) = from_rational<K>(c);
  }
  return s;
}

// (1 - e^{-x})/x, the reciprocal of the Todd series
template <class K = Rational>
TruncatedSeries<K> todd_inverse_series(int order) {
  TruncatedSeries<K> s(order);
  Rational fact(1);
  for (int m = 0; m <= order; ++m) {
    fact *= m + 1;
    Rational c = Rational(1) / fact;
    if (m % 2 == 1) c = -c;
    s.coeff(m) = from_rational<K>(c);
  }
  return s;
}

// e^{c x}
template <class K = Rational>
TruncatedSeries<K> exp_series(int order, const Rational& c = Rational(1)) {
  TruncatedSeries<K> s(order);
  Rational term(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) term = term * c / n;
    s.coeff(n) = from_rational<K>(term);
  }
  return s;
}

// (1 - e^{-dx})/x = sum_m (-1)^m d^{m+1} x^m/(m+1)!
template <class K = Rational>
TruncatedSeries<K> partial_geometric_series(int d, int order) {
  if (d < 1) throw std::invalid_argument("partial_geometric_series: d >= 1");
  TruncatedSeries<K> s(order);
  Rational fact(1);
  Rational dp(d);
  for (int m = 0; m <= order; ++m) {
    fact *= m + 1;
    Rational c = dp / fact;
    if (m % 2 == 1) c = -c;
    s.coeff(m) = from_rational<K>(c);
    dp *= d;
  }
  return s;
}

// Equivariant Todd factor for a line with the action of exp(2 pi i theta/d):
// the full Todd series for theta = 0, otherwise 1/(1 - zeta^{-theta} e^{-x}).
inline TruncatedSeries<CyclotomicField> equivariant_todd_line(int theta_index, int d, int order) {
  if (theta_index < 0 || theta_index >= d) throw std::invalid_argument("theta_index in [0, d)");
  if (theta_index == 0) return todd_series<CyclotomicField>(order);
  auto ctx = CycloContext::get(d);
  CyclotomicField zinv = CyclotomicField::zeta_power(ctx, -theta_index);
  TruncatedSeries<CyclotomicField> em(order);
  Rational term(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) term = term * Rational(-1) / n;
    em.coeff(n) = CyclotomicField(term);
  }
  TruncatedSeries<CyclotomicField> denom = TruncatedSeries<CyclotomicField>::constant(order, CyclotomicField(1)) - em * zinv;
  return denom.reciprocal();
}

// --- genus evaluation on nilpotent first Chern classes ----------------------

enum class GenusKind { Multiplicative, Additive };

template <class K>
struct GenusSpec {
  GenusKind kind;
  TruncatedSeries<K> series;
};

template <class K>
GradedClass<K> apply_genus_line(const GenusSpec<K>& g, const GradedClass<K>& c1) {
  const auto& ring = c1.ring();
  if (!c1.is_zero() && !c1.pure_degree(1)) throw std::invalid_argument("apply_genus_line: c1 must have pure degree 1");
  if (g.series.order() < ring->top_degree)
    throw std::invalid_argument("genus series order below ring top degree: nonzero terms would be dropped");
  GradedClass<K> acc = GradedClass<K>::scalar(ring, g.series.coeff(0));
  GradedClass<K> p = GradedClass<K>::one(ring);
  for (int n = 1; n <= ring->top_degree; ++n) {
    p = p * c1;
    if (p.is_zero()) break;
    acc = acc + p * g.series.coeff(n);
  }
  return acc;
}

template <class K>
GenusSpec<K> todd_genus(int order) {
  return {GenusKind::Multiplicative, todd_series<K>(order)};
}
template <class K>
GenusSpec<K> chern_character_genus(int order) {
  return {GenusKind::Additive, exp_series<K>(order)};
}

template <class K>
GradedClass<K> todd_of_sum(const std::vector<GradedClass<K>>& lines, const PresPtr<K>& ring) {
  auto g = todd_genus<K>(ring->top_degree);
  GradedClass<K> acc = GradedClass<K>::one(ring);
  for (const auto& l : lines) acc = acc * apply_genus_line(g, l);
  return acc;
}

template <class K>
GradedClass<K> ch_of_sum(const std::vector<GradedClass<K>>& lines, const PresPtr<K>& ring) {
  auto g = chern_character_genus<K>(ring->top_degree);
  GradedClass<K> acc(ring);
  for (const auto& l : lines) acc = acc + apply_genus_line(g, l);
  return acc;
}

// sum of n-th powers of the line classes; additive genera of a sum pair
// against series coefficients through these
template <class K>
GradedClass<K> power_sum_of_lines(const std::vector<GradedClass<K>>& lines, const PresPtr<K>& ring, int n) {
  GradedClass<K> acc(ring);
  for (const auto& l : lines) acc = acc + l.pow(n);
  return acc;
}

// the additive R series with numeric coefficients at odd orders
inline TruncatedSeries<double> r_genus_series(int order) {
  TruncatedSeries<double> s(order);
  for (int n = 1; n <= order; n += 2) s.coeff(n) = r_coefficient(n).value;
  return s;
}

}  // namespace coverdet
