#pragma once

// Exact cyclotomic scalars. Two flavours are needed:
//   Cyclotomic       — the group ring Q[z]/(z^d - 1); characters and traces
//                      live here, equality is coefficientwise.
//   CyclotomicField  — Q(zeta_d) = Q[x]/Phi_d(x); the Lefschetz denominators
//                      1 - zeta^{-g} are invertible only here.
// Conversion ring -> field is reduction mod Phi_d.

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "coverdet/polynomial.hpp"
#include "coverdet/rational.hpp"

namespace coverdet {

RatPoly cyclotomic_polynomial(int d);

struct CycloContext {
  int d = 0;
  RatPoly phi;  // Phi_d

  static std::shared_ptr<const CycloContext> get(int d) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloContext>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycloContext>();
    ctx->d = d;
    ctx->phi = cyclotomic_polynomial(d);
    cache[d] = ctx;
    return ctx;
  }
};

inline RatPoly cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d >= 1");
  // x^d - 1 divided by all proper-divisor cyclotomics
  std::vector<Rational> v(d + 1, Rational(0));
  v[0] = Rational(-1);
  v[d] = Rational(1);
  RatPoly p{std::move(v)};
  RatPoly num = p;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = num / cyclotomic_polynomial(e);
  return num;
}

// Element of Q(zeta_d). A default-constructed value is the rational 0 with
// no attached context; arithmetic adopts the context of the other operand.
class CyclotomicField {
 public:
  CyclotomicField() = default;
  CyclotomicField(int n) : v_(RatPoly(Rational(n))) {}
  explicit CyclotomicField(Rational r) : v_(RatPoly(std::move(r))) {}
  CyclotomicField(std::shared_ptr<const CycloContext> ctx, RatPoly v) : ctx_(std::move(ctx)), v_(std::move(v)) {
    reduce();
  }

  static CyclotomicField zeta_power(std::shared_ptr<const CycloContext> ctx, long e) {
    long d = ctx->d;
    long r = ((e % d) + d) % d;
    return CyclotomicField(ctx, RatPoly::monomial(static_cast<int>(r)));
  }

  const std::shared_ptr<const CycloContext>& context() const { return ctx_; }
  const RatPoly& poly() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_rational() const { return v_.degree() <= 0; }
  Rational rational_part() const { return v_.coeff(0); }

  CyclotomicField operator+(const CyclotomicField& o) const { return CyclotomicField(merge(o), v_ + o.v_); }
  CyclotomicField operator-(const CyclotomicField& o) const { return CyclotomicField(merge(o), v_ - o.v_); }
  CyclotomicField operator-() const { return CyclotomicField(ctx_, -v_); }
  CyclotomicField operator*(const CyclotomicField& o) const { return CyclotomicField(merge(o), v_ * o.v_); }
  CyclotomicField operator/(const CyclotomicField& o) const { return *this * o.inverse(); }
  CyclotomicField& operator+=(const CyclotomicField& o) { return *this = *this + o; }
  CyclotomicField& operator-=(const CyclotomicField& o) { return *this = *this - o; }
  CyclotomicField& operator*=(const CyclotomicField& o) { return *this = *this * o; }

  CyclotomicField inverse() const {
    if (v_.is_zero()) throw std::domain_error("inverse of zero");
    if (v_.degree() == 0) return CyclotomicField(ctx_, RatPoly(Rational(1) / v_.coeff(0)));
    auto [g, u, w] = extended_gcd(v_, ctx_->phi);
    if (g.degree() != 0) throw std::domain_error("non-invertible cyclotomic element");
    return CyclotomicField(ctx_, u);
  }

  bool operator==(const CyclotomicField& o) const { return v_ == o.v_; }
  bool operator!=(const CyclotomicField& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    int d = ctx_ ? ctx_->d : 1;
    std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / d);
    std::complex<double> acc(0.0, 0.0);
    for (int i = v_.degree(); i >= 0; --i) acc = acc * z + std::complex<double>(to_double(v_.coeff(i)), 0.0);
    return acc;
  }

  std::string str() const { return v_.str("z"); }

 private:
  std::shared_ptr<const CycloContext> merge(const CyclotomicField& o) const {
    if (ctx_ && o.ctx_ && ctx_->d != o.ctx_->d) throw std::invalid_argument("mixed cyclotomic contexts");
    return ctx_ ? ctx_ : o.ctx_;
  }
  void reduce() {
    if (ctx_ && v_.degree() >= ctx_->phi.degree()) v_ = v_ % ctx_->phi;
  }

  std::shared_ptr<const CycloContext> ctx_;
  RatPoly v_;
};

inline std::string to_string(const CyclotomicField& c) { return c.str(); }
inline double to_double(const CyclotomicField& c) {
  if (!c.is_rational()) throw std::domain_error("non-rational cyclotomic to double");
  return to_double(c.rational_part());
}

// Element of the group ring Q[z]/(z^d - 1), coefficient vector on 1..z^{d-1}.
class Cyclotomic {
 public:
  Cyclotomic() : d_(1), v_(1, Rational(0)) {}
  explicit Cyclotomic(int d) : d_(d), v_(d, Rational(0)) {}
  Cyclotomic(int d, std::vector<Rational> v) : d_(d), v_(std::move(v)) {
    if (static_cast<int>(v_.size()) != d_) throw std::invalid_argument("coefficient vector size != d");
  }

  static Cyclotomic zeta_power(int d, long e) {
    Cyclotomic c(d);
    long r = ((e % d) + d) % d;
    c.v_[r] = Rational(1);
    return c;
  }
  static Cyclotomic constant(int d, Rational r) {
    Cyclotomic c(d);
    c.v_[0] = std::move(r);
    return c;
  }

  int order() const { return d_; }
  const std::vector<Rational>& coeffs() const { return v_; }

  Cyclotomic operator+(const Cyclotomic& o) const {
    check(o);
    Cyclotomic r(d_);
    for (int i = 0; i < d_; ++i) r.v_[i] = v_[i] + o.v_[i];
    return r;
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    check(o);
    Cyclotomic r(d_);
    for (int i = 0; i < d_; ++i) r.v_[i] = v_[i] - o.v_[i];
    return r;
  }
  Cyclotomic operator*(const Cyclotomic& o) const {
    check(o);
    Cyclotomic r(d_);
    for (int i = 0; i < d_; ++i) {
      if (v_[i] == 0) continue;
      for (int j = 0; j < d_; ++j) r.v_[(i + j) % d_] += v_[i] * o.v_[j];
    }
    return r;
  }
  Cyclotomic operator*(const Rational& k) const {
    Cyclotomic r(d_);
    for (int i = 0; i < d_; ++i) r.v_[i] = v_[i] * k;
    return r;
  }
  bool operator==(const Cyclotomic& o) const { return d_ == o.d_ && v_ == o.v_; }

  CyclotomicField to_field() const {
    auto ctx = CycloContext::get(d_);
    return CyclotomicField(ctx, RatPoly(std::vector<Rational>(v_)));
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / d_);
    std::complex<double> acc(0.0, 0.0);
    for (int i = d_ - 1; i >= 0; --i) acc = acc * z + std::complex<double>(coverdet::to_double(v_[i]), 0.0);
    return acc;
  }

  std::string str() const { return RatPoly(std::vector<Rational>(v_)).str("z"); }

 private:
  void check(const Cyclotomic& o) const {
    if (d_ != o.d_) throw std::invalid_argument("mixed cyclotomic orders");
  }
  int d_;
  std::vector<Rational> v_;
};

}  // namespace coverdet
