#include "coverdet/zeta.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace coverdet {

namespace {

using Big = boost::multiprecision::cpp_bin_float_100;

struct BigVal {
  Big value;
  Big error;
};

Big big_pi() {
  // Machin-like arctan series at 100 digits would do; boost ships the constant
  return boost::math::constants::pi<Big>();
}

Big big_abs(const Big& x) { return x < 0 ? Big(-x) : x; }

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1), Rational(-1, 2)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n >= 0");
  std::lock_guard<std::mutex> lk(g_bernoulli_mutex);
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    int m = static_cast<int>(g_bernoulli.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * g_bernoulli[k];
    g_bernoulli.push_back(-acc / Rational(m + 1));
  }
  return g_bernoulli[n];
}

Rational zeta_negative(int n) {
  if (n < 1) throw std::invalid_argument("zeta_negative: n >= 1");
  return -bernoulli(n + 1) / Rational(n + 1);
}

Rational harmonic_number(int n) {
  Rational h(0);
  for (int j = 1; j <= n; ++j) h += Rational(1, j);
  return h;
}

namespace {

Big big_rational(const Rational& r) { return Big(numerator(r).str()) / Big(denominator(r).str()); }

// Euler-Maclaurin gamma: H_N - ln N - 1/(2N) + sum B_{2k}/(2k N^{2k}), with
// the remainder bounded by twice the first omitted term.
BigVal gamma_em() {
  const int N = 60, KMAX = 20;
  Big h = 0;
  for (int j = 1; j <= N; ++j) h += Big(1) / j;
  Big v = h - log(Big(N)) - Big(1) / (2 * N);
  Big npow = Big(N) * Big(N);
  for (int k = 1; k <= KMAX; ++k) {
    v += big_rational(bernoulli(2 * k)) / (2 * k * npow);
    npow *= Big(N) * Big(N);
  }
  Big tail = big_abs(big_rational(bernoulli(2 * KMAX + 2)) / ((2 * KMAX + 2) * npow)) * 2;
  return {v, tail};
}

// zeta(s) for real s >= 2 by Euler-Maclaurin
BigVal zeta_em(int s) {
  const int N = 40, J = 12;
  Big v = 0;
  for (int k = 1; k < N; ++k) v += pow(Big(k), -s);
  Big npow_s = pow(Big(N), -s);
  v += npow_s / 2 + Big(N) * npow_s / (s - 1);
  // P_j(s) = s (s+1) ... (s+2j-2)
  Big p = Big(s);
  Big nfac = npow_s / N;  // N^{-s-1} accumulates N^{-2} per step
  for (int j = 1; j <= J; ++j) {
    Big term = big_rational(bernoulli(2 * j)) * p * nfac;
    Big fact = 1;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    v += term / fact;
    p *= Big(s + 2 * j - 1) * Big(s + 2 * j);
    nfac /= Big(N) * Big(N);
  }
  Big fact = 1;
  for (int i = 2; i <= 2 * J + 2; ++i) fact *= i;
  Big tail = big_abs(big_rational(bernoulli(2 * J + 2)) * p * nfac / fact) * 2;
  return {v, tail};
}

// zeta'(s) for real s >= 2, term-by-term differentiated Euler-Maclaurin
BigVal zeta_prime_em(int s) {
  const int N = 40, J = 12;
  Big lnN = log(Big(N));
  Big v = 0;
  for (int k = 2; k < N; ++k) v -= log(Big(k)) * pow(Big(k), -s);
  Big npow_s = pow(Big(N), -s);
  v -= lnN * npow_s / 2;
  v += Big(N) * npow_s * (-lnN / (s - 1) - Big(1) / (Big(s - 1) * (s - 1)));
  Big p = Big(s);      // product s(s+1)...(s+2j-2)
  Big psum = Big(1) / s;  // sum of reciprocals of the factors
  Big nfac = npow_s / N;
  for (int j = 1; j <= J; ++j) {
    Big fact = 1;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    v += big_rational(bernoulli(2 * j)) * p * nfac * (psum - lnN) / fact;
    p *= Big(s + 2 * j - 1) * Big(s + 2 * j);
    psum += Big(1) / (s + 2 * j - 1) + Big(1) / (s + 2 * j);
    nfac /= Big(N) * Big(N);
  }
  Big fact = 1;
  for (int i = 2; i <= 2 * J + 2; ++i) fact *= i;
  Big tail = big_abs(big_rational(bernoulli(2 * J + 2)) * p * nfac * (big_abs(psum) + lnN) / fact) * 4;
  return {v, tail};
}

BigVal zeta_prime_negative_big(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("zeta_prime_negative: odd n >= 1");
  BigVal g = gamma_em();
  Big psi = -g.value + big_rational(harmonic_number(n));
  BigVal z = zeta_em(n + 1);
  BigVal zp = zeta_prime_em(n + 1);
  Big zneg = big_rational(zeta_negative(n));
  Big ratio = zp.value / z.value;
  Big ratio_err = (zp.error + big_abs(ratio) * z.error) / big_abs(z.value);
  Big v = zneg * (log(2 * big_pi()) - psi - ratio);
  Big err = big_abs(zneg) * (g.error + ratio_err) + big_abs(v) * Big("1e-90");
  return {v, err};
}

}  // namespace

ValueWithError euler_gamma() {
  BigVal g = gamma_em();
  return {g.value.convert_to<double>(), g.error.convert_to<double>() + 1e-18};
}

ValueWithError zeta_prime_negative(int n) {
  BigVal r = zeta_prime_negative_big(n);
  double err = r.error.convert_to<double>() + std::abs(r.value.convert_to<double>()) * 1e-15;
  if (err > 1e-12 * std::abs(r.value.convert_to<double>()) && err > 1e-14)
    throw std::runtime_error("zeta_prime_negative: requested precision unreachable");
  return {r.value.convert_to<double>(), err};
}

ValueWithError zeta_prime_negative_eta(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("zeta_prime_negative_eta: odd n >= 1");
  // eta(s) = sum_j 2^{-j-1} sum_{i<=j} (-1)^i C(j,i) (i+1)^{-s}, all s;
  // differentiate in s and evaluate at s = -n, then convert via
  // eta(s) = (1 - 2^{1-s}) zeta(s).
  const int LEVELS = 140;
  Big etap = 0;
  Big two_pow = Big(1) / 2;
  Big tailmag = 0;
  for (int j = 0; j < LEVELS; ++j) {
    Big inner = 0;
    Int binom = 1;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) {
        binom *= (j - i + 1);
        binom /= i;
      }
      Big t = Big(binom.str()) * pow(Big(i + 1), n) * log(Big(i + 1));
      inner += (i % 2 == 0) ? -t : t;  // derivative of (i+1)^{-s} is -ln(i+1)(i+1)^{-s}
    }
    etap += two_pow * inner;
    tailmag = big_abs(two_pow * inner);
    two_pow /= 2;
  }
  Big scale = Big(1) - pow(Big(2), n + 1);  // 1 - 2^{1-s} at s = -n
  Big zeta_at = big_rational(zeta_negative(n));
  Big dlog2 = pow(Big(2), n + 1) * log(Big(2));  // d/ds[-2^{1-s}] = 2^{1-s} ln 2
  Big v = (etap - dlog2 * zeta_at) / scale;
  Big err = (tailmag * 4 + big_abs(v) * Big("1e-55")) / big_abs(scale);
  return {v.convert_to<double>(), err.convert_to<double>() + std::abs(v.convert_to<double>()) * 1e-15};
}

ValueWithError r_coefficient(int n) {
  if (n < 1) throw std::invalid_argument("r_coefficient: n >= 1");
  if (n % 2 == 0) return {0.0, 0.0};
  BigVal zp = zeta_prime_negative_big(n);
  Big hn = big_rational(harmonic_number(n));
  Big zneg = big_rational(zeta_negative(n));
  Big fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Big v = (2 * zp.value + hn * zneg) / fact;
  Big err = 2 * zp.error / fact;
  double ev = err.convert_to<double>() + std::abs(v.convert_to<double>()) * 1e-15;
  return {v.convert_to<double>(), ev};
}

RCoefficientTable r_coefficient_table(int max_order) {
  RCoefficientTable t;
  t.order = max_order;
  for (int n = 1; n <= max_order; n += 2) {
    auto c = r_coefficient(n);
    t.entries.push_back({n, c.value, c.error});
  }
  return t;
}

}  // namespace coverdet
