#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include <cmath>

#include "coverdet/series.hpp"
#include "coverdet/zeta.hpp"

using namespace coverdet;

TEST_CASE("bernoulli numbers and recurrence") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 1; n <= 30; ++n) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(acc == 0);  // defining recurrence
  }
  for (int n = 3; n <= 29; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("zeta at nonpositive integers") {
  CHECK(zeta_negative(1) == Rational(-1, 12));
  CHECK(zeta_negative(3) == Rational(1, 120));
  CHECK(zeta_negative(2) == 0);
  for (int m = 1; m <= 6; ++m) CHECK(zeta_negative(2 * m) == 0);
}

TEST_CASE("todd coefficients match the Bernoulli closed form") {
  auto td = todd_series<Rational>(14);
  Rational fact(1);
  for (int n = 0; n <= 14; ++n) {
    if (n > 0) fact *= n;
    Rational expect = bernoulli(n) / fact;
    if (n % 2 == 1) expect = -expect;
    CHECK(td.coeff(n) == expect);
  }
}

TEST_CASE("euler gamma from Euler-Maclaurin") {
  auto g = euler_gamma();
  double ref = boost::math::constants::euler<double>();
  CHECK(std::abs(g.value - ref) < 1e-14);
  CHECK(g.error < 1e-14);
}

TEST_CASE("zeta prime at -1 against the Glaisher-Kinkelin route") {
  // zeta'(-1) = 1/12 - ln A with A the Glaisher-Kinkelin constant
  auto z = zeta_prime_negative(1);
  CHECK(std::abs(z.value - (-0.16542114370045093)) < 1e-12);
  CHECK(z.error < 1e-12 * std::abs(z.value));
}

TEST_CASE("dual-route agreement for zeta prime") {
  for (int n : {1, 3, 5}) {
    auto a = zeta_prime_negative(n);
    auto b = zeta_prime_negative_eta(n);
    CHECK(std::abs(a.value - b.value) / std::abs(a.value) < 1e-10);
  }
  CHECK(zeta_prime_negative(1).value < 0);
  CHECK(zeta_prime_negative_eta(1).value < 0);
}

TEST_CASE("r coefficients") {
  CHECK(r_coefficient(2).value == 0.0);
  auto r1 = r_coefficient(1);
  auto zp1 = zeta_prime_negative(1);
  CHECK(std::abs(r1.value - (2 * zp1.value + to_double(zeta_negative(1)))) < 1e-15);
  // n = 3: (2 zeta'(-3)/zeta(-3) + 11/6) zeta(-3) / 3!
  auto r3 = r_coefficient(3);
  auto zp3 = zeta_prime_negative(3);
  double expect = (2 * zp3.value + to_double(harmonic_number(3)) * to_double(zeta_negative(3))) / 6.0;
  CHECK(std::abs(r3.value - expect) < 1e-15);
  CHECK(r1.error < 1e-10);
  CHECK(r3.error < 1e-10);
}

TEST_CASE("r coefficient table has odd support with tight bounds") {
  auto t = r_coefficient_table(10);
  REQUIRE(t.entries.size() == 5);
  for (const auto& e : t.entries) {
    CHECK(e.n % 2 == 1);
    CHECK(e.error_bound < 1e-10);
  }
  CHECK(t.entries[0].n == 1);
  CHECK(t.entries[0].coefficient == r_coefficient(1).value);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic_number(0) == 0);
  CHECK(harmonic_number(3) == Rational(11, 6));
}

TEST_CASE("r genus series") {
  auto s = r_genus_series(10);
  for (int n = 0; n <= 10; n += 2) CHECK(s.coeff(n) == 0.0);
  CHECK(s.coeff(1) == r_coefficient(1).value);
  CHECK(s.coeff(3) == r_coefficient(3).value);
}
