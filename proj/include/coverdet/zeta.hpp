#pragma once

// Bernoulli numbers, exact zeta values at nonpositive integers, numeric
// zeta'(-n) at negative odd integers with carried error bounds, and the
// coefficients of the Gillet-Soule R series.

#include <vector>

#include "coverdet/rational.hpp"

namespace coverdet {

// exact Bernoulli number, convention B_1 = -1/2; memoized, safe for
// concurrent read after first use
Rational bernoulli(int n);

// zeta(-n) = -B_{n+1}/(n+1) for n >= 1
Rational zeta_negative(int n);

Rational harmonic_number(int n);

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;  // absolute bound
};

// zeta'(-n) for odd n >= 1 through the functional equation
//   zeta'(-n)/zeta(-n) = ln(2 pi) - psi(n+1) - zeta'(n+1)/zeta(n+1)
// with psi(n+1) = -gamma + H_n and the right-hand zeta values from
// Euler-Maclaurin sums at extended precision.
ValueWithError zeta_prime_negative(int n);

// independent route: globally convergent alternating (eta) series,
// Euler-transformed, continued to s = -n; shares no analytic ingredients
// with the functional-equation route
ValueWithError zeta_prime_negative_eta(int n);

// x^n series coefficient of R: (2 zeta'(-n)/zeta(-n) + H_n) zeta(-n) / n!
// for odd n; zero for even n
ValueWithError r_coefficient(int n);

struct RCoefficientTable {
  int order = 0;
  struct Entry {
    int n;
    double coefficient;
    double error_bound;
  };
  std::vector<Entry> entries;  // odd n <= order only
};

RCoefficientTable r_coefficient_table(int max_order);

// Euler-Maclaurin Euler-Mascheroni constant (used by psi); exposed for tests
ValueWithError euler_gamma();

}  // namespace coverdet
