#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace coverdet {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

}  // namespace coverdet
