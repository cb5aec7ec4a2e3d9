#pragma once

// Exact smoothness check for W = {t^d + sum alpha_i(z) t^{d-i} = 0} over P^1.
// Both affine charts are covered: the finite chart by a resultant/gcd
// computation over Q[z] modulo the squarefree part of the t-discriminant
// (splitting the modulus when a leading coefficient is a zero divisor), the
// chart at infinity by a univariate gcd at w = 0.

#include <string>

#include "coverdet/covering.hpp"

namespace coverdet {

struct SmoothnessResult {
  bool smooth = false;
  std::string witness;  // description of a singular point when not smooth
};

SmoothnessResult check_smoothness(const CoveringSpec& spec);

}  // namespace coverdet
