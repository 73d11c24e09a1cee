#pragma once

#include <map>
#include <string>

#include "renflow/character.hpp"

namespace renflow {

// The regularized toy-model character
//   phi(T) = b^{-lambda deg(T)} prod_v B_{w(T_v)}(lambda),
// where b^{-lambda} expands through the symbol a = log(b) and
// B_j(lambda) = B(j lambda, 1 - j lambda) is the Euler beta function.
struct ToyConfig {
  int max_degree = 4;  // largest tree degree the windows must support
  int trunc = 3;       // holomorphic truncation kept on degree-max products
};

// Expansion of B(j lambda, 1 - j lambda) = (1/(j lambda)) * u(pi j lambda)
// with u(x) = x/sin(x); coefficients are exact rationals times pi2 powers,
// computed by series inversion of sin(x)/x.
LaurentSeries euler_beta_series(int j, int trunc);

Character toy_character(const ToyConfig& cfg = {});

// The toy values on the normal coordinates f1, f2, f4, f8.
std::map<std::string, LaurentSeries> toy_table(const ToyConfig& cfg = {});

// Working truncation used internally so that degree-max_degree convolutions
// still know the first cfg.trunc holomorphic coefficients.
int toy_internal_trunc(const ToyConfig& cfg);

}  // namespace renflow
