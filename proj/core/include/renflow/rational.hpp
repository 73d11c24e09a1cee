#pragma once

#include <gmpxx.h>

#include <string>

#include "renflow/errors.hpp"

namespace renflow {

// Exact arbitrary-precision rationals.  GMP's mpq_class already gives the
// canonical form (coprime, positive denominator) once canonicalize() has
// run; the helpers below keep that invariant at every construction site.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses the bit-exact decimal string pair used by the JSON schema.
Rational rat_from_strings(const std::string& num, const std::string& den);

std::string num_string(const Rational& q);
std::string den_string(const Rational& q);

// "3", "-3/4" — denominator omitted when 1.
std::string rat_string(const Rational& q);

}  // namespace renflow
