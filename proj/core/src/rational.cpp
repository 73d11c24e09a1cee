#include "renflow/rational.hpp"

namespace renflow {

Rational rat_from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0) throw ConfigError("bad decimal integer: " + num);
  if (d.set_str(den, 10) != 0) throw ConfigError("bad decimal integer: " + den);
  if (d == 0) throw ConfigError("rational with zero denominator");
  Rational q(n);
  q /= Rational(d);
  q.canonicalize();
  return q;
}

std::string num_string(const Rational& q) { return q.get_num().get_str(); }

std::string den_string(const Rational& q) { return q.get_den().get_str(); }

std::string rat_string(const Rational& q) {
  if (q.get_den() == 1) return num_string(q);
  return num_string(q) + "/" + den_string(q);
}

}  // namespace renflow
