#include "renflow/toy.hpp"

#include <vector>

namespace renflow {

namespace {

// Coefficients d_k of x/sin(x) = sum d_k x^{2k}, by inverting
// sin(x)/x = sum (-1)^k x^{2k} / (2k+1)!.
std::vector<Rational> x_over_sin_coeffs(int count) {
  std::vector<Rational> inv;  // (-1)^k/(2k+1)!
  Rational f(1);
  for (int k = 0; k < count; ++k) {
    if (k > 0) f *= Rational(2 * k) * Rational(2 * k + 1);
    inv.push_back(Rational(k % 2 == 0 ? 1 : -1) / f);
  }
  std::vector<Rational> d(count);
  d[0] = 1;
  for (int k = 1; k < count; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i) acc += inv[i] * d[k - i];
    d[k] = -acc;
  }
  return d;
}

}  // namespace

LaurentSeries euler_beta_series(int j, int trunc) {
  if (j < 1) throw ConfigError("euler_beta_series needs j >= 1");
  // exponents -1 + 2k < trunc
  const int count = (trunc + 2) / 2 + 1;
  auto d = x_over_sin_coeffs(count);
  LaurentSeries x = LaurentSeries::zero(trunc);
  Rational jpow = Rational(1) / Rational(j);  // j^{2k-1}, starting at k = 0
  for (int k = 0; k < count; ++k) {
    const int e = -1 + 2 * k;
    if (e >= trunc) break;
    // (1/(j lambda)) * d_k (pi j lambda)^{2k} = d_k pi2^k j^{2k-1} lambda^{2k-1}
    SymbolPoly c = SymbolPoly::symbol(Symbol::pi2, k) * (d[k] * jpow);
    x += LaurentSeries::monomial(e, c, trunc);
    jpow *= Rational(j) * Rational(j);
  }
  return x;
}

int toy_internal_trunc(const ToyConfig& cfg) {
  return cfg.trunc + 2 * cfg.max_degree + 2;
}

Character toy_character(const ToyConfig& cfg) {
  if (cfg.trunc < 1 || cfg.max_degree < 1) throw ConfigError("invalid toy configuration");
  const int base = toy_internal_trunc(cfg);
  return Character::from_tree_fn([base](const RootedTree& t) {
    LaurentSeries v = exp_linear(-SymbolPoly::symbol(Symbol::a), t.degree(), base + 2 * t.degree());
    for (int w : t.subtree_weights()) v = v * euler_beta_series(w, base + t.degree());
    return v;
  });
}

std::map<std::string, LaurentSeries> toy_table(const ToyConfig& cfg) {
  Character phi = toy_character(cfg);
  std::map<std::string, LaurentSeries> table;
  for (int i : {1, 2, 4, 8}) {
    table["f" + std::to_string(i)] = phi(normal_coordinate_by_index(i));
  }
  return table;
}

}  // namespace renflow
