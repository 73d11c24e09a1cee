#pragma once

#include <map>
#include <string>

#include "renflow/symbol_poly.hpp"

namespace renflow {

// Truncation-tracked Laurent series in lambda with SymbolPoly coefficients.
//
// Semantics of the window: coefficients at exponents e < trunc() are known
// exactly (absent map entries are exact zeros); coefficients at e >= trunc()
// are unknown.  A series with trunc() == kExactTrunc is exact everywhere
// (a Laurent polynomial).  Arithmetic propagates trunc soundly:
//   trunc(x*y) = min(trunc(x) + min_exp(y), trunc(y) + min_exp(x))
//   trunc(x+y) = min(trunc(x), trunc(y))
// where min_exp is the support floor.  Subtraction cancellations raise the
// support floor, which only sharpens later products.
class LaurentSeries {
 public:
  static constexpr int kExactTrunc = 1 << 30;

  // Exact zero.
  LaurentSeries() : trunc_(kExactTrunc) {}

  static LaurentSeries zero(int trunc = kExactTrunc);
  static LaurentSeries constant(const SymbolPoly& c, int trunc = kExactTrunc);
  static LaurentSeries constant(long c, int trunc = kExactTrunc);
  static LaurentSeries monomial(int exp, const SymbolPoly& c, int trunc = kExactTrunc);

  int trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExactTrunc; }
  bool is_zero() const { return terms_.empty(); }

  // Support floor; kExactTrunc when no stored terms.
  int min_exp() const;

  const std::map<int, SymbolPoly>& terms() const { return terms_; }

  bool known(int exp) const { return exp < trunc_; }
  // Exact coefficient at the given exponent; throws EmptyWindow when the
  // exponent lies beyond the valid window.
  SymbolPoly coeff(int exp) const;

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(const SymbolPoly& c) const;
  LaurentSeries operator*(const Rational& c) const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);

  // Multiplication by lambda^d.
  LaurentSeries shifted(int d) const;

  LaurentSeries derivative(Symbol sym) const;
  LaurentSeries substitute(Symbol sym, const SymbolPoly& value) const;

  bool depends_on(Symbol sym) const;

  // Equality of all coefficients below min(trunc(), o.trunc()).
  bool agrees_with(const LaurentSeries& o) const;

  // Exact equality including the window.
  bool operator==(const LaurentSeries& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  void normalize();

  int trunc_;
  std::map<int, SymbolPoly> terms_;
};

inline LaurentSeries operator*(const SymbolPoly& c, const LaurentSeries& x) { return x * c; }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& x) { return x * c; }

// Strictly negative exponents.  Pole parts are finite and complete, so the
// result is exact; requires trunc(x) >= 0 (else WindowTooNarrow).
LaurentSeries pole_part(const LaurentSeries& x);

// Exponents >= 0 with the window of x.
LaurentSeries holo_part(const LaurentSeries& x);

// R = P_+ - P_- (holomorphic part minus pole part).
LaurentSeries r_transform(const LaurentSeries& x);

// max(0, -(lowest exponent with nonzero coefficient)); requires trunc >= 0.
int pole_order(const LaurentSeries& x);

// Coefficient of lambda^{-1}; requires trunc >= 0.
SymbolPoly residue(const LaurentSeries& x);

// Value at lambda = 0.  Throws NotHolomorphic when a pole part is present
// and WindowTooNarrow when the constant coefficient is unknown.
SymbolPoly value_at_zero(const LaurentSeries& x);

struct SeriesAnalysis {
  int pole_order;
  SymbolPoly residue;
};
SeriesAnalysis analyze(const LaurentSeries& x);

// The series sum_{j < trunc} (c*k)^j lambda^j / j!, i.e. exp(c*k*lambda)
// truncated; exact (trunc = kExactTrunc) when c*k is zero.
LaurentSeries exp_linear(const SymbolPoly& c, int k, int trunc);

// Narrows the window for presentation; never widens it.
LaurentSeries clip(const LaurentSeries& x, int trunc);

}  // namespace renflow
