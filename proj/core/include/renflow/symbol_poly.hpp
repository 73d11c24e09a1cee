#pragma once

#include <array>
#include <map>
#include <string>

#include "renflow/rational.hpp"

namespace renflow {

// The coefficient symbols form a fixed, closed alphabet:
//   pi2 — stands for pi^2 (pi only ever enters through even powers),
//   a   — the leading-log symbol log(q/mu),
//   s   — the scale/twist parameter,
//   t   — the flow parameter.
enum class Symbol : int { pi2 = 0, a = 1, s = 2, t = 3 };

inline constexpr int kNumSymbols = 4;
inline constexpr std::array<const char*, kNumSymbols> kSymbolNames = {"pi2", "a", "s", "t"};

// Exponent vector over the fixed alphabet.
using Monomial = std::array<int, kNumSymbols>;

inline constexpr Monomial kUnitMonomial = {0, 0, 0, 0};

// Sparse multivariate polynomial over Rational in {pi2, a, s, t}.
// No zero coefficients are ever stored.
class SymbolPoly {
 public:
  SymbolPoly() = default;

  static SymbolPoly constant(const Rational& c);
  static SymbolPoly constant(long c) { return constant(rat(c)); }
  static SymbolPoly symbol(Symbol sym, int exponent = 1);
  static SymbolPoly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the unit monomial).
  Rational constant_term() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  SymbolPoly operator-() const;
  SymbolPoly operator+(const SymbolPoly& o) const;
  SymbolPoly operator-(const SymbolPoly& o) const;
  SymbolPoly operator*(const SymbolPoly& o) const;
  SymbolPoly operator*(const Rational& c) const;
  SymbolPoly& operator+=(const SymbolPoly& o);
  SymbolPoly& operator-=(const SymbolPoly& o);

  bool operator==(const SymbolPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymbolPoly& o) const { return !(*this == o); }

  SymbolPoly pow(int e) const;

  int degree_in(Symbol sym) const;
  bool depends_on(Symbol sym) const { return degree_in(sym) > 0; }

  // d/d sym, exact.
  SymbolPoly derivative(Symbol sym) const;

  // Substitutes a polynomial for one symbol.
  SymbolPoly substitute(Symbol sym, const SymbolPoly& value) const;
  SymbolPoly at_zero(Symbol sym) const { return substitute(sym, SymbolPoly()); }

  // Deterministic rendering; pi2^k prints as pi^(2k).
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

inline SymbolPoly operator*(const Rational& c, const SymbolPoly& p) { return p * c; }

}  // namespace renflow
