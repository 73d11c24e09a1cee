#include "renflow/symbol_poly.hpp"

#include <sstream>

namespace renflow {

SymbolPoly SymbolPoly::constant(const Rational& c) {
  SymbolPoly p;
  p.add_term(kUnitMonomial, c);
  return p;
}

SymbolPoly SymbolPoly::symbol(Symbol sym, int exponent) {
  Monomial m = kUnitMonomial;
  m[static_cast<int>(sym)] = exponent;
  return monomial(m, rat(1));
}

SymbolPoly SymbolPoly::monomial(const Monomial& m, const Rational& c) {
  SymbolPoly p;
  p.add_term(m, c);
  return p;
}

bool SymbolPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

Rational SymbolPoly::constant_term() const {
  auto it = terms_.find(kUnitMonomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& o) const {
  SymbolPoly p = *this;
  p += o;
  return p;
}

SymbolPoly SymbolPoly::operator-(const SymbolPoly& o) const {
  SymbolPoly p = *this;
  p -= o;
  return p;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymbolPoly SymbolPoly::operator*(const SymbolPoly& o) const {
  SymbolPoly p;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int i = 0; i < kNumSymbols; ++i) m[i] = m1[i] + m2[i];
      p.add_term(m, c1 * c2);
    }
  }
  return p;
}

SymbolPoly SymbolPoly::operator*(const Rational& c) const {
  SymbolPoly p;
  if (c == 0) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

SymbolPoly SymbolPoly::pow(int e) const {
  SymbolPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

int SymbolPoly::degree_in(Symbol sym) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(sym)]);
  return d;
}

SymbolPoly SymbolPoly::derivative(Symbol sym) const {
  const int i = static_cast<int>(sym);
  SymbolPoly p;
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    p.add_term(d, c * m[i]);
  }
  return p;
}

SymbolPoly SymbolPoly::substitute(Symbol sym, const SymbolPoly& value) const {
  const int i = static_cast<int>(sym);
  SymbolPoly p;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[i] = 0;
    SymbolPoly term = monomial(rest, c);
    if (m[i] > 0) term = term * value.pow(m[i]);
    p += term;
  }
  return p;
}

std::string SymbolPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    std::string factors;
    for (int i = 0; i < kNumSymbols; ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      if (i == static_cast<int>(Symbol::pi2)) {
        factors += "pi^" + std::to_string(2 * m[i]);
      } else {
        factors += kSymbolNames[i];
        if (m[i] > 1) factors += "^" + std::to_string(m[i]);
      }
    }
    if (factors.empty()) {
      out << rat_string(v);
    } else if (v == 1) {
      out << factors;
    } else {
      out << rat_string(v) << "*" << factors;
    }
  }
  return out.str();
}

}  // namespace renflow
