#include "renflow/forest_poly.hpp"

#include <sstream>

namespace renflow {

ForestPolynomial ForestPolynomial::single(const Forest& f, const SymbolPoly& c) {
  ForestPolynomial p;
  p.add(f, c);
  return p;
}

ForestPolynomial ForestPolynomial::single(const RootedTree& t, const SymbolPoly& c) {
  return single(Forest::single(t), c);
}

SymbolPoly ForestPolynomial::coeff(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? SymbolPoly() : it->second;
}

void ForestPolynomial::add(const Forest& f, const SymbolPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ForestPolynomial ForestPolynomial::operator-() const {
  ForestPolynomial p;
  for (const auto& [f, c] : terms_) p.terms_.emplace(f, -c);
  return p;
}

ForestPolynomial ForestPolynomial::operator+(const ForestPolynomial& o) const {
  ForestPolynomial p = *this;
  p += o;
  return p;
}

ForestPolynomial ForestPolynomial::operator-(const ForestPolynomial& o) const {
  ForestPolynomial p = *this;
  p -= o;
  return p;
}

ForestPolynomial& ForestPolynomial::operator+=(const ForestPolynomial& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

ForestPolynomial& ForestPolynomial::operator-=(const ForestPolynomial& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

ForestPolynomial ForestPolynomial::operator*(const SymbolPoly& c) const {
  ForestPolynomial p;
  for (const auto& [f, v] : terms_) p.add(f, v * c);
  return p;
}

ForestPolynomial ForestPolynomial::operator*(const Rational& c) const {
  return *this * SymbolPoly::constant(c);
}

ForestPolynomial ForestPolynomial::operator*(const ForestPolynomial& o) const {
  ForestPolynomial p;
  for (const auto& [f1, c1] : terms_) {
    for (const auto& [f2, c2] : o.terms_) p.add(f1 * f2, c1 * c2);
  }
  return p;
}

std::string ForestPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string key = f.is_empty() ? "1" : f.key();
    if (c == SymbolPoly::constant(1)) {
      out << key;
    } else {
      out << "(" << c.to_string() << ")*" << key;
    }
  }
  return out.str();
}

TensorSum TensorSum::single(const Forest& l, const Forest& r, const SymbolPoly& c) {
  TensorSum s;
  s.add(l, r, c);
  return s;
}

TensorSum TensorSum::tensor(const ForestPolynomial& l, const ForestPolynomial& r) {
  TensorSum s;
  for (const auto& [fl, cl] : l.terms()) {
    for (const auto& [fr, cr] : r.terms()) s.add(fl, fr, cl * cr);
  }
  return s;
}

void TensorSum::add(const Forest& l, const Forest& r, const SymbolPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSum TensorSum::operator-() const {
  TensorSum s;
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
  return s;
}

TensorSum TensorSum::operator+(const TensorSum& o) const {
  TensorSum s = *this;
  s += o;
  return s;
}

TensorSum TensorSum::operator-(const TensorSum& o) const {
  TensorSum s = *this;
  s -= o;
  return s;
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorSum TensorSum::operator*(const SymbolPoly& c) const {
  TensorSum s;
  for (const auto& [k, v] : terms_) s.add(k.first, k.second, v * c);
  return s;
}

TensorSum TensorSum::operator*(const TensorSum& o) const {
  TensorSum s;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      s.add(k1.first * k2.first, k1.second * k2.second, c1 * c2);
    }
  }
  return s;
}

std::string TensorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string l = k.first.is_empty() ? "1" : k.first.key();
    std::string r = k.second.is_empty() ? "1" : k.second.key();
    if (c == SymbolPoly::constant(1)) {
      out << l << "(x)" << r;
    } else {
      out << "(" << c.to_string() << ")*" << l << "(x)" << r;
    }
  }
  return out.str();
}

}  // namespace renflow
