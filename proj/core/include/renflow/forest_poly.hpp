#pragma once

#include <map>
#include <string>
#include <utility>

#include "renflow/forest.hpp"
#include "renflow/symbol_poly.hpp"

namespace renflow {

// Finite linear combination of forests with SymbolPoly coefficients
// (antipode values, normal coordinates).  No zero terms stored.
class ForestPolynomial {
 public:
  ForestPolynomial() = default;
  static ForestPolynomial single(const Forest& f, const SymbolPoly& c = SymbolPoly::constant(1));
  static ForestPolynomial single(const RootedTree& t,
                                 const SymbolPoly& c = SymbolPoly::constant(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Forest, SymbolPoly, ForestLess>& terms() const { return terms_; }
  SymbolPoly coeff(const Forest& f) const;

  void add(const Forest& f, const SymbolPoly& c);

  ForestPolynomial operator-() const;
  ForestPolynomial operator+(const ForestPolynomial& o) const;
  ForestPolynomial operator-(const ForestPolynomial& o) const;
  ForestPolynomial& operator+=(const ForestPolynomial& o);
  ForestPolynomial& operator-=(const ForestPolynomial& o);
  ForestPolynomial operator*(const SymbolPoly& c) const;
  ForestPolynomial operator*(const Rational& c) const;
  // Bilinear product; forests multiply by multiset union.
  ForestPolynomial operator*(const ForestPolynomial& o) const;

  bool operator==(const ForestPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const ForestPolynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<Forest, SymbolPoly, ForestLess> terms_;
};

struct TensorKeyLess {
  bool operator()(const std::pair<Forest, Forest>& x,
                  const std::pair<Forest, Forest>& y) const {
    if (x.first != y.first) return Forest::graded_less(x.first, y.first);
    return Forest::graded_less(x.second, y.second);
  }
};

// Linear combination of forest (x) forest pairs — coproducts and Sweedler sums.
class TensorSum {
 public:
  TensorSum() = default;
  static TensorSum single(const Forest& l, const Forest& r,
                          const SymbolPoly& c = SymbolPoly::constant(1));
  // Bilinear expansion l (x) r of two forest polynomials.
  static TensorSum tensor(const ForestPolynomial& l, const ForestPolynomial& r);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Forest, Forest>, SymbolPoly, TensorKeyLess>& terms() const {
    return terms_;
  }

  void add(const Forest& l, const Forest& r, const SymbolPoly& c);

  TensorSum operator-() const;
  TensorSum operator+(const TensorSum& o) const;
  TensorSum operator-(const TensorSum& o) const;
  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  TensorSum operator*(const SymbolPoly& c) const;
  // Componentwise product (ac (x) bd), used for multiplicative coproducts.
  TensorSum operator*(const TensorSum& o) const;

  bool operator==(const TensorSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorSum& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<std::pair<Forest, Forest>, SymbolPoly, TensorKeyLess> terms_;
};

}  // namespace renflow
