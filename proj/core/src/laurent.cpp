#include "renflow/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "renflow/errors.hpp"

namespace renflow {

namespace {

// Saturating window arithmetic; exact windows stay exact.
int sat_add(int trunc, long long d) {
  if (trunc >= LaurentSeries::kExactTrunc) return LaurentSeries::kExactTrunc;
  long long v = static_cast<long long>(trunc) + d;
  if (v >= LaurentSeries::kExactTrunc) return LaurentSeries::kExactTrunc;
  return static_cast<int>(v);
}

}  // namespace

LaurentSeries LaurentSeries::zero(int trunc) {
  LaurentSeries x;
  x.trunc_ = trunc;
  return x;
}

LaurentSeries LaurentSeries::constant(const SymbolPoly& c, int trunc) {
  return monomial(0, c, trunc);
}

LaurentSeries LaurentSeries::constant(long c, int trunc) {
  return monomial(0, SymbolPoly::constant(c), trunc);
}

LaurentSeries LaurentSeries::monomial(int exp, const SymbolPoly& c, int trunc) {
  LaurentSeries x;
  x.trunc_ = trunc;
  if (!c.is_zero()) x.terms_.emplace(exp, c);
  x.normalize();
  return x;
}

int LaurentSeries::min_exp() const {
  return terms_.empty() ? kExactTrunc : terms_.begin()->first;
}

SymbolPoly LaurentSeries::coeff(int exp) const {
  if (!known(exp)) {
    throw EmptyWindowError("coefficient of lambda^" + std::to_string(exp) +
                           " outside window (trunc " + std::to_string(trunc_) + ")");
  }
  auto it = terms_.find(exp);
  return it == terms_.end() ? SymbolPoly() : it->second;
}

void LaurentSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || it->first >= trunc_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries x;
  x.trunc_ = trunc_;
  for (const auto& [e, c] : terms_) x.terms_.emplace(e, -c);
  return x;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  LaurentSeries x = *this;
  x += o;
  return x;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
  LaurentSeries x = *this;
  x -= o;
  return x;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) it->second -= c;
  }
  normalize();
  return *this;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  LaurentSeries x;
  x.trunc_ = std::min(sat_add(trunc_, o.min_exp()), sat_add(o.trunc_, min_exp()));
  bool produced = false;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      produced = true;
      const int e = e1 + e2;
      if (e >= x.trunc_) continue;
      SymbolPoly c = c1 * c2;
      if (c.is_zero()) continue;
      auto [it, inserted] = x.terms_.emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  x.normalize();
  if (produced && x.terms_.empty() && x.trunc_ <= min_exp() + o.min_exp()) {
    throw EmptyWindowError("product window is empty");
  }
  return x;
}

LaurentSeries LaurentSeries::operator*(const SymbolPoly& c) const {
  LaurentSeries x;
  x.trunc_ = trunc_;
  if (c.is_zero()) {
    x.trunc_ = kExactTrunc;
    return x;
  }
  for (const auto& [e, v] : terms_) {
    SymbolPoly p = v * c;
    if (!p.is_zero()) x.terms_.emplace(e, p);
  }
  return x;
}

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
  return *this * SymbolPoly::constant(c);
}

LaurentSeries LaurentSeries::shifted(int d) const {
  LaurentSeries x;
  x.trunc_ = sat_add(trunc_, d);
  for (const auto& [e, c] : terms_) x.terms_.emplace(e + d, c);
  return x;
}

LaurentSeries LaurentSeries::derivative(Symbol sym) const {
  LaurentSeries x;
  x.trunc_ = trunc_;
  for (const auto& [e, c] : terms_) {
    SymbolPoly d = c.derivative(sym);
    if (!d.is_zero()) x.terms_.emplace(e, d);
  }
  return x;
}

LaurentSeries LaurentSeries::substitute(Symbol sym, const SymbolPoly& value) const {
  LaurentSeries x;
  x.trunc_ = trunc_;
  for (const auto& [e, c] : terms_) {
    SymbolPoly p = c.substitute(sym, value);
    if (!p.is_zero()) x.terms_.emplace(e, p);
  }
  return x;
}

bool LaurentSeries::depends_on(Symbol sym) const {
  for (const auto& [e, c] : terms_) {
    if (c.depends_on(sym)) return true;
  }
  return false;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  const int upto = std::min(trunc_, o.trunc_);
  for (const auto& [e, c] : terms_) {
    if (e >= upto) continue;
    auto it = o.terms_.find(e);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  for (const auto& [e, c] : o.terms_) {
    if (e >= upto) continue;
    if (terms_.find(e) == terms_.end()) return false;
  }
  return true;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool atom = c.terms().size() == 1;
    std::string cs = c.to_string();
    if (e == 0) {
      out << cs;
    } else {
      if (!atom) out << "(" << cs << ")";
      else out << cs;
      out << "*lambda^" << e;
    }
  }
  if (first) out << "0";
  if (!is_exact()) out << " + O(lambda^" << trunc_ << ")";
  return out.str();
}

LaurentSeries pole_part(const LaurentSeries& x) {
  if (x.trunc() < 0) {
    throw WindowTooNarrowError("pole part undetermined: window ends at lambda^" +
                               std::to_string(x.trunc()));
  }
  LaurentSeries p;  // exact
  for (const auto& [e, c] : x.terms()) {
    if (e < 0) p += LaurentSeries::monomial(e, c);
  }
  return p;
}

LaurentSeries holo_part(const LaurentSeries& x) {
  LaurentSeries h = LaurentSeries::zero(x.trunc());
  for (const auto& [e, c] : x.terms()) {
    if (e >= 0) h += LaurentSeries::monomial(e, c, x.trunc());
  }
  return h;
}

LaurentSeries r_transform(const LaurentSeries& x) { return holo_part(x) - pole_part(x); }

int pole_order(const LaurentSeries& x) {
  LaurentSeries p = pole_part(x);
  if (p.is_zero()) return 0;
  return -p.min_exp();
}

SymbolPoly residue(const LaurentSeries& x) {
  if (x.trunc() < 0) {
    throw WindowTooNarrowError("residue undetermined: window ends at lambda^" +
                               std::to_string(x.trunc()));
  }
  return x.coeff(-1);
}

SymbolPoly value_at_zero(const LaurentSeries& x) {
  if (!pole_part(x).is_zero()) {
    throw NotHolomorphicError("value at lambda=0 of a series with pole part " +
                              pole_part(x).to_string());
  }
  if (x.trunc() < 1) {
    throw WindowTooNarrowError("constant coefficient outside window");
  }
  return x.coeff(0);
}

SeriesAnalysis analyze(const LaurentSeries& x) { return {pole_order(x), residue(x)}; }

LaurentSeries exp_linear(const SymbolPoly& c, int k, int trunc) {
  SymbolPoly ck = c * rat(k);
  if (ck.is_zero()) return LaurentSeries::constant(1);
  LaurentSeries x = LaurentSeries::zero(trunc);
  SymbolPoly power = SymbolPoly::constant(1);
  Rational factorial(1);
  for (int j = 0; j < trunc; ++j) {
    if (j > 0) {
      power = power * ck;
      factorial *= j;
    }
    x += LaurentSeries::monomial(j, power * (Rational(1) / factorial), trunc);
  }
  return x;
}

LaurentSeries clip(const LaurentSeries& x, int trunc) {
  const int upto = std::min(trunc, x.trunc());
  LaurentSeries out = LaurentSeries::zero(upto);
  for (const auto& [e, c] : x.terms()) {
    if (e < upto) out += LaurentSeries::monomial(e, c, upto);
  }
  return out;
}

}  // namespace renflow
