#include "renflow/character.hpp"

#include <map>
#include <mutex>

namespace renflow {

namespace {

template <typename K, typename V, typename Less>
class LockedMap {
 public:
  // Reference into the map; nodes are stable under later inserts.
  template <typename F>
  const V& get(const K& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<K, V, Less> map_;
};

}  // namespace

struct Character::State {
  TreeFn fn;
  LockedMap<RootedTree, LaurentSeries, TreeLess> memo;
};

Character Character::unit() {
  return from_tree_fn([](const RootedTree&) { return LaurentSeries(); });
}

Character Character::from_tree_fn(TreeFn fn) {
  auto st = std::make_shared<State>();
  st->fn = std::move(fn);
  return Character(st);
}

Character Character::make_recursive(RecTreeFn fn) {
  auto st = std::make_shared<State>();
  std::weak_ptr<State> weak = st;
  st->fn = [weak, fn](const RootedTree& t) {
    Character self(weak.lock());
    return fn(self, t);
  };
  return Character(st);
}

LaurentSeries Character::operator()(const RootedTree& t) const {
  return st_->memo.get(t, [&] { return st_->fn(t); });
}

LaurentSeries Character::operator()(const Forest& f) const {
  LaurentSeries v = LaurentSeries::constant(1);
  for (const auto& t : f.trees()) v = v * (*this)(t);
  return v;
}

LaurentSeries Character::operator()(const ForestPolynomial& p) const {
  LaurentSeries v;
  for (const auto& [f, c] : p.terms()) v += (*this)(f)*c;
  return v;
}

struct InfinitesimalCharacter::State {
  TreeFn fn;
  std::optional<int> degree;
  LockedMap<RootedTree, LaurentSeries, TreeLess> memo;
};

InfinitesimalCharacter InfinitesimalCharacter::zero() {
  return from_tree_fn([](const RootedTree&) { return LaurentSeries(); });
}

InfinitesimalCharacter InfinitesimalCharacter::from_tree_fn(TreeFn fn,
                                                            std::optional<int> degree) {
  auto st = std::make_shared<State>();
  st->fn = std::move(fn);
  st->degree = degree;
  return InfinitesimalCharacter(st);
}

InfinitesimalCharacter InfinitesimalCharacter::delta(const RootedTree& t) {
  return from_tree_fn(
      [t](const RootedTree& u) {
        return u == t ? LaurentSeries::constant(1) : LaurentSeries();
      },
      t.degree());
}

LaurentSeries InfinitesimalCharacter::operator()(const RootedTree& t) const {
  return st_->memo.get(t, [&] { return st_->fn(t); });
}

LaurentSeries InfinitesimalCharacter::operator()(const Forest& f) const {
  if (f.size() != 1) return LaurentSeries();  // vanishes on 1 and on products
  return (*this)(f.trees().front());
}

LaurentSeries InfinitesimalCharacter::operator()(const ForestPolynomial& p) const {
  LaurentSeries v;
  for (const auto& [f, c] : p.terms()) v += (*this)(f)*c;
  return v;
}

std::optional<int> InfinitesimalCharacter::homogeneous_degree() const { return st_->degree; }

InfinitesimalCharacter InfinitesimalCharacter::with_degree(std::optional<int> d) const {
  auto self = *this;
  return from_tree_fn([self](const RootedTree& t) { return self(t); }, d);
}

Character convolve(const Character& f, const Character& g) {
  return Character::from_tree_fn([f, g](const RootedTree& t) {
    LaurentSeries v;
    for (const auto& [legs, c] : coproduct(t).terms()) {
      v += f(legs.first) * g(legs.second) * c;
    }
    return v;
  });
}

Character char_inverse(const Character& phi) {
  return Character::from_tree_fn(
      [phi](const RootedTree& t) { return phi(antipode(t)); });
}

namespace {

// (h1 * h2 * ... * hk)(x) with every h vanishing on the unit: the Sweedler
// sum collapses onto iterated reduced coproducts.
LaurentSeries reduced_power(const std::function<LaurentSeries(const Forest&)>& h, int k,
                            const Forest& x) {
  if (k == 1) return h(x);
  LaurentSeries v;
  for (const auto& [legs, c] : reduced_coproduct(x).terms()) {
    v += reduced_power(h, k - 1, legs.first) * h(legs.second) * c;
  }
  return v;
}

}  // namespace

Character inf_exp(const InfinitesimalCharacter& z) {
  return Character::from_tree_fn([z](const RootedTree& t) {
    auto h = [&z](const Forest& x) { return z(x); };
    LaurentSeries v;
    Rational factorial(1);
    for (int k = 1; k <= t.degree(); ++k) {
      factorial *= k;
      v += reduced_power(h, k, Forest::single(t)) * (Rational(1) / factorial);
    }
    return v;
  });
}

InfinitesimalCharacter char_log(const Character& phi) {
  return InfinitesimalCharacter::from_tree_fn([phi](const RootedTree& t) {
    auto h = [&phi](const Forest& x) { return x.is_empty() ? LaurentSeries() : phi(x); };
    LaurentSeries v;
    for (int k = 1; k <= t.degree(); ++k) {
      Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
      v += reduced_power(h, k, Forest::single(t)) * c;
    }
    return v;
  });
}

InfinitesimalCharacter commutator(const InfinitesimalCharacter& x,
                                  const InfinitesimalCharacter& y) {
  std::optional<int> degree;
  if (x.homogeneous_degree() && y.homogeneous_degree()) {
    degree = *x.homogeneous_degree() + *y.homogeneous_degree();
  }
  return InfinitesimalCharacter::from_tree_fn(
      [x, y](const RootedTree& t) {
        LaurentSeries v;
        for (const auto& [legs, c] : coproduct(t).terms()) {
          v += x(legs.first) * y(legs.second) * c;
          v -= y(legs.first) * x(legs.second) * c;
        }
        return v;
      },
      degree);
}

InfinitesimalCharacter truncated_bracket(const InfinitesimalCharacter& x,
                                         const InfinitesimalCharacter& y, int k) {
  if (!x.homogeneous_degree() || !y.homogeneous_degree()) {
    throw NotHomogeneousError("truncated bracket needs homogeneous operands");
  }
  const int d = *x.homogeneous_degree() + *y.homogeneous_degree();
  if (d > k) return InfinitesimalCharacter::zero().with_degree(d);
  return commutator(x, y);
}

const ForestPolynomial& normal_coordinate(const RootedTree& t) {
  // log(phi)(t) = sum_k (-1)^{k-1}/k (phi-eps)^{*k}(t); rewriting products of
  // phi-values as phi on concatenated forests turns each Sweedler term into
  // a forest monomial.
  static std::mutex mu;
  static std::map<RootedTree, ForestPolynomial, TreeLess> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  std::function<ForestPolynomial(int, const Forest&)> rep = [&](int k, const Forest& x) {
    if (k == 1) return ForestPolynomial::single(x);
    ForestPolynomial p;
    for (const auto& [legs, c] : reduced_coproduct(x).terms()) {
      p += rep(k - 1, legs.first) * ForestPolynomial::single(legs.second) * c;
    }
    return p;
  };
  ForestPolynomial f;
  for (int k = 1; k <= t.degree(); ++k) {
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    f += rep(k, Forest::single(t)) * c;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t, std::move(f)).first->second;
}

ForestPolynomial normal_coordinate_by_index(int i) {
  if (i < 1) throw ConfigError("normal coordinate index out of range");
  auto trees = enumerate_trees(8);
  if (i > static_cast<int>(trees.size())) {
    throw ConfigError("normal coordinate index out of range");
  }
  return normal_coordinate(trees[i - 1]);
}

InfinitesimalCharacter r_tilde(const Character& phi) {
  Character inv = char_inverse(phi);
  return InfinitesimalCharacter::from_tree_fn([phi, inv](const RootedTree& t) {
    LaurentSeries v;
    for (const auto& [legs, c] : coproduct(t).terms()) {
      if (legs.second.degree() == 0) continue;
      v += inv(legs.first) * phi(legs.second) * (c * rat(legs.second.degree()));
    }
    return v;
  });
}

Character r_tilde_inv(const InfinitesimalCharacter& l) {
  return Character::make_recursive([l](const Character& self, const RootedTree& t) {
    LaurentSeries v = l(t);
    for (const auto& [legs, c] : reduced_coproduct(Forest::single(t)).terms()) {
      v += self(legs.first) * l(legs.second) * c;
    }
    return v * (Rational(1) / Rational(t.degree()));
  });
}

InfinitesimalCharacter adjoint(const Character& g, const InfinitesimalCharacter& l) {
  Character ginv = char_inverse(g);
  return InfinitesimalCharacter::from_tree_fn([g, ginv, l](const RootedTree& t) {
    LaurentSeries v = l(t);
    for (const auto& [legs, c] : reduced_coproduct(Forest::single(t)).terms()) {
      v += g(legs.first) * l(legs.second) * c;
      v += l(legs.first) * ginv(legs.second) * c;
      if (legs.first.degree() >= 2) {
        for (const auto& [inner, c2] : reduced_coproduct(legs.first).terms()) {
          v += g(inner.first) * l(inner.second) * ginv(legs.second) * (c * c2);
        }
      }
    }
    return v;
  });
}

InfinitesimalCharacter adjoint_convolution(const Character& g,
                                           const InfinitesimalCharacter& l) {
  Functional conv = convolve(convolve(Functional::of(g), Functional::of(l)),
                             Functional::of(char_inverse(g)));
  return InfinitesimalCharacter::from_tree_fn(
      [conv](const RootedTree& t) { return conv(Forest::single(t)); });
}

Character twist_rge(const Character& phi, int exp_trunc, Symbol sym) {
  SymbolPoly s = SymbolPoly::symbol(sym);
  return Character::from_tree_fn([phi, s, exp_trunc](const RootedTree& t) {
    return exp_linear(s, t.degree(), exp_trunc) * phi(t);
  });
}

Character twist_scale(const Character& phi, const SymbolPoly& c) {
  return Character::from_tree_fn(
      [phi, c](const RootedTree& t) { return phi(t) * c.pow(t.degree()); });
}

InfinitesimalCharacter inf_add(const InfinitesimalCharacter& x,
                               const InfinitesimalCharacter& y) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, y](const RootedTree& t) { return x(t) + y(t); });
}

InfinitesimalCharacter inf_sub(const InfinitesimalCharacter& x,
                               const InfinitesimalCharacter& y) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, y](const RootedTree& t) { return x(t) - y(t); });
}

InfinitesimalCharacter inf_scale(const InfinitesimalCharacter& x, const SymbolPoly& c) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, c](const RootedTree& t) { return x(t) * c; }, x.homogeneous_degree());
}

InfinitesimalCharacter inf_shift(const InfinitesimalCharacter& x, int d) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, d](const RootedTree& t) { return x(t).shifted(d); }, x.homogeneous_degree());
}

InfinitesimalCharacter inf_derivative(const InfinitesimalCharacter& x, Symbol sym) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, sym](const RootedTree& t) { return x(t).derivative(sym); });
}

InfinitesimalCharacter inf_substitute(const InfinitesimalCharacter& x, Symbol sym,
                                      const SymbolPoly& value) {
  return InfinitesimalCharacter::from_tree_fn(
      [x, sym, value](const RootedTree& t) { return x(t).substitute(sym, value); });
}

InfinitesimalCharacter inf_at_lambda_zero(const InfinitesimalCharacter& x) {
  return InfinitesimalCharacter::from_tree_fn([x](const RootedTree& t) {
    return LaurentSeries::constant(value_at_zero(x(t)));
  });
}

Character char_substitute(const Character& phi, Symbol sym, const SymbolPoly& value) {
  return Character::from_tree_fn(
      [phi, sym, value](const RootedTree& t) { return phi(t).substitute(sym, value); });
}

struct Functional::State {
  Fn fn;
  LockedMap<std::string, LaurentSeries, std::less<std::string>> memo;
  // the forest itself is recoverable from the key, but keep it simple:
};

Functional Functional::from_fn(Fn fn) {
  auto st = std::make_shared<State>();
  st->fn = std::move(fn);
  return Functional(st);
}

Functional Functional::of(const Character& phi) {
  return from_fn([phi](const Forest& f) { return phi(f); });
}

Functional Functional::of(const InfinitesimalCharacter& l) {
  return from_fn([l](const Forest& f) { return l(f); });
}

LaurentSeries Functional::operator()(const Forest& f) const {
  return st_->memo.get(f.key(), [&] { return st_->fn(f); });
}

Functional convolve(const Functional& f, const Functional& g) {
  return Functional::from_fn([f, g](const Forest& x) {
    LaurentSeries v;
    for (const auto& [legs, c] : coproduct(x).terms()) {
      v += f(legs.first) * g(legs.second) * c;
    }
    return v;
  });
}

}  // namespace renflow
