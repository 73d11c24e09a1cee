#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "renflow/hopf.hpp"
#include "renflow/laurent.hpp"

namespace renflow {

// A character is an algebra morphism from the forest algebra into Laurent
// series: it is determined by its tree values and extends multiplicatively,
// with value 1 on the empty forest.  Values are produced lazily by a
// generator and memoized behind a lock, so characters are cheap to copy and
// safe to share across threads.
class Character {
 public:
  using TreeFn = std::function<LaurentSeries(const RootedTree&)>;
  using RecTreeFn = std::function<LaurentSeries(const Character& self, const RootedTree&)>;

  Character() : Character(unit()) {}

  // The counit: 1 on the empty forest, 0 on every tree.
  static Character unit();
  static Character from_tree_fn(TreeFn fn);
  // Generator that may evaluate itself on smaller forests (graded
  // recursions: Bogoliubov, the inverse of the R-map).
  static Character make_recursive(RecTreeFn fn);

  LaurentSeries operator()(const RootedTree& t) const;
  LaurentSeries operator()(const Forest& f) const;
  LaurentSeries operator()(const ForestPolynomial& p) const;

 private:
  struct State;
  explicit Character(std::shared_ptr<State> st) : st_(std::move(st)) {}
  std::shared_ptr<State> st_;
};

// A linear map vanishing on the unit and on products of two or more trees;
// determined by tree values.  Optionally carries a homogeneity degree (set
// on generators and preserved by brackets) for the truncated bracket.
class InfinitesimalCharacter {
 public:
  using TreeFn = std::function<LaurentSeries(const RootedTree&)>;

  InfinitesimalCharacter() : InfinitesimalCharacter(zero()) {}

  static InfinitesimalCharacter zero();
  static InfinitesimalCharacter from_tree_fn(TreeFn fn,
                                             std::optional<int> degree = std::nullopt);
  // The generator Z_T with Z_T(T') = delta_{T,T'}.
  static InfinitesimalCharacter delta(const RootedTree& t);

  LaurentSeries operator()(const RootedTree& t) const;
  LaurentSeries operator()(const Forest& f) const;
  LaurentSeries operator()(const ForestPolynomial& p) const;

  std::optional<int> homogeneous_degree() const;
  InfinitesimalCharacter with_degree(std::optional<int> d) const;

 private:
  struct State;
  explicit InfinitesimalCharacter(std::shared_ptr<State> st) : st_(std::move(st)) {}
  std::shared_ptr<State> st_;
};

// Convolution product of characters (a character again).
Character convolve(const Character& f, const Character& g);

// phi^{-1} = phi o S.
Character char_inverse(const Character& phi);

// exp(Z)(x) = sum_k Z^{*k}(x)/k!, a finite sum per degree.
Character inf_exp(const InfinitesimalCharacter& z);

// log(phi) = sum_k (-1)^{k-1} (phi - eps)^{*k} / k.
InfinitesimalCharacter char_log(const Character& phi);

// Convolution commutator of infinitesimal characters.
InfinitesimalCharacter commutator(const InfinitesimalCharacter& x,
                                  const InfinitesimalCharacter& y);

// The g^(k) bracket: the commutator when deg(x)+deg(y) <= k, zero otherwise.
// Requires both operands homogeneous (NotHomogeneous).
InfinitesimalCharacter truncated_bracket(const InfinitesimalCharacter& x,
                                         const InfinitesimalCharacter& y, int k);

// Normal coordinate of a tree: the unique forest polynomial f with zero unit
// component such that log(phi)(t) = (phi - eps)(f) for every character phi.
// The reference points into an internal cache and stays valid.
const ForestPolynomial& normal_coordinate(const RootedTree& t);

// Normal coordinate of the i-th tree in canonical order (1-based).
ForestPolynomial normal_coordinate_by_index(int i);

// R~(phi) = phi^{-1} * (phi o Y).
InfinitesimalCharacter r_tilde(const Character& phi);

// Inverse of R~ by the graded recursion deg(x) phi(x) = L(x) + phi(x')L(x'').
Character r_tilde_inv(const InfinitesimalCharacter& l);

// Adjoint action written out through the reduced coproduct; agrees with
// g * L * g^{-1}.
InfinitesimalCharacter adjoint(const Character& g, const InfinitesimalCharacter& l);
// The convolution route, kept as an independent cross-check.
InfinitesimalCharacter adjoint_convolution(const Character& g,
                                           const InfinitesimalCharacter& l);

// phi^s: multiplies the value on a degree-n element by exp(s n lambda),
// with the exponential factor truncated at exp_trunc.
Character twist_rge(const Character& phi, int exp_trunc, Symbol sym = Symbol::s);

// phi o theta_c: scales the value on a degree-n element by c^n.  The scale
// is an explicit exact parameter (the grading automorphism at scale c).
Character twist_scale(const Character& phi, const SymbolPoly& c);

// Elementwise helpers.
InfinitesimalCharacter inf_add(const InfinitesimalCharacter& x,
                               const InfinitesimalCharacter& y);
InfinitesimalCharacter inf_sub(const InfinitesimalCharacter& x,
                               const InfinitesimalCharacter& y);
InfinitesimalCharacter inf_scale(const InfinitesimalCharacter& x, const SymbolPoly& c);
InfinitesimalCharacter inf_shift(const InfinitesimalCharacter& x, int d);
InfinitesimalCharacter inf_derivative(const InfinitesimalCharacter& x, Symbol sym);
InfinitesimalCharacter inf_substitute(const InfinitesimalCharacter& x, Symbol sym,
                                      const SymbolPoly& value);
// Evaluates every value at lambda = 0 (NotHolomorphic when impossible).
InfinitesimalCharacter inf_at_lambda_zero(const InfinitesimalCharacter& x);

Character char_substitute(const Character& phi, Symbol sym, const SymbolPoly& value);

// Plain memoized linear functional on forests; the unconstrained convolution
// used for cross-checks and for flows that leave the character group.
class Functional {
 public:
  using Fn = std::function<LaurentSeries(const Forest&)>;

  static Functional from_fn(Fn fn);
  static Functional of(const Character& phi);
  static Functional of(const InfinitesimalCharacter& l);

  LaurentSeries operator()(const Forest& f) const;

 private:
  struct State;
  explicit Functional(std::shared_ptr<State> st) : st_(std::move(st)) {}
  std::shared_ptr<State> st_;
};

// (f * g)(x) = <f (x) g, Delta x>.
Functional convolve(const Functional& f, const Functional& g);

}  // namespace renflow
