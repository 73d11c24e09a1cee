#pragma once

#include <string>
#include <vector>

#include "renflow/character.hpp"

namespace renflow {

// Minimal-subtraction Birkhoff factorization phi = minus^{-1} * plus with
// minus valued in pure pole parts and plus holomorphic on nonunit forests.
struct BirkhoffPair {
  Character minus;
  Character plus;
};

// Bogoliubov recursion on trees:
//   phi_bar(x) = phi(x) + sum minus(x') phi(x'')
//   minus(x) = -pole(phi_bar(x)),  plus(x) = holo(phi_bar(x)),
// both extended multiplicatively.
BirkhoffPair birkhoff(const Character& phi);

struct LocalityWitness {
  std::string target;             // bracket key of a forest, or a coordinate label
  LaurentSeries s_dependent_part; // the scale-dependent part of the counterterm value
};

struct LocalityReport {
  bool is_local = true;
  int checked_degree = 0;
  std::vector<LocalityWitness> witnesses;
};

// Checks whether the counterterm of the scale-twisted character depends on
// the twist symbol, tree by tree up to max_degree.  The verdict is explicit
// about the degree up to which it was established.
LocalityReport is_local(const Character& phi, int max_degree, int exp_trunc);

// beta~ = lambda * R~(phi); holomorphic when phi is local.
InfinitesimalCharacter beta_tilde(const Character& phi);

// beta(x) = -deg(x) * Res(minus(x)), scalar valued.  Requires locality up
// to check_degree (NotLocal otherwise).
InfinitesimalCharacter beta(const Character& phi, int check_degree, int exp_trunc);

// Independent route Ad(plus(0))(beta~ at lambda=0), for cross-checks.
InfinitesimalCharacter beta_via_adjoint(const Character& phi, int check_degree,
                                        int exp_trunc);

// F(x) = (plus^{-1} * twisted-plus)(x) at lambda = 0: the one-parameter
// subgroup of scalar characters, polynomial in the twist symbol.
Character one_param_subgroup(const Character& phi, int check_degree, int exp_trunc);

// Renormalized character: value at lambda=0 of the plus part of the twisted
// character, polynomial in the twist symbol.
Character renormalized(const Character& phi, int check_degree, int exp_trunc);

// Residual of d/ds ren(s) - beta * ren(s) on every forest of degree
// <= check_degree; identically zero when the flow equation holds.
std::vector<std::pair<Forest, SymbolPoly>> arge_residual(const Character& phi,
                                                         int check_degree, int exp_trunc);

}  // namespace renflow
