#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "renflow/birkhoff.hpp"
#include "renflow/toy.hpp"
#include "test_helpers.hpp"

using namespace renflow;

namespace {

RootedTree TR(const char* s) { return RootedTree::parse(s); }

ToyConfig cfg{};
const int kExpTrunc = toy_internal_trunc(cfg) + 2 * cfg.max_degree;

bool chars_agree(const Character& x, const Character& y, int degree) {
  for (const auto& f : enumerate_forests(degree)) {
    if (!x(f).agrees_with(y(f))) return false;
  }
  return true;
}

// Alternative factorization route: solve for plus first via
// plus(x) = holo(phi(x) + sum minus(x') phi(x'')) replaced by the
// convolution identity plus = minus * phi.  Used as the uniqueness oracle.
Character plus_from_minus(const Character& minus, const Character& phi) {
  return convolve(minus, phi);
}

}  // namespace

TEST_CASE("birkhoff factorization of the unit and of the toy character") {
  BirkhoffPair unit_pair = birkhoff(Character::unit());
  CHECK(chars_agree(unit_pair.minus, Character::unit(), 4));
  CHECK(chars_agree(unit_pair.plus, Character::unit(), 4));

  Character phi = toy_character(cfg);
  BirkhoffPair p = birkhoff(phi);

  // counterterm values on normal coordinates (t = 0 reference column)
  CHECK(p.minus(normal_coordinate_by_index(1)) == mono(-1, C(-1)));
  CHECK(p.minus(normal_coordinate_by_index(2)).is_zero());
  CHECK(p.minus(normal_coordinate_by_index(4)) == mono(-1, PI2() * C(1, 18)));
  // the lambda^-2 coefficient +1/24 is forced by the factorization: the
  // reconstruction and uniqueness checks below pin this value
  CHECK(p.minus(normal_coordinate_by_index(8)) == mono(-2, PI2() * C(1, 24)));

  // minus is a pure pole part, plus is holomorphic, phi = minus^{-1} * plus
  Character reconstructed = convolve(char_inverse(p.minus), p.plus);
  for (const auto& f : enumerate_forests(4)) {
    if (!f.is_empty()) {
      CHECK(holo_part(p.minus(f)).is_zero());
      CHECK(pole_part(p.plus(f)).is_zero());
    }
    CHECK(reconstructed(f).agrees_with(phi(f)));
  }

  // uniqueness: the plus part recomputed through the convolution identity
  // agrees with the Bogoliubov plus part
  CHECK(chars_agree(plus_from_minus(p.minus, phi), p.plus, 4));

  // (phi_-)_- = phi_-^{-1} and (phi_-)_+ = eps
  BirkhoffPair pm = birkhoff(p.minus);
  CHECK(chars_agree(pm.minus, char_inverse(p.minus), 4));
  CHECK(chars_agree(pm.plus, Character::unit(), 4));
}

TEST_CASE("locality of the toy character") {
  Character phi = toy_character(cfg);
  LocalityReport rep = is_local(phi, 4, kExpTrunc);
  CHECK(rep.is_local);
  CHECK(rep.checked_degree == 4);
  CHECK(rep.witnesses.empty());

  // any holomorphic character is local
  Rng rng(11);
  LocalityReport hol = is_local(rng.character(3), 3, 12);
  CHECK(hol.is_local);

  // counterterm of the twisted toy character is s-free and equals the
  // untwisted counterterm
  Character tm = birkhoff(twist_rge(phi, kExpTrunc)).minus;
  Character m = birkhoff(phi).minus;
  for (const auto& t : enumerate_trees(4)) {
    CHECK(tm(t) == m(t));
  }
}

TEST_CASE("pole order bounds for local characters") {
  Character phi = toy_character(cfg);
  // primitive normal coordinates have pole order <= 1, and so does log(phi)
  InfinitesimalCharacter lg = char_log(phi);
  for (int i : {2, 3, 5}) {
    ForestPolynomial fi = normal_coordinate_by_index(i);
    CHECK(pole_order(phi(fi)) <= 1);
    CHECK(pole_order(lg(fi)) <= 1);
  }
  // beta~ = lambda R~(phi) is holomorphic everywhere for a local character
  InfinitesimalCharacter bt = beta_tilde(phi);
  for (const auto& t : enumerate_trees(4)) {
    CHECK(pole_part(bt(t)).is_zero());
  }
}

TEST_CASE("beta function of the toy character") {
  Character phi = toy_character(cfg);
  InfinitesimalCharacter b = beta(phi, 4, kExpTrunc);
  CHECK(b(normal_coordinate_by_index(1)) == LaurentSeries::constant(1));
  CHECK(b(normal_coordinate_by_index(2)).is_zero());
  CHECK(b(normal_coordinate_by_index(4)) == LaurentSeries::constant(PI2() * C(-1, 6)));
  CHECK(b(normal_coordinate_by_index(8)).is_zero());

  // beta~(f1) = lambda R~(phi)(f1) = lambda phi(f1) = 1 - a lambda + ...
  LaurentSeries btf1 = beta_tilde(phi)(TR("[]"));
  CHECK(btf1.coeff(0) == C(1));
  CHECK(btf1.coeff(1) == -A());

  // cross-check via Ad(plus(0))(beta~ at 0)
  InfinitesimalCharacter b2 = beta_via_adjoint(phi, 4, kExpTrunc);
  for (const auto& t : enumerate_trees(4)) {
    CHECK(b(t).agrees_with(b2(t)));
  }

  // the constant coefficient of beta~ of the counterterm is -beta (the
  // counterterm itself is not local, so beta~ of it may carry pole terms)
  InfinitesimalCharacter btm = beta_tilde(birkhoff(phi).minus);
  for (const auto& t : enumerate_trees(4)) {
    CHECK(btm(t).coeff(0) == -value_at_zero(b(t)));
  }

  // non-local characters are rejected
  Character bad = Character::from_tree_fn([](const RootedTree& t) {
    return mono(-t.degree(), C(1), 4);  // pole order d with no log structure
  });
  CHECK_THROWS_AS(beta(bad, 2, 12), NotLocalError);
}

TEST_CASE("one-parameter subgroup") {
  Character phi = toy_character(cfg);
  Character f = one_param_subgroup(phi, 3, kExpTrunc);

  // F(0) = eps
  Character f0 = char_substitute(f, Symbol::s, SymbolPoly());
  CHECK(chars_agree(f0, Character::unit(), 3));

  // group law F(s) * F(t) = F(s + t) by polynomial substitution
  Character fs_t = char_substitute(f, Symbol::s, SymbolPoly::symbol(Symbol::t));
  Character sum = char_substitute(f, Symbol::s, S() + T());
  CHECK(chars_agree(convolve(f, fs_t), sum, 3));

  // d/ds|_0 F_{phi_-^{-1}}(s) = beta_phi
  Character minus_inv = char_inverse(birkhoff(phi).minus);
  Character fm = one_param_subgroup(minus_inv, 3, kExpTrunc);
  InfinitesimalCharacter b = beta(phi, 3, kExpTrunc);
  for (const auto& t : enumerate_trees(3)) {
    SymbolPoly d = value_at_zero(fm(t)).derivative(Symbol::s).at_zero(Symbol::s);
    CHECK(d == value_at_zero(b(t)));
  }
}

TEST_CASE("renormalized character and the abstract RGE") {
  Character phi = toy_character(cfg);
  Character ren = renormalized(phi, 4, kExpTrunc);

  CHECK(value_at_zero(ren(normal_coordinate_by_index(1))) == S() - A());
  CHECK(value_at_zero(ren(normal_coordinate_by_index(2))) == PI2() * C(1, 4));
  CHECK(value_at_zero(ren(normal_coordinate_by_index(4))) ==
        PI2() * C(1, 12) * (S() - A()));

  for (const auto& [f, r] : arge_residual(phi, 4, kExpTrunc)) {
    CHECK(r.is_zero());
  }
}
