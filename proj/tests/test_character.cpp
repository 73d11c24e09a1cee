#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "renflow/toy.hpp"
#include "test_helpers.hpp"

using namespace renflow;

namespace {

Forest F(const char* s) { return Forest::parse(s); }
RootedTree TR(const char* s) { return RootedTree::parse(s); }

bool chars_agree(const Character& x, const Character& y, int degree) {
  for (const auto& f : enumerate_forests(degree)) {
    if (!x(f).agrees_with(y(f))) return false;
  }
  return true;
}

bool infs_agree(const InfinitesimalCharacter& x, const InfinitesimalCharacter& y,
                int degree) {
  for (const auto& f : enumerate_forests(degree)) {
    if (!x(f).agrees_with(y(f))) return false;
  }
  return true;
}

bool inf_is_zero(const InfinitesimalCharacter& x, int degree) {
  for (const auto& t : enumerate_trees(degree)) {
    if (!x(t).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("convolution unit and group laws") {
  Rng rng(2024);
  Character eps = Character::unit();
  for (int i = 0; i < 4; ++i) {
    Character phi = rng.character(4);
    CHECK(chars_agree(convolve(eps, phi), phi, 4));
    CHECK(chars_agree(convolve(phi, eps), phi, 4));
    CHECK(chars_agree(convolve(phi, char_inverse(phi)), eps, 4));
    CHECK(chars_agree(convolve(char_inverse(phi), phi), eps, 4));
    Character psi = rng.character(4);
    Character rho = rng.character(4);
    CHECK(chars_agree(convolve(convolve(phi, psi), rho),
                      convolve(phi, convolve(psi, rho)), 4));
    // convolution of characters is a character: agree with the generic
    // functional convolution on product forests
    Functional fc = convolve(Functional::of(phi), Functional::of(psi));
    Character cc = convolve(phi, psi);
    for (const auto& f : enumerate_forests(4)) {
      CHECK(cc(f).agrees_with(fc(f)));
    }
  }
}

TEST_CASE("infinitesimal character structure") {
  // (Z_t1 * Z_t1)(t2) = 1 via Delta~(t2) = t1 (x) t1
  InfinitesimalCharacter z1 = InfinitesimalCharacter::delta(TR("[]"));
  InfinitesimalCharacter z2 = InfinitesimalCharacter::delta(TR("[[]]"));
  Functional sq = convolve(Functional::of(z1), Functional::of(z1));
  CHECK(sq(F("[[]]")) == LaurentSeries::constant(1));

  // [Z_t1, Z_t2] = 2 Z_t4 on the degree-3 basis
  InfinitesimalCharacter br = commutator(z1, z2);
  CHECK(br(TR("[[[]]]")).is_zero());
  CHECK(br(TR("[[][]]")) == LaurentSeries::constant(2));

  // truncated bracket: cutoff 3 keeps it, cutoff 2 kills it
  CHECK(truncated_bracket(z1, z2, 3)(TR("[[][]]")) == LaurentSeries::constant(2));
  CHECK(inf_is_zero(truncated_bracket(z1, z2, 2), 4));
  CHECK(inf_is_zero(truncated_bracket(z1, z1, 9), 4));
  CHECK_THROWS_AS(truncated_bracket(z1, commutator(z1, z2).with_degree(std::nullopt), 3),
                  NotHomogeneousError);

  // infinitesimal characters vanish on products and satisfy the Leibniz pairing
  Rng rng(5);
  for (int i = 0; i < 5; ++i) {
    InfinitesimalCharacter z = rng.inf_character(3);
    CHECK(z(Forest()).is_zero());
    CHECK(z(F("[][]")).is_zero());
    CHECK(z(F("[][[]]")).is_zero());
  }
}

TEST_CASE("Lie axioms for the commutator") {
  Rng rng(99);
  for (int i = 0; i < 3; ++i) {
    InfinitesimalCharacter a = rng.inf_character(5);
    InfinitesimalCharacter b = rng.inf_character(5);
    InfinitesimalCharacter c = rng.inf_character(5);
    CHECK(infs_agree(commutator(a, b), inf_scale(commutator(b, a), C(-1)), 5));
    InfinitesimalCharacter jac = inf_add(
        inf_add(commutator(commutator(a, b), c), commutator(commutator(b, c), a)),
        commutator(commutator(c, a), b));
    CHECK(inf_is_zero(jac, 5));
  }
}

TEST_CASE("exp and log are mutually inverse") {
  Rng rng(314);
  CHECK(chars_agree(inf_exp(InfinitesimalCharacter::zero()), Character::unit(), 4));
  // exp(Z_t1)(t2) = 1/2
  CHECK(inf_exp(InfinitesimalCharacter::delta(TR("[]")))(TR("[[]]")) ==
        LaurentSeries::constant(C(1, 2)));
  for (int i = 0; i < 3; ++i) {
    InfinitesimalCharacter z = rng.inf_character(5);
    CHECK(infs_agree(char_log(inf_exp(z)), z, 5));
    Character phi = rng.character(5);
    CHECK(chars_agree(inf_exp(char_log(phi)), phi, 5));
    // log(phi)(t1) = phi(t1)
    CHECK(char_log(phi)(TR("[]")).agrees_with(phi(TR("[]"))));
  }
}

TEST_CASE("normal coordinates match the reference list") {
  auto single = [](const char* s, long n = 1, long d = 1) {
    return ForestPolynomial::single(F(s), C(n, d));
  };
  CHECK(normal_coordinate(TR("[]")) == single("[]"));
  CHECK(normal_coordinate(TR("[[]]")) == single("[[]]") - single("[][]", 1, 2));
  CHECK(normal_coordinate(TR("[[[]]]")) ==
        single("[[[]]]") - single("[][[]]") + single("[][][]", 1, 3));
  CHECK(normal_coordinate(TR("[[][]]")) ==
        single("[[][]]") - single("[][[]]") + single("[][][]", 1, 6));
  CHECK(normal_coordinate(TR("[[[[]]]]")) ==
        single("[[[[]]]]") - single("[][[[]]]") - single("[[]][[]]", 1, 2) +
            single("[][][[]]") - single("[][][][]", 1, 4));
  CHECK(normal_coordinate(TR("[[][][]]")) ==
        single("[[][][]]") - single("[][[][]]", 3, 2) + single("[][][[]]", 1, 2));

  // defining property: log(phi)(t) = (phi - eps)(f_t) for every character
  Rng rng(55);
  for (int i = 0; i < 3; ++i) {
    Character phi = rng.character(5);
    for (const auto& t : enumerate_trees(5)) {
      CHECK(char_log(phi)(t).agrees_with(phi(normal_coordinate(t))));
    }
  }

  // ladder normal coordinates are primitive
  CHECK(reduced_coproduct(normal_coordinate(TR("[[]]"))).is_zero());
  CHECK(reduced_coproduct(normal_coordinate(TR("[[[]]]"))).is_zero());
  CHECK(reduced_coproduct(normal_coordinate(TR("[[[[]]]]"))).is_zero());

  // reduced coproducts of f4 and f8 in normal coordinates
  auto f = [](int i) { return normal_coordinate_by_index(i); };
  CHECK(reduced_coproduct(f(4)) ==
        TensorSum::tensor(f(1), f(2)) - TensorSum::tensor(f(2), f(1)));
  TensorSum lhs = reduced_coproduct(f(8));
  TensorSum rhs = (TensorSum::tensor(f(1), f(4)) - TensorSum::tensor(f(4), f(1))) * C(3, 2) +
                  (TensorSum::tensor(f(2), f(1) * f(1)) - TensorSum::tensor(f(1), f(1) * f(2)) -
                   TensorSum::tensor(f(1) * f(2), f(1)) + TensorSum::tensor(f(1) * f(1), f(2))) *
                      C(1, 2);
  CHECK(lhs == rhs);
}

TEST_CASE("r_tilde and its inverse") {
  Rng rng(808);
  CHECK(inf_is_zero(r_tilde(Character::unit()), 4));
  for (int i = 0; i < 3; ++i) {
    Character phi = rng.character(5);
    // primitive case: R~(phi)(t1) = phi(t1)
    CHECK(r_tilde(phi)(TR("[]")).agrees_with(phi(TR("[]"))));
    CHECK(chars_agree(r_tilde_inv(r_tilde(phi)), phi, 5));
    InfinitesimalCharacter l = rng.inf_character(5);
    CHECK(infs_agree(r_tilde(r_tilde_inv(l)), l, 5));
    // graded recursion at degree 2
    Character phi2 = r_tilde_inv(l);
    LaurentSeries expect =
        (l(TR("[[]]")) + l(TR("[]")) * phi2(TR("[]"))) * C(1, 2);
    CHECK(phi2(TR("[[]]")).agrees_with(expect));
  }
  // r_tilde lands in infinitesimal characters: zero on products
  Character phi = rng.character(4);
  Functional raw = convolve(Functional::of(char_inverse(phi)),
                            Functional::from_fn([phi](const Forest& x) {
                              return phi(x) * rat(x.degree());
                            }));
  CHECK(raw(F("[][]")).is_zero());
  CHECK(raw(F("[][[]]")).is_zero());
}

TEST_CASE("adjoint action") {
  Rng rng(161);
  Character eps = Character::unit();
  InfinitesimalCharacter l0 = rng.inf_character(5);
  CHECK(infs_agree(adjoint(eps, l0), l0, 5));

  for (int i = 0; i < 3; ++i) {
    Character g = rng.character(5);
    InfinitesimalCharacter l = rng.inf_character(5);
    // formula route equals convolution route
    CHECK(infs_agree(adjoint(g, l), adjoint_convolution(g, l), 5));
    // primitives are frozen: Ad(g)L(f_i) = L(f_i) for primitive f_i
    CHECK(adjoint(g, l)(normal_coordinate(TR("[[]]")))
              .agrees_with(l(normal_coordinate(TR("[[]]")))));
    CHECK(adjoint(g, l)(TR("[[]]")).agrees_with(l(TR("[[]]"))));
    // Ad(g) is a Lie algebra map
    InfinitesimalCharacter m = rng.inf_character(4);
    CHECK(infs_agree(adjoint(g, commutator(l, m)),
                     commutator(adjoint(g, l), adjoint(g, m)), 4));
  }
}

TEST_CASE("scale twists") {
  ToyConfig cfg;
  Character phi = toy_character(cfg);
  const int et = toy_internal_trunc(cfg) + 2 * cfg.max_degree;
  Character phis = twist_rge(phi, et);
  CHECK(phis(Forest()) == LaurentSeries::constant(1));
  // phi^s(t1) = (1 + s lambda + ...) phi(t1)
  CHECK(phis(TR("[]")).agrees_with(exp_linear(S(), 1, et) * phi(TR("[]"))));

  Rng rng(33);
  Character f = rng.character(4);
  Character g = rng.character(4);
  auto tw = [&](const Character& c) { return twist_rge(c, 12); };
  // (f*g)^s = f^s * g^s
  CHECK(chars_agree(tw(convolve(f, g)), convolve(tw(f), tw(g)), 4));
  // (f^{-1})^s = (f^s)^{-1}
  CHECK(chars_agree(tw(char_inverse(f)), char_inverse(tw(f)), 4));

  // grading automorphism with explicit scale
  Character sc = twist_scale(f, C(2));
  CHECK(sc(TR("[[]]")).agrees_with(f(TR("[[]]")) * C(4)));
  Character sc2 = twist_scale(twist_scale(f, C(2)), C(3));
  CHECK(chars_agree(sc2, twist_scale(f, C(6)), 4));
}

TEST_CASE("substitution in families") {
  Rng rng(7);
  Character f = rng.character(3);
  Character fam = Character::from_tree_fn(
      [f](const RootedTree& t) { return f(t) * (T() + C(1)); });
  Character at_zero = char_substitute(fam, Symbol::t, SymbolPoly());
  CHECK(chars_agree(at_zero, f, 3));
  InfinitesimalCharacter l = rng.inf_character(3);
  InfinitesimalCharacter lt = inf_scale(l, T());
  CHECK(inf_is_zero(inf_substitute(lt, Symbol::t, SymbolPoly()), 3));
  CHECK(infs_agree(inf_derivative(lt, Symbol::t), l, 3));
}
