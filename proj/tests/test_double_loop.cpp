#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "renflow/birkhoff.hpp"
#include "renflow/double_loop.hpp"
#include "renflow/toy.hpp"
#include "test_helpers.hpp"

using namespace renflow;

namespace {

constexpr int kCutoff = 3;

InfinitesimalCharacter zgen(int index) {
  return InfinitesimalCharacter::delta(cutoff_basis(kCutoff)[index - 1]);
}

DoubleElement primary_only(const InfinitesimalCharacter& z) {
  DoubleElement x;
  x.cutoff = kCutoff;
  x.primary = z;
  x.dual = DualElement(kCutoff);
  return x;
}

DoubleElement dual_only(int index, const LaurentSeries& c) {
  DoubleElement x;
  x.cutoff = kCutoff;
  x.primary = InfinitesimalCharacter::zero();
  x.dual = DualElement(kCutoff);
  x.dual.set(index, c);
  return x;
}

bool duals_agree(const DualElement& a, const DualElement& b) { return a.agrees_with(b); }

}  // namespace

TEST_CASE("pairing") {
  DoubleElement z1 = primary_only(zgen(1));
  DoubleElement z1s = dual_only(1, LaurentSeries::constant(1));
  CHECK(pairing(z1, z1s) == LaurentSeries::constant(1));
  CHECK(pairing(z1s, z1) == LaurentSeries::constant(1));
  // the primary side is isotropic
  CHECK(pairing(z1, primary_only(zgen(2))).is_zero());
  // dual-dual pairing vanishes as well
  CHECK(pairing(z1s, dual_only(2, LaurentSeries::constant(5))).is_zero());
  // symmetry on random mixed elements
  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    DoubleElement x = primary_only(rng.inf_character(kCutoff));
    x.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    DoubleElement y = primary_only(rng.inf_character(kCutoff));
    y.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    CHECK(pairing(x, y).agrees_with(pairing(y, x)));
  }
  DoubleElement other;
  other.cutoff = 4;
  other.dual = DualElement(4);
  CHECK_THROWS_AS(pairing(z1, other), CutoffMismatchError);
}

TEST_CASE("coadjoint actions") {
  // ad*_{Z1}(Z4*)(Z2) = -Z4*([Z1, Z2]) = -2
  DualElement z4s(kCutoff);
  z4s.set(4, LaurentSeries::constant(1));
  DualElement moved = coad_algebra(zgen(1), z4s);
  CHECK(moved.coord(2) == LaurentSeries::constant(-2));
  CHECK(moved.coord(1).is_zero());
  CHECK(moved.coord(3).is_zero());
  CHECK(moved.coord(4).is_zero());

  // group level: the counit acts trivially
  Rng rng(23);
  DualElement alpha(kCutoff);
  alpha.set(2, LaurentSeries::constant(rng.poly()));
  alpha.set(4, rng.series(-1, 2, true));
  CHECK(duals_agree(coad_group(Character::unit(), alpha), alpha));

  // infinitesimal consistency: Ad*(exp(eps Z)) ~ id + eps ad*_Z + O(eps^2)
  // is exercised indirectly by the group-law tests below.
}

TEST_CASE("semidirect group law") {
  Rng rng(29);
  for (int i = 0; i < 4; ++i) {
    SemidirectElement p{rng.character(kCutoff), DualElement(kCutoff)};
    SemidirectElement q{rng.character(kCutoff), DualElement(kCutoff)};
    SemidirectElement r{rng.character(kCutoff), DualElement(kCutoff)};
    p.alpha.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    q.alpha.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    r.alpha.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));

    SemidirectElement e{Character::unit(), DualElement(kCutoff)};
    auto agree = [&](const SemidirectElement& a, const SemidirectElement& b) {
      for (const auto& t : cutoff_basis(kCutoff)) {
        if (!a.g(t).agrees_with(b.g(t))) return false;
      }
      return duals_agree(a.alpha, b.alpha);
    };

    CHECK(agree(semidirect_mul(e, p), p));
    CHECK(agree(semidirect_mul(p, e), p));
    CHECK(agree(semidirect_mul(p, semidirect_inverse(p)), e));
    CHECK(agree(semidirect_mul(semidirect_inverse(p), p), e));
    CHECK(agree(semidirect_mul(semidirect_mul(p, q), r),
                semidirect_mul(p, semidirect_mul(q, r))));
  }
}

TEST_CASE("semidirect birkhoff factorization") {
  ToyConfig cfg{3, 3};
  Character phi = toy_character(cfg);
  Rng rng(31);

  // alpha = 0 reduces to the character factorization
  SemidirectElement p0{phi, DualElement(kCutoff)};
  auto [m0, pl0] = semidirect_birkhoff(p0);
  BirkhoffPair pb = birkhoff(phi);
  for (const auto& t : cutoff_basis(kCutoff)) {
    CHECK(m0.g(t).agrees_with(pb.minus(t)));
    CHECK(pl0.g(t).agrees_with(pb.plus(t)));
  }
  CHECK(m0.alpha.coords().empty());
  CHECK(pl0.alpha.coords().empty());

  // g = eps: alpha splits into its projections
  SemidirectElement pe{Character::unit(), DualElement(kCutoff)};
  LaurentSeries mixed = mono(-2, A()) + mono(-1, C(3)) + mono(0, PI2()) + mono(1, C(1, 7));
  pe.alpha.set(2, mixed);
  auto [me, ple] = semidirect_birkhoff(pe);
  CHECK(me.alpha.coord(2) == -pole_part(mixed));
  CHECK(ple.alpha.coord(2) == holo_part(mixed));

  // reconstruction with the toy character and random single-term duals
  for (int i = 0; i < 3; ++i) {
    SemidirectElement p{phi, DualElement(kCutoff)};
    p.alpha.set(static_cast<int>(rng.integer(1, 4)), rng.series(-2, 2, true));
    auto [minus, plus] = semidirect_birkhoff(p);
    // minus part is pure pole, plus part holomorphic
    for (const auto& [idx, c] : minus.alpha.coords()) CHECK(holo_part(c).is_zero());
    for (const auto& [idx, c] : plus.alpha.coords()) CHECK(pole_part(c).is_zero());
    SemidirectElement recon = semidirect_mul(semidirect_inverse(minus), plus);
    for (const auto& t : cutoff_basis(kCutoff)) {
      CHECK(recon.g(t).agrees_with(phi(t)));
    }
    CHECK(duals_agree(recon.alpha, p.alpha));
  }
}

TEST_CASE("basis swap and primary projection") {
  DoubleElement x = primary_only(zgen(1));
  DoubleElement ix = i_map(x);
  CHECK(ix.dual.coord(1) == mono(-1, C(1)));
  for (const auto& t : cutoff_basis(kCutoff)) CHECK(ix.primary(t).is_zero());

  // I o I = id up to the leg swap convention
  Rng rng(37);
  for (int i = 0; i < 4; ++i) {
    DoubleElement y = primary_only(rng.inf_character(kCutoff));
    y.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-2, 3, true));
    DoubleElement yy = i_map(i_map(y));
    for (const auto& t : cutoff_basis(kCutoff)) {
      CHECK(yy.primary(t).agrees_with(y.primary(t)));
    }
    CHECK(duals_agree(yy.dual, y.dual));
  }

  // project_primary picks the primary leg
  DoubleElement mix = primary_only(inf_shift(zgen(1), -1));
  mix.dual.set(2, LaurentSeries::constant(1));
  InfinitesimalCharacter pr = project_primary(mix);
  CHECK(pr(cutoff_basis(kCutoff)[0]) == mono(-1, C(1)));

  // the swap needs exact coefficients
  DoubleElement trunc_elem = primary_only(InfinitesimalCharacter::from_tree_fn(
      [](const RootedTree&) { return LaurentSeries::constant(C(1), 3); }));
  CHECK_THROWS_AS(i_map(trunc_elem), WindowTooNarrowError);

  // project_primary intertwines the brackets
  for (int i = 0; i < 3; ++i) {
    InfinitesimalCharacter a = rng.inf_character(kCutoff);
    InfinitesimalCharacter b = rng.inf_character(kCutoff);
    // bracket on the double with trivial cocycle: primary part is the
    // commutator of the primary parts
    InfinitesimalCharacter lhs = commutator(project_primary(primary_only(a)),
                                            project_primary(primary_only(b)));
    InfinitesimalCharacter rhs = commutator(a, b);
    for (const auto& t : cutoff_basis(kCutoff)) {
      CHECK(lhs(t).agrees_with(rhs(t)));
    }
  }
}

TEST_CASE("casimir values") {
  // psi_{0,0}(Z1 + Z1* lambda^{-1}) = 2
  DoubleElement x = primary_only(zgen(1));
  x.dual.set(1, mono(-1, C(1)));
  CHECK(casimir_psi(x, 0, 0) == C(2));
  CHECK(casimir_psi_series(x, 0, 0) == C(2));

  // no dual component: zero for all m, n
  DoubleElement p = primary_only(zgen(2));
  for (int m = -1; m <= 1; ++m) {
    for (int n = -1; n <= 1; ++n) {
      CHECK(casimir_psi(p, m, n).is_zero());
    }
  }

  // both routes agree on random elements
  Rng rng(41);
  for (int i = 0; i < 6; ++i) {
    DoubleElement y = primary_only(rng.inf_character(kCutoff));
    y.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-2, 3, true));
    y.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {0, 1}}) {
      CHECK(casimir_psi(y, m, n) == casimir_psi_series(y, m, n));
    }
  }

  // Ad-invariance under (g, 0) for an exact scalar character g
  for (int i = 0; i < 4; ++i) {
    Character g = rng.character(kCutoff);
    DoubleElement y = primary_only(rng.inf_character(kCutoff));
    y.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-2, 2, true));
    DoubleElement moved = double_adjoint(g, y);
    CHECK(casimir_psi(moved, 0, 0) == casimir_psi(y, 0, 0));
    // the pairing itself is Ad-invariant
    DoubleElement z = primary_only(rng.inf_character(kCutoff));
    z.dual.set(static_cast<int>(rng.integer(1, 4)), rng.series(-1, 2, true));
    CHECK(pairing(double_adjoint(g, y), double_adjoint(g, z)).agrees_with(pairing(y, z)));
  }
}

TEST_CASE("structure constants") {
  StructureConstants sc = structure_constants(kCutoff);
  // [Z1, Z2] = 2 Z4 survives the cutoff 3
  auto it = sc.find({1, 2});
  REQUIRE(it != sc.end());
  REQUIRE(it->second.size() == 1);
  CHECK(it->second[0].first == 4);
  CHECK(it->second[0].second == rat(2));
  // antisymmetry
  auto ji = sc.find({2, 1});
  REQUIRE(ji != sc.end());
  CHECK(ji->second[0].second == rat(-2));
  // degree sums beyond the cutoff are absent
  CHECK(sc.find({2, 2}) == sc.end());
  CHECK(sc.find({1, 3}) == sc.end());
  CHECK(sc.find({1, 4}) == sc.end());
}
