#pragma once

#include <map>
#include <utility>
#include <vector>

#include "renflow/character.hpp"

namespace renflow {

// The double of the Lie algebra of infinitesimal characters at a finite
// degree cutoff k: elements of the dual side are finite combinations of the
// dual basis of the tree generators Z_i with deg(T_i) <= k, with Laurent
// series coefficients.  The bracket on the double uses the trivial cocycle,
// so the dual side is abelian and the mixed bracket is the coadjoint action.
class DualElement {
 public:
  explicit DualElement(int cutoff = 4) : cutoff_(cutoff) {}

  int cutoff() const { return cutoff_; }
  const std::map<int, LaurentSeries>& coords() const { return coords_; }

  // Coefficient of Z*_i (indices follow the canonical tree order, 1-based).
  void set(int index, const LaurentSeries& c);
  LaurentSeries coord(int index) const;

  DualElement operator+(const DualElement& o) const;
  DualElement operator-(const DualElement& o) const;
  DualElement operator-() const;
  DualElement operator*(const SymbolPoly& c) const;

  bool agrees_with(const DualElement& o) const;

 private:
  int cutoff_;
  std::map<int, LaurentSeries> coords_;  // no zero entries
};

struct DoubleElement {
  int cutoff = 4;
  InfinitesimalCharacter primary;
  DualElement dual{4};
};

// Trees of degree <= cutoff in canonical order; basis of the truncated
// algebra (1-based indexing used throughout this module).
const std::vector<RootedTree>& cutoff_basis(int cutoff);

// <(a, b*), (c, d*)> = d*(a) + b*(c), extended bilinearly over series.
LaurentSeries pairing(const DoubleElement& x, const DoubleElement& y);

// (ad*_X alpha)(Z) = -alpha([X, Z]) with the cutoff bracket.
DualElement coad_algebra(const InfinitesimalCharacter& x, const DualElement& alpha);

// (Ad*(g) alpha)(Z) = alpha(Ad(g^{-1}) Z).
DualElement coad_group(const Character& g, const DualElement& alpha);

// Ad of the semidirect group element (g, 0) on the double.
DoubleElement double_adjoint(const Character& g, const DoubleElement& x);

// Semidirect product group G x| g*: (g, a)(h, b) = (gh, a + Ad*(g) b).
struct SemidirectElement {
  Character g;
  DualElement alpha;
};

SemidirectElement semidirect_mul(const SemidirectElement& p, const SemidirectElement& q);
SemidirectElement semidirect_inverse(const SemidirectElement& p);

// Birkhoff factorization (g, alpha) = minus^{-1} * plus with the plus part
// holomorphic and the minus part pure pole:
//   alpha_+ = P_+(Ad*(g_-) alpha),  alpha_- = -P_-(Ad*(g_-) alpha).
std::pair<SemidirectElement, SemidirectElement> semidirect_birkhoff(
    const SemidirectElement& p);

// The basis/dual-basis swap with lambda-exponent i -> -1-i.  Requires exact
// series coefficients (loop elements are Laurent polynomials).
DoubleElement i_map(const DoubleElement& x);

InfinitesimalCharacter project_primary(const DoubleElement& x);

// psi_{m,n}(L) = 2 sum_j sum_{i+k = n-2m-1} L_i^j L_k^{j+l}; throws
// WindowTooNarrow when a window cannot decide a contribution.
SymbolPoly casimir_psi(const DoubleElement& x, int m, int n);

// Independent route through series products and a residue.
SymbolPoly casimir_psi_series(const DoubleElement& x, int m, int n);

// Structure constants of the cutoff bracket: (i, j) -> list of (k, c)
// with [Z_i, Z_j] = sum c Z_k; computed on demand and cached.
using StructureConstants = std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>;
StructureConstants structure_constants(int cutoff);

}  // namespace renflow
