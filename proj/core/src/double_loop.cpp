#include "renflow/double_loop.hpp"

#include <mutex>

#include "renflow/birkhoff.hpp"

namespace renflow {

namespace {

void check_cutoff(int a, int b, const char* what) {
  if (a != b) {
    throw CutoffMismatchError(std::string(what) + ": cutoffs " + std::to_string(a) +
                              " and " + std::to_string(b));
  }
}

}  // namespace

const std::vector<RootedTree>& cutoff_basis(int cutoff) {
  static std::mutex mu;
  static std::map<int, std::vector<RootedTree>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cutoff);
  if (it == cache.end()) it = cache.emplace(cutoff, enumerate_trees(cutoff)).first;
  return it->second;
}

void DualElement::set(int index, const LaurentSeries& c) {
  const auto& basis = cutoff_basis(cutoff_);
  if (index < 1 || index > static_cast<int>(basis.size())) {
    throw ConfigError("dual basis index " + std::to_string(index) +
                      " outside cutoff " + std::to_string(cutoff_));
  }
  if (c.is_zero() && c.is_exact()) {
    coords_.erase(index);
  } else {
    coords_[index] = c;
  }
}

LaurentSeries DualElement::coord(int index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? LaurentSeries() : it->second;
}

DualElement DualElement::operator+(const DualElement& o) const {
  check_cutoff(cutoff_, o.cutoff_, "dual sum");
  DualElement r = *this;
  for (const auto& [i, c] : o.coords_) r.set(i, r.coord(i) + c);
  return r;
}

DualElement DualElement::operator-(const DualElement& o) const {
  check_cutoff(cutoff_, o.cutoff_, "dual difference");
  DualElement r = *this;
  for (const auto& [i, c] : o.coords_) r.set(i, r.coord(i) - c);
  return r;
}

DualElement DualElement::operator-() const {
  DualElement r(cutoff_);
  for (const auto& [i, c] : coords_) r.set(i, -c);
  return r;
}

DualElement DualElement::operator*(const SymbolPoly& c) const {
  DualElement r(cutoff_);
  for (const auto& [i, v] : coords_) r.set(i, v * c);
  return r;
}

bool DualElement::agrees_with(const DualElement& o) const {
  if (cutoff_ != o.cutoff_) return false;
  for (const auto& [i, c] : coords_) {
    if (!c.agrees_with(o.coord(i))) return false;
  }
  for (const auto& [i, c] : o.coords_) {
    if (!coord(i).agrees_with(c)) return false;
  }
  return true;
}

LaurentSeries pairing(const DoubleElement& x, const DoubleElement& y) {
  check_cutoff(x.cutoff, y.cutoff, "pairing");
  const auto& basis = cutoff_basis(x.cutoff);
  LaurentSeries v;
  for (const auto& [i, c] : y.dual.coords()) v += c * x.primary(basis[i - 1]);
  for (const auto& [i, c] : x.dual.coords()) v += c * y.primary(basis[i - 1]);
  return v;
}

DualElement coad_algebra(const InfinitesimalCharacter& x, const DualElement& alpha) {
  const int k = alpha.cutoff();
  const auto& basis = cutoff_basis(k);
  DualElement out(k);
  for (int j = 1; j <= static_cast<int>(basis.size()); ++j) {
    // decompose X by degree so the cutoff bracket applies per component
    LaurentSeries v;
    for (int d = 1; d <= k; ++d) {
      InfinitesimalCharacter xd = InfinitesimalCharacter::from_tree_fn(
          [x, d](const RootedTree& t) {
            return t.degree() == d ? x(t) : LaurentSeries();
          },
          d);
      if (d + basis[j - 1].degree() > k) continue;  // bracket truncated to zero
      InfinitesimalCharacter br =
          truncated_bracket(xd, InfinitesimalCharacter::delta(basis[j - 1]), k);
      for (const auto& [i, c] : alpha.coords()) {
        v -= c * br(basis[i - 1]);
      }
    }
    out.set(j, v);
  }
  return out;
}

DualElement coad_group(const Character& g, const DualElement& alpha) {
  const int k = alpha.cutoff();
  const auto& basis = cutoff_basis(k);
  Character ginv = char_inverse(g);
  DualElement out(k);
  for (int j = 1; j <= static_cast<int>(basis.size()); ++j) {
    InfinitesimalCharacter adj = adjoint(ginv, InfinitesimalCharacter::delta(basis[j - 1]));
    LaurentSeries v;
    for (const auto& [i, c] : alpha.coords()) v += c * adj(basis[i - 1]);
    out.set(j, v);
  }
  return out;
}

DoubleElement double_adjoint(const Character& g, const DoubleElement& x) {
  DoubleElement out;
  out.cutoff = x.cutoff;
  out.primary = adjoint(g, x.primary);
  out.dual = coad_group(g, x.dual);
  return out;
}

SemidirectElement semidirect_mul(const SemidirectElement& p, const SemidirectElement& q) {
  return {convolve(p.g, q.g), p.alpha + coad_group(p.g, q.alpha)};
}

SemidirectElement semidirect_inverse(const SemidirectElement& p) {
  Character ginv = char_inverse(p.g);
  return {ginv, -coad_group(ginv, p.alpha)};
}

std::pair<SemidirectElement, SemidirectElement> semidirect_birkhoff(
    const SemidirectElement& p) {
  BirkhoffPair gb = birkhoff(p.g);
  DualElement moved = coad_group(gb.minus, p.alpha);
  const int k = p.alpha.cutoff();
  DualElement alpha_plus(k), alpha_minus(k);
  for (const auto& [i, c] : moved.coords()) {
    alpha_plus.set(i, holo_part(c));
    alpha_minus.set(i, -pole_part(c));
  }
  return {{gb.minus, alpha_minus}, {gb.plus, alpha_plus}};
}

DoubleElement i_map(const DoubleElement& x) {
  const auto& basis = cutoff_basis(x.cutoff);
  auto reverse = [](const LaurentSeries& v) {
    if (!v.is_exact()) {
      throw WindowTooNarrowError(
          "the basis swap needs exact Laurent polynomial coefficients");
    }
    LaurentSeries r;
    for (const auto& [e, c] : v.terms()) r += LaurentSeries::monomial(-1 - e, c);
    return r;
  };
  DoubleElement out;
  out.cutoff = x.cutoff;
  out.dual = DualElement(x.cutoff);
  // primary coordinates become dual ones and vice versa
  for (int i = 1; i <= static_cast<int>(basis.size()); ++i) {
    LaurentSeries c = x.primary(basis[i - 1]);
    if (!c.is_zero()) out.dual.set(i, reverse(c));
  }
  auto values = std::make_shared<std::map<RootedTree, LaurentSeries, TreeLess>>();
  for (const auto& [i, c] : x.dual.coords()) {
    (*values)[basis[i - 1]] = reverse(c);
  }
  out.primary = InfinitesimalCharacter::from_tree_fn([values](const RootedTree& t) {
    auto it = values->find(t);
    return it == values->end() ? LaurentSeries() : it->second;
  });
  return out;
}

InfinitesimalCharacter project_primary(const DoubleElement& x) { return x.primary; }

SymbolPoly casimir_psi(const DoubleElement& x, int m, int n) {
  const auto& basis = cutoff_basis(x.cutoff);
  const int target = n - 2 * m - 1;
  SymbolPoly acc;
  for (const auto& [j, dual_c] : x.dual.coords()) {
    LaurentSeries prim = x.primary(basis[j - 1]);
    // sum over i + k = target of prim_i dual_k, with window checks
    for (const auto& [i, pc] : prim.terms()) {
      const int k = target - i;
      if (!dual_c.known(k)) {
        throw WindowTooNarrowError("casimir: dual coefficient at lambda^" +
                                   std::to_string(k) + " unknown");
      }
      acc += pc * dual_c.coeff(k);
    }
    for (const auto& [k, dc] : dual_c.terms()) {
      if (!prim.known(target - k)) {
        throw WindowTooNarrowError("casimir: primary coefficient at lambda^" +
                                   std::to_string(target - k) + " unknown");
      }
    }
  }
  return acc * rat(2);
}

SymbolPoly casimir_psi_series(const DoubleElement& x, int m, int n) {
  const auto& basis = cutoff_basis(x.cutoff);
  LaurentSeries total;
  for (const auto& [j, dual_c] : x.dual.coords()) {
    total += x.primary(basis[j - 1]) * dual_c;
  }
  return residue(total.shifted(-n + 2 * m)) * rat(2);
}

StructureConstants structure_constants(int cutoff) {
  static std::mutex mu;
  static std::map<int, StructureConstants> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cutoff);
    if (it != cache.end()) return it->second;
  }
  const auto& basis = cutoff_basis(cutoff);
  StructureConstants sc;
  const int count = static_cast<int>(basis.size());
  for (int i = 1; i <= count; ++i) {
    for (int j = 1; j <= count; ++j) {
      InfinitesimalCharacter br = truncated_bracket(
          InfinitesimalCharacter::delta(basis[i - 1]),
          InfinitesimalCharacter::delta(basis[j - 1]), cutoff);
      std::vector<std::pair<int, Rational>> row;
      for (int k = 1; k <= count; ++k) {
        LaurentSeries v = br(basis[k - 1]);
        if (v.is_zero()) continue;
        row.emplace_back(k, v.coeff(0).constant_term());
      }
      if (!row.empty()) sc.emplace(std::make_pair(i, j), std::move(row));
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(cutoff, std::move(sc)).first->second;
}

}  // namespace renflow
