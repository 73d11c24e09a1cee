#include "renflow/hopf.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace renflow {

namespace {

// Read-mostly memo keyed by canonical encodings.  Values are computed
// outside the lock, so recursive fills cannot deadlock.
template <typename V>
class Memo {
 public:
  // Returns a reference into the memo; std::map nodes are never moved, so
  // the reference stays valid while other threads insert.
  template <typename F>
  const V& get(const std::string& key, F&& compute) {
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
  std::map<std::string, V> map_;
};

// Admissible cuts of a tree as (pruned forest, part containing the root);
// includes the empty cut (1, t) but not the total cut (t, 1).  Cut choices
// factor over the root's child branches: cutting the edge to a child sends
// the whole child subtree to the pruned side, keeping it recurses.
using Cut = std::pair<Forest, RootedTree>;

const std::vector<Cut>& admissible_cuts(const RootedTree& t) {
  static Memo<std::vector<Cut>> memo;
  return memo.get(t.encoding(), [&t] {
    std::vector<Cut> acc;
    acc.push_back({Forest(), RootedTree(std::vector<RootedTree>{})});  // bare root
    for (const auto& child : t.children()) {
      std::vector<Cut> child_cuts = admissible_cuts(child);
      std::vector<Cut> next;
      for (const auto& [pruned, kept] : acc) {
        // Cut the edge to this child.
        next.push_back({pruned * Forest::single(child), kept});
        // Keep the edge and distribute a cut of the child.
        for (const auto& [cp, ck] : child_cuts) {
          std::vector<RootedTree> kids = kept.children();
          kids.push_back(ck);
          next.push_back({pruned * cp, RootedTree(std::move(kids))});
        }
      }
      acc = std::move(next);
    }
    return acc;
  });
}

}  // namespace

const TensorSum& coproduct(const RootedTree& t) {
  static Memo<TensorSum> memo;
  return memo.get(t.encoding(), [&t] {
    TensorSum s;
    s.add(Forest::single(t), Forest(), SymbolPoly::constant(1));  // total cut
    for (const auto& [pruned, kept] : admissible_cuts(t)) {
      s.add(pruned, Forest::single(kept), SymbolPoly::constant(1));
    }
    return s;
  });
}

const TensorSum& coproduct(const Forest& f) {
  static Memo<TensorSum> memo;
  return memo.get(f.key(), [&f] {
    TensorSum s = TensorSum::single(Forest(), Forest());
    for (const auto& t : f.trees()) s = s * coproduct(t);
    return s;
  });
}

const TensorSum& reduced_coproduct(const Forest& f) {
  if (f.is_empty()) throw UnitComponentError("reduced coproduct of the unit forest");
  static Memo<TensorSum> memo;
  return memo.get(f.key(), [&f] {
    TensorSum s = coproduct(f);
    s -= TensorSum::single(f, Forest());
    s -= TensorSum::single(Forest(), f);
    return s;
  });
}

TensorSum reduced_coproduct(const ForestPolynomial& p) {
  TensorSum s;
  for (const auto& [f, c] : p.terms()) {
    if (f.is_empty()) throw UnitComponentError("reduced coproduct of a unit component");
    s += reduced_coproduct(f) * c;
  }
  return s;
}

const ForestPolynomial& antipode(const RootedTree& t) {
  static Memo<ForestPolynomial> memo;
  return memo.get(t.encoding(), [&t] {
    // S(x) = -x - sum S(x') x'' over the reduced coproduct.
    ForestPolynomial s = -ForestPolynomial::single(t);
    for (const auto& [legs, c] : reduced_coproduct(Forest::single(t)).terms()) {
      s -= antipode(legs.first) * ForestPolynomial::single(legs.second) * c;
    }
    return s;
  });
}

ForestPolynomial antipode(const Forest& f) {
  ForestPolynomial s = ForestPolynomial::single(Forest());
  for (const auto& t : f.trees()) s = s * antipode(t);
  return s;
}

ForestPolynomial antipode(const ForestPolynomial& p) {
  ForestPolynomial s;
  for (const auto& [f, c] : p.terms()) s += antipode(f) * c;
  return s;
}

ForestPolynomial grading_Y(const ForestPolynomial& p) {
  ForestPolynomial s;
  for (const auto& [f, c] : p.terms()) {
    if (f.degree() == 0) continue;
    s.add(f, c * rat(f.degree()));
  }
  return s;
}

}  // namespace renflow
