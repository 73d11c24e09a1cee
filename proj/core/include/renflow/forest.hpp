#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "renflow/errors.hpp"

namespace renflow {

// Canonical unordered rooted tree.  The text encoding is a balanced bracket
// string: "[]" is the single vertex, "[[]]" the ladder of two, "[[][]]" the
// cherry.  Children are kept sorted by the canonical total order
//   degree ascending, then height descending, then encoding lexicographic,
// so two trees are isomorphic iff their encodings are equal.  This order
// lists the trees of each degree ladder-first; the four trees of degree 4
// come out as [[[[]]]], [[[][]]], [[][[]]], [[][][]].
class RootedTree {
 public:
  // Single vertex.
  RootedTree();
  // Canonicalizes (sorts the children recursively); total on finite trees.
  explicit RootedTree(std::vector<RootedTree> children);

  static RootedTree parse(std::string_view brackets);

  const std::string& encoding() const { return encoding_; }
  const std::vector<RootedTree>& children() const { return children_; }
  int degree() const { return degree_; }
  int height() const { return height_; }

  // Vertex counts of all subtrees, root first, in preorder over the
  // canonically sorted children.
  std::vector<int> subtree_weights() const;

  bool operator==(const RootedTree& o) const { return encoding_ == o.encoding_; }
  bool operator!=(const RootedTree& o) const { return !(*this == o); }

  // The canonical total order described above.
  static bool canonical_less(const RootedTree& x, const RootedTree& y);
  bool operator<(const RootedTree& o) const { return canonical_less(*this, o); }

 private:
  std::vector<RootedTree> children_;
  int degree_ = 1;
  int height_ = 0;
  std::string encoding_;

  void finish();
};

struct TreeLess {
  bool operator()(const RootedTree& x, const RootedTree& y) const {
    return RootedTree::canonical_less(x, y);
  }
};

// Commutative multiset of rooted trees; the empty forest is the Hopf unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  static Forest single(const RootedTree& t);

  // Parses a product of bracket strings, e.g. "[][[]]".
  static Forest parse(std::string_view brackets);

  bool is_empty() const { return trees_.empty(); }
  std::size_t size() const { return trees_.size(); }
  int degree() const { return degree_; }
  const std::vector<RootedTree>& trees() const { return trees_; }

  // Multiset union.
  Forest operator*(const Forest& o) const;

  // Concatenated encodings of the canonically sorted trees ("" for the unit).
  const std::string& key() const { return key_; }

  bool operator==(const Forest& o) const { return key_ == o.key_; }
  bool operator!=(const Forest& o) const { return !(*this == o); }

  // Graded order; within a degree, forests with fewer trees come first and
  // ties break lexicographically on the sorted tree lists, so degree 2
  // lists [[]] before [][].
  static bool graded_less(const Forest& x, const Forest& y);

 private:
  std::vector<RootedTree> trees_;  // sorted ascending by the canonical order
  int degree_ = 0;
  std::string key_;
};

struct ForestLess {
  bool operator()(const Forest& x, const Forest& y) const {
    return Forest::graded_less(x, y);
  }
};

// B_+: new root whose children are the forest's trees.
RootedTree graft(const Forest& f);

// All canonical trees of degree <= max_degree, in canonical order.
std::vector<RootedTree> enumerate_trees(int max_degree);

// All canonical forests of degree <= max_degree in graded order, the empty
// forest first.  Throws ResourceCap when more than cap forests would be
// produced.
inline constexpr std::size_t kDefaultForestCap = 50000;
std::vector<Forest> enumerate_forests(int max_degree, std::size_t cap = kDefaultForestCap);

}  // namespace renflow
