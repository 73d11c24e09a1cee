#include "renflow/forest.hpp"

#include <algorithm>

namespace renflow {

RootedTree::RootedTree() { finish(); }

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  finish();
}

void RootedTree::finish() {
  std::sort(children_.begin(), children_.end(), canonical_less);
  degree_ = 1;
  height_ = 0;
  encoding_ = "[";
  for (const auto& c : children_) {
    degree_ += c.degree_;
    height_ = std::max(height_, c.height_ + 1);
    encoding_ += c.encoding_;
  }
  encoding_ += "]";
}

bool RootedTree::canonical_less(const RootedTree& x, const RootedTree& y) {
  if (x.degree_ != y.degree_) return x.degree_ < y.degree_;
  if (x.height_ != y.height_) return x.height_ > y.height_;
  return x.encoding_ < y.encoding_;
}

namespace {

RootedTree parse_tree(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') {
    throw ConfigError("tree encoding: expected '[' at position " + std::to_string(pos));
  }
  ++pos;
  std::vector<RootedTree> children;
  while (pos < s.size() && s[pos] == '[') children.push_back(parse_tree(s, pos));
  if (pos >= s.size() || s[pos] != ']') {
    throw ConfigError("tree encoding: expected ']' at position " + std::to_string(pos));
  }
  ++pos;
  return RootedTree(std::move(children));
}

}  // namespace

RootedTree RootedTree::parse(std::string_view brackets) {
  std::size_t pos = 0;
  RootedTree t = parse_tree(brackets, pos);
  if (pos != brackets.size()) throw ConfigError("tree encoding: trailing characters");
  return t;
}

std::vector<int> RootedTree::subtree_weights() const {
  std::vector<int> w;
  w.push_back(degree_);
  for (const auto& c : children_) {
    auto cw = c.subtree_weights();
    w.insert(w.end(), cw.begin(), cw.end());
  }
  return w;
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(), RootedTree::canonical_less);
  for (const auto& t : trees_) {
    degree_ += t.degree();
    key_ += t.encoding();
  }
}

Forest Forest::single(const RootedTree& t) { return Forest(std::vector<RootedTree>{t}); }

Forest Forest::parse(std::string_view brackets) {
  std::size_t pos = 0;
  std::vector<RootedTree> trees;
  while (pos < brackets.size()) trees.push_back(parse_tree(brackets, pos));
  return Forest(std::move(trees));
}

Forest Forest::operator*(const Forest& o) const {
  std::vector<RootedTree> trees = trees_;
  trees.insert(trees.end(), o.trees_.begin(), o.trees_.end());
  return Forest(std::move(trees));
}

bool Forest::graded_less(const Forest& x, const Forest& y) {
  if (x.degree_ != y.degree_) return x.degree_ < y.degree_;
  // Single trees precede products; within the same shape compare the
  // sorted tree lists in the canonical order, so degree 3 lists
  // [[[]]], [[][]], [][[]], [][][].
  if (x.trees_.size() != y.trees_.size()) return x.trees_.size() < y.trees_.size();
  for (std::size_t i = 0; i < x.trees_.size(); ++i) {
    if (x.trees_[i] != y.trees_[i]) {
      return RootedTree::canonical_less(x.trees_[i], y.trees_[i]);
    }
  }
  return false;
}

RootedTree graft(const Forest& f) { return RootedTree(f.trees()); }

namespace {

// Multisets over trees[first..] of total degree exactly `remaining`,
// appended to `prefix`.
void build_forests(const std::vector<RootedTree>& trees, std::size_t first, int remaining,
                   std::vector<RootedTree>& prefix, std::vector<Forest>& out,
                   std::size_t cap) {
  if (remaining == 0) {
    if (out.size() >= cap) {
      throw ResourceCapError("forest enumeration exceeds cap of " + std::to_string(cap));
    }
    out.push_back(Forest(prefix));
    return;
  }
  for (std::size_t i = first; i < trees.size(); ++i) {
    if (trees[i].degree() > remaining) continue;
    prefix.push_back(trees[i]);
    build_forests(trees, i, remaining - trees[i].degree(), prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int max_degree) {
  std::vector<RootedTree> trees;
  if (max_degree < 1) return trees;
  trees.push_back(RootedTree());
  int done = 1;  // trees of degree <= done are present
  while (done < max_degree) {
    // Trees of degree d+1 are grafts of forests of degree d.
    std::vector<Forest> forests;
    std::vector<RootedTree> prefix;
    build_forests(trees, 0, done, prefix, forests, kDefaultForestCap);
    std::vector<RootedTree> next;
    next.reserve(forests.size());
    for (const auto& f : forests) next.push_back(graft(f));
    std::sort(next.begin(), next.end(), RootedTree::canonical_less);
    trees.insert(trees.end(), next.begin(), next.end());
    ++done;
  }
  std::sort(trees.begin(), trees.end(), RootedTree::canonical_less);
  return trees;
}

std::vector<Forest> enumerate_forests(int max_degree, std::size_t cap) {
  std::vector<Forest> out;
  out.push_back(Forest());  // the unit
  if (max_degree < 1) return out;
  auto trees = enumerate_trees(max_degree);
  std::vector<RootedTree> prefix;
  for (int d = 1; d <= max_degree; ++d) {
    build_forests(trees, 0, d, prefix, out, cap);
  }
  std::sort(out.begin(), out.end(), Forest::graded_less);
  return out;
}

}  // namespace renflow
