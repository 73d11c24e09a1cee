#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace renflow;

namespace {

// Independent counting oracle: r(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d r(d)) r(n+1-k).
std::vector<long> tree_counts(int max_degree) {
  std::vector<long> r(max_degree + 1, 0);
  r[1] = 1;
  for (int n = 1; n < max_degree; ++n) {
    long acc = 0;
    for (int k = 1; k <= n; ++k) {
      long c = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) c += d * r[d];
      }
      acc += c * r[n + 1 - k];
    }
    r[n + 1] = acc / n;
  }
  return r;
}

}  // namespace

TEST_CASE("canonicalization") {
  RootedTree leaf;
  CHECK(leaf.encoding() == "[]");
  CHECK(leaf.degree() == 1);
  CHECK(leaf.height() == 0);

  RootedTree ladder2(std::vector<RootedTree>{leaf});
  CHECK(ladder2.encoding() == "[[]]");

  // children sorted regardless of construction order
  RootedTree ab(std::vector<RootedTree>{ladder2, leaf});
  RootedTree ba(std::vector<RootedTree>{leaf, ladder2});
  CHECK(ab == ba);
  CHECK(ab.encoding() == "[[][[]]]");

  CHECK(RootedTree::parse("[[][]]").degree() == 3);
  CHECK_THROWS_AS(RootedTree::parse("[[]"), ConfigError);
  CHECK_THROWS_AS(RootedTree::parse("[]]"), ConfigError);
}

TEST_CASE("canonicalize is constant on isomorphism classes") {
  Rng rng(99);
  auto trees = enumerate_trees(6);
  for (const auto& t : trees) {
    if (t.children().size() < 2) continue;
    for (int i = 0; i < 5; ++i) {
      auto kids = t.children();
      std::shuffle(kids.begin(), kids.end(),
                   std::mt19937(static_cast<unsigned>(rng.integer(0, 1 << 20))));
      CHECK(RootedTree(kids) == t);
    }
  }
}

TEST_CASE("canonical order lists the small trees as expected") {
  auto trees = enumerate_trees(4);
  REQUIRE(trees.size() == 8);
  CHECK(trees[0].encoding() == "[]");          // t1
  CHECK(trees[1].encoding() == "[[]]");        // t2
  CHECK(trees[2].encoding() == "[[[]]]");      // t3, height 2 precedes
  CHECK(trees[3].encoding() == "[[][]]");      // t4, the cherry
  CHECK(trees[4].encoding() == "[[[[]]]]");    // t5
  CHECK(trees[5].encoding() == "[[[][]]]");    // t6
  CHECK(trees[6].encoding() == "[[][[]]]");    // t7
  CHECK(trees[7].encoding() == "[[][][]]");    // t8
  CHECK(trees[2].height() == 2);
  CHECK(trees[3].height() == 1);
}

TEST_CASE("counts match the independent recurrence") {
  auto oracle = tree_counts(6);  // 1, 1, 2, 4, 9, 20
  auto trees = enumerate_trees(6);
  for (int d = 1; d <= 6; ++d) {
    long n = std::count_if(trees.begin(), trees.end(),
                           [d](const RootedTree& t) { return t.degree() == d; });
    CHECK(n == oracle[d]);
  }
  // forests of degree d are grafts of trees of degree d+1
  auto forests = enumerate_forests(5);
  for (int d = 0; d <= 5; ++d) {
    long n = std::count_if(forests.begin(), forests.end(),
                           [d](const Forest& f) { return f.degree() == d; });
    CHECK(n == oracle[d + 1]);
  }
}

TEST_CASE("forest enumeration order and cap") {
  auto forests = enumerate_forests(2);
  REQUIRE(forests.size() == 4);
  CHECK(forests[0].is_empty());
  CHECK(forests[1].key() == "[]");
  CHECK(forests[2].key() == "[[]]");    // single tree before the square
  CHECK(forests[3].key() == "[][]");
  CHECK_THROWS_AS(enumerate_forests(6, 10), ResourceCapError);

  CHECK(enumerate_forests(0).size() == 1);
}

TEST_CASE("graft") {
  CHECK(graft(Forest()).encoding() == "[]");
  CHECK(graft(Forest::parse("[]")).encoding() == "[[]]");
  CHECK(graft(Forest::parse("[][]")).encoding() == "[[][]]");
  // round trip through children for all small trees
  for (const auto& t : enumerate_trees(6)) {
    CHECK(graft(Forest(t.children())) == t);
  }
}

TEST_CASE("subtree weights") {
  CHECK(RootedTree::parse("[]").subtree_weights() == std::vector<int>{1});
  CHECK(RootedTree::parse("[[]]").subtree_weights() == std::vector<int>{2, 1});
  CHECK(RootedTree::parse("[[[][]]]").subtree_weights() == std::vector<int>{4, 3, 1, 1});
  CHECK(RootedTree::parse("[[][[]]]").subtree_weights() == std::vector<int>{4, 1, 2, 1});
  CHECK(RootedTree::parse("[[][][]]").subtree_weights() == std::vector<int>{4, 1, 1, 1});
}

TEST_CASE("forest multiplication") {
  Forest a = Forest::parse("[]");
  Forest b = Forest::parse("[[]]");
  CHECK(a * b == b * a);
  CHECK((a * b).degree() == 3);
  CHECK((a * Forest()) == a);
  CHECK((a * b).key() == "[][[]]");
  Forest c = Forest::parse("[][]");
  CHECK((a * b) * c == a * (b * c));
}
