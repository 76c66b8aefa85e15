#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tg/rng.hpp"
#include "tg/tree.hpp"

using namespace tg;

namespace {

Tree random_tree(int d, int carets, Rng& rng) {
  Tree t(d);
  for (int i = 0; i < carets; ++i) t = t.add_caret(rng.range(1, t.leaf_count()));
  return t;
}

// All trees of the given arity with exactly `carets` carets.
std::vector<Tree> trees_with_carets(int d, int carets) {
  if (carets == 0) return {Tree(d)};
  std::set<std::string> seen;
  std::vector<Tree> out;
  for (const Tree& t : trees_with_carets(d, carets - 1)) {
    for (int k = 1; k <= t.leaf_count(); ++k) {
      Tree u = t.add_caret(k);
      if (seen.insert(u.text()).second) out.push_back(u);
    }
  }
  return out;
}

// Brute-force oracle for the smallest common expansion: breadth-first search
// over expansions of `a` until one is also an expansion of `b`.
Tree join_oracle(const Tree& a, const Tree& b) {
  auto is_expansion_of = [](const Tree& big, const Tree& small) {
    try {
      expansion_path(small, big);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  std::vector<Tree> frontier{a};
  std::set<std::string> seen{a.text()};
  for (;;) {
    std::vector<Tree> next;
    for (const Tree& t : frontier) {
      if (is_expansion_of(t, b)) return t;
      for (int k = 1; k <= t.leaf_count(); ++k) {
        Tree u = t.add_caret(k);
        if (seen.insert(u.text()).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

TEST_CASE("leaf counts") {
  CHECK(Tree(2).leaf_count() == 1);
  CHECK(Tree::caret(2).leaf_count() == 2);
  // two carets, three leaves
  CHECK(Tree::parse(2, "(L(LL))").leaf_count() == 3);
  CHECK(Tree::parse(3, "(LLL)").leaf_count() == 3);
  for (int d : {2, 3, 4}) {
    Rng rng(7 + static_cast<unsigned>(d));
    for (int i = 0; i < 30; ++i) {
      Tree t = random_tree(d, rng.range(0, 6), rng);
      CHECK(t.leaf_count() % (d - 1) == 1 % (d - 1));
    }
  }
}

TEST_CASE("add_caret") {
  CHECK(Tree(2).add_caret(1) == Tree::parse(2, "(LL)"));
  CHECK(Tree::caret(2).add_caret(2) == Tree::parse(2, "(L(LL))"));
  // arity 3: expanding the left child of a caret gives five leaves
  Tree t = Tree::caret(3).add_caret(1);
  CHECK(t == Tree::parse(3, "((LLL)LL)"));
  CHECK(t.leaf_count() == 5);
  CHECK_THROWS_AS(Tree(2).add_caret(2), std::invalid_argument);

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const int d = rng.range(2, 4);
    Tree u = random_tree(d, rng.range(0, 5), rng);
    const int k = rng.range(1, u.leaf_count());
    CHECK(u.add_caret(k).leaf_count() == u.leaf_count() + d - 1);
  }
}

TEST_CASE("remove_caret inverts add_caret") {
  CHECK(Tree::caret(2).remove_caret(1) == Tree(2));
  CHECK(Tree::parse(2, "(L(LL))").remove_caret(2) == Tree::caret(2));
  CHECK_THROWS_AS(Tree::parse(2, "((LL)(LL))").remove_caret(2), std::invalid_argument);

  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const int d = rng.range(2, 4);
    Tree t = random_tree(d, rng.range(0, 5), rng);
    const int k = rng.range(1, t.leaf_count());
    CHECK(t.add_caret(k).remove_caret(k) == t);
  }
}

TEST_CASE("bottom_carets") {
  CHECK(Tree(2).bottom_carets().empty());
  CHECK(Tree::caret(2).bottom_carets() == std::vector<int>{1});
  CHECK(Tree::parse(2, "((LL)L)").bottom_carets() == std::vector<int>{1});
  CHECK(Tree::parse(2, "((LL)(LL))").bottom_carets() == std::vector<int>{1, 3});
  CHECK(Tree::parse(3, "((LLL)L(LLL))").bottom_carets() == std::vector<int>{1, 5});
}

TEST_CASE("right_depth") {
  CHECK(Tree(2).right_depth() == 0);
  CHECK(Tree::parse(2, "(L(LL))").right_depth() == 2);
  CHECK(Tree::parse(2, "((LL)L)").right_depth() == 1);
  CHECK(Tree::right_vine(3, 4).right_depth() == 4);

  // right depth grows exactly when the caret lands on the rightmost leaf;
  // exhaustive over small trees
  for (const Tree& t : trees_with_carets(2, 4)) {
    for (int k = 1; k <= t.leaf_count(); ++k) {
      const int expect = t.right_depth() + (k == t.leaf_count() ? 1 : 0);
      CHECK(t.add_caret(k).right_depth() == expect);
    }
  }
}

TEST_CASE("join") {
  const Tree a = Tree::parse(2, "((LL)L)");
  const Tree b = Tree::parse(2, "(L(LL))");
  JoinResult j = join(a, b);
  CHECK(j.common == Tree::parse(2, "((LL)(LL))"));
  CHECK(j.common == join_oracle(a, b));

  JoinResult self = join(a, a);
  CHECK(self.common == a);
  CHECK(self.path_left.empty());
  CHECK(self.path_right.empty());

  JoinResult from_leaf = join(Tree(2), a);
  CHECK(from_leaf.common == a);
  CHECK(from_leaf.path_right.empty());

  CHECK_THROWS_AS(join(Tree(2), Tree(3)), std::invalid_argument);

  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.range(2, 3);
    Tree x = random_tree(d, rng.range(0, 4), rng);
    Tree y = random_tree(d, rng.range(0, 4), rng);
    JoinResult jj = join(x, y);
    CHECK(jj.common == join_oracle(x, y));
    CHECK(jj.common == join(y, x).common);
    // replaying the paths reaches the common tree
    Tree rx = x;
    for (int k : jj.path_left) rx = rx.add_caret(k);
    CHECK(rx == jj.common);
    Tree ry = y;
    for (int k : jj.path_right) ry = ry.add_caret(k);
    CHECK(ry == jj.common);
  }
}

TEST_CASE("leaf addresses") {
  const Tree t = Tree::parse(2, "(L(LL))");
  CHECK(t.leaf_address(1) == LeafAddress{0});
  CHECK(t.leaf_address(2) == LeafAddress{1, 0});
  CHECK(t.leaf_address(3) == LeafAddress{1, 1});
  CHECK(t.leaf_at({1, 1}) == 3);
  CHECK(!t.leaf_at({1}).has_value());
  CHECK(!t.leaf_at({0, 0}).has_value());

  // rightmost leaf of a depth-m right vine sits at (d-1)^m
  for (int d : {2, 3}) {
    for (int m : {1, 2, 3}) {
      Tree v = Tree::right_vine(d, m);
      CHECK(v.leaf_address(v.leaf_count()) == LeafAddress(static_cast<std::size_t>(m), d - 1));
    }
  }
}

TEST_CASE("agree_away_from") {
  const Tree t = Tree::parse(2, "(L(LL))");
  for (int k = 1; k <= t.leaf_count(); ++k) CHECK(agree_away_from(t, t, t.leaf_address(k)));

  // adding a caret at the distinguished leaf keeps agreement
  const LeafAddress v{1, 1};
  CHECK(agree_away_from(t.add_caret(3), t, v));
  // a caret elsewhere breaks it
  CHECK(!agree_away_from(t.add_caret(1), t, v));

  // oracle: search over all candidate base trees and grafts
  auto oracle = [](const Tree& a, const Tree& b, const LeafAddress& v) {
    const int max_carets =
        (std::max(a.leaf_count(), b.leaf_count()) - 1) / (a.arity() - 1);
    for (int c = 0; c <= max_carets; ++c) {
      for (const Tree& base : trees_with_carets(a.arity(), c)) {
        auto leaf = base.leaf_at(v);
        if (!leaf) continue;
        // the graft producing a (resp. b) is forced to be the subtree at v
        if (!a.has_node(v) || !b.has_node(v)) continue;
        if (base.graft(*leaf, a.subtree_at(v)) == a && base.graft(*leaf, b.subtree_at(v)) == b)
          return true;
      }
    }
    return false;
  };
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    Tree a = random_tree(2, rng.range(0, 4), rng);
    Tree b = random_tree(2, rng.range(0, 4), rng);
    LeafAddress v;
    for (int j = rng.range(0, 3); j > 0; --j) v.push_back(rng.range(0, 1));
    CHECK(agree_away_from(a, b, v) == oracle(a, b, v));
  }
}

TEST_CASE("grammar round trip") {
  Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.range(2, 4);
    Tree t = random_tree(d, rng.range(0, 6), rng);
    CHECK(Tree::parse(d, t.text()) == t);
  }
  CHECK(Tree::parse(2, " ( L ( L L ) ) ") == Tree::parse(2, "(L(LL))"));
  CHECK_THROWS_AS(Tree::parse(2, "(LLL)"), std::invalid_argument);
  CHECK_THROWS_AS(Tree::parse(3, "(LL)"), std::invalid_argument);
  CHECK_THROWS_AS(Tree::parse(2, "(L"), std::invalid_argument);
}
