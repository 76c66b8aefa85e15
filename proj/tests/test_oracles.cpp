#include <stdexcept>

#include "doctest.h"
#include "tg/element.hpp"
#include "tg/instances.hpp"
#include "tg/pl_map.hpp"
#include "tg/prefix_map.hpp"
#include "tg/thompson_maps.hpp"

using namespace tg;

TEST_CASE("piecewise-linear map of the standard generator") {
  SystemPtr sys = parse_instance("F(2)");
  const Element e = Element::identity(sys);
  CHECK(pl_map(e) == PLMap::identity());
  CHECK(pl_support(e).empty());

  const PLMap m = pl_map(x0(sys));
  // [0,1/4] -> [0,1/2], [1/4,1/2] -> [1/2,3/4], [1/2,1] -> [3/4,1]
  CHECK(m(Rat::of(1, 4)) == Rat::of(1, 2));
  CHECK(m(Rat::of(1, 2)) == Rat::of(3, 4));
  CHECK(m(Rat::of(1, 8)) == Rat::of(1, 4));
  CHECK(m(Rat::of(3, 4)) == Rat::of(7, 8));
  const auto supp = m.support();
  REQUIRE(supp.size() == 1);
  CHECK(supp[0].first == Rat(0));
  CHECK(supp[0].second == Rat(1));
}

TEST_CASE("maps supported right of 1/2 fix the left half") {
  SystemPtr sys = parse_instance("F(2)");
  // graft the generator under the right leaf of a caret
  const Tree l = Tree::caret(2).graft(2, x0(sys).left());
  const Tree r = Tree::caret(2).graft(2, x0(sys).right());
  const Element g = Element::make(sys, l, sys->identity(l.leaf_count()), r);
  const PLMap m = pl_map(g);
  const auto supp = m.support();
  REQUIRE(supp.size() == 1);
  CHECK(supp[0].first >= Rat::of(1, 2));
  for (const Rat& x : {Rat(0), Rat::of(1, 4), Rat::of(1, 2)}) CHECK(m(x) == x);
}

TEST_CASE("piecewise-linear action is a faithful homomorphism on F") {
  SystemPtr sys = parse_instance("F(2)");
  Rng rng(131);
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    const Element x = sample_element(sys, rng, rng.range(0, 4));
    const Element y = sample_element(sys, rng, rng.range(0, 4));
    // multiplication corresponds to composition, y applied first
    if (pl_map(multiply(x, y)) != compose(pl_map(x), pl_map(y))) ++disagreements;
    if ((pl_map(x) == pl_map(y)) != equals(x, y)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("the piecewise-linear oracle rejects non-increasing actions") {
  SystemPtr v = parse_instance("V(2)");
  const Element tw =
      Element::make(v, Tree::caret(2), Perm::from_images({2, 1}), Tree::caret(2));
  CHECK_THROWS_AS(pl_map(tw), std::invalid_argument);
}

TEST_CASE("prefix map basics") {
  SystemPtr sys = parse_instance("V(2)");
  CHECK(PrefixMap::from_element(Element::identity(sys)) == PrefixMap::identity(2));

  // the twist at a caret: 0s <-> 1s
  const Element tw =
      Element::make(sys, Tree::caret(2), Perm::from_images({2, 1}), Tree::caret(2));
  const PrefixMap m = PrefixMap::from_element(tw);
  REQUIRE(m.pairs().size() == 2);
  CHECK(m.pairs()[0] == std::pair<LeafAddress, LeafAddress>{{0}, {1}});
  CHECK(m.pairs()[1] == std::pair<LeafAddress, LeafAddress>{{1}, {0}});
}

TEST_CASE("prefix-map action is a faithful homomorphism on V") {
  for (const std::string sel : {"V(2)", "Vhat(2)", "V(3)"}) {
    SystemPtr sys = parse_instance(sel);
    Rng rng(137);
    int disagreements = 0;
    for (int i = 0; i < 200; ++i) {
      const Element x = sample_element(sys, rng, rng.range(0, 3));
      const Element y = sample_element(sys, rng, rng.range(0, 3));
      if (PrefixMap::from_element(multiply(x, y)) !=
          compose(PrefixMap::from_element(x), PrefixMap::from_element(y)))
        ++disagreements;
      if ((PrefixMap::from_element(x) == PrefixMap::from_element(y)) != equals(x, y))
        ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("prefix map rejects nothing that the element grammar accepts") {
  SystemPtr sys = parse_instance("V(2)");
  Rng rng(139);
  for (int i = 0; i < 20; ++i) {
    const Element x = sample_element(sys, rng, rng.range(1, 3));
    const PrefixMap m = PrefixMap::from_element(x);
    // domain prefixes form a complete prefix code: total weight 1
    Rat total(0);
    for (const auto& [u, v] : m.pairs()) total = total + Rat::of(1, 1 << u.size());
    CHECK(total == Rat(1));
  }
}
