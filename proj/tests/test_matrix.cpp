#include <stdexcept>

#include "doctest.h"
#include "tg/element.hpp"
#include "tg/instances.hpp"
#include "tg/ut_matrix.hpp"

using namespace tg;

TEST_CASE("rational arithmetic") {
  CHECK(Rat::of(2, 4) == Rat::of(1, 2));
  CHECK(Rat::of(1, 2) + Rat::of(1, 3) == Rat::of(5, 6));
  CHECK(Rat::of(-4, 6).to_string() == "-2/3");
  CHECK(Rat::parse("7/2") * Rat(2) == Rat(7));
  CHECK(Rat::of(1, 3) < Rat::of(1, 2));
  CHECK_THROWS_AS(Rat::of(1, 0), std::domain_error);

  const RingSpec z2 = RingSpec::z_inv_p(2);
  CHECK(z2.contains(Rat::of(3, 8)));
  CHECK(!z2.contains(Rat::of(1, 6)));
  CHECK(z2.is_unit(Rat::of(-1, 4)));
  CHECK(!z2.is_unit(Rat(3)));
  CHECK(RingSpec::rationals().is_unit(Rat::of(3, 5)));
}

TEST_CASE("matrix arithmetic") {
  UTMatrix a(3);
  a.set(1, 2, Rat(2));
  a.set(2, 3, Rat::of(1, 2));
  a.set(1, 1, Rat(3));
  CHECK((a * a.inverse()).is_identity());
  CHECK((a.inverse() * a).is_identity());
  CHECK(UTMatrix::parse(a.to_string()) == a);
  CHECK_THROWS_AS(UTMatrix::parse("1 2;3 4"), std::invalid_argument);
}

TEST_CASE("the 3-ary cloning map on the 5x5 with entries 1..15") {
  const UTMatrix a = UTMatrix::parse("1 2 3 4 5;0 6 7 8 9;0 0 10 11 12;0 0 0 13 14;0 0 0 0 15");
  const UTMatrix expected = UTMatrix::parse(
      "1 2 3 3 3 4 5;"
      "0 6 7 7 7 8 9;"
      "0 0 10 0 0 0 0;"
      "0 0 0 10 0 0 0;"
      "0 0 0 0 10 11 12;"
      "0 0 0 0 0 13 14;"
      "0 0 0 0 0 0 15");
  CHECK(mtx_clone(3, 3, a) == expected);
  auto back = mtx_unclone(3, 3, expected);
  REQUIRE(back.has_value());
  CHECK(*back == a);
}

TEST_CASE("matrix clone and unclone") {
  CHECK(mtx_clone(2, 1, UTMatrix(3)) == UTMatrix(4));
  // diagonal law: entry k repeats d times
  const UTMatrix a = UTMatrix::parse("2 1;0 3");
  const UTMatrix c = mtx_clone(3, 2, a);
  CHECK(c.at(1, 1) == Rat(2));
  for (int i = 2; i <= 4; ++i) CHECK(c.at(i, i) == Rat(3));

  Rng rng(173);
  const RingSpec ring = RingSpec::rationals();
  SystemPtr sys = instance_B(ring, 2);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.range(1, 5);
    const UTMatrix m = std::any_cast<UTMatrix>(sys->sample(n, rng));
    const int k = rng.range(1, n);
    auto back = mtx_unclone(2, k, mtx_clone(2, k, m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
  // violating the zero-row pattern has no preimage
  UTMatrix bad(4);
  bad.set(2, 4, Rat(1));
  CHECK(!mtx_unclone(2, 2, bad).has_value());
}

TEST_CASE("cloning is multiplicative") {
  Rng rng(179);
  SystemPtr sys = instance_B(RingSpec::z_inv_p(2), 3);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.range(1, 4);
    const UTMatrix a = std::any_cast<UTMatrix>(sys->sample(n, rng));
    const UTMatrix b = std::any_cast<UTMatrix>(sys->sample(n, rng));
    const int k = rng.range(1, n);
    CHECK(mtx_clone(3, k, a * b) == mtx_clone(3, k, a) * mtx_clone(3, k, b));
  }
}

TEST_CASE("scalar matrices are central in the plain family") {
  SystemPtr sys = parse_instance("B(Q,2)");
  const Element center =
      Element::make(sys, Tree(2), GroupElem(UTMatrix(1).scaled(Rat(2))), Tree(2));
  Rng rng(181);
  for (int i = 0; i < 100; ++i) {
    const Element y = sample_element(sys, rng, rng.range(0, 3));
    CHECK(commutes(center, y));
  }
}

TEST_CASE("homothety quotient") {
  SystemPtr sys = parse_instance("Bbar(Q,2)");
  // 2I ~ I
  const Element two_i = Element::make(sys, Tree(2), GroupElem(UTMatrix(1).scaled(Rat(2))), Tree(2));
  CHECK(is_identity(two_i));
  // the central element of the plain family dies in the quotient
  UTMatrix m(2);
  m.set(1, 2, Rat(1));
  const Element x = Element::make(sys, Tree::caret(2), GroupElem(m), Tree::caret(2));
  CHECK(!is_identity(x));
  CHECK(equals(x, Element::make(sys, Tree::caret(2), GroupElem(m.scaled(Rat(3))), Tree::caret(2))));

  // quotient well-definedness: cloning a homothety gives a homothety
  Rng rng(191);
  for (int i = 0; i < 50; ++i) {
    const int n = rng.range(1, 4);
    const Rat r = RingSpec::rationals().sample_unit(rng);
    const UTMatrix z = UTMatrix(n).scaled(r);
    const int k = rng.range(1, n);
    const UTMatrix c = mtx_clone(2, k, z);
    bool homothety = true;
    for (int p = 1; p <= c.size(); ++p)
      for (int q = p; q <= c.size(); ++q)
        homothety = homothety && (p == q ? c.at(p, q) == c.at(1, 1) : c.at(p, q).is_zero());
    CHECK(homothety);
  }
}

TEST_CASE("corner-trivial family membership") {
  SystemPtr sys = parse_instance("Abels(2,2)");
  UTMatrix good(3);
  good.set(2, 2, Rat(2));
  good.set(1, 3, Rat::of(1, 2));
  const Tree t = Tree::parse(2, "(L(LL))");
  CHECK(!is_identity(Element::make(sys, t, GroupElem(good), t)));

  UTMatrix bad(3);
  bad.set(1, 1, Rat(2));
  bad.set(2, 2, Rat::of(1, 2));
  CHECK_THROWS_AS(Element::make(sys, t, GroupElem(bad), t), std::invalid_argument);
  // entries must stay inside Z[1/2]
  UTMatrix off_ring(3);
  off_ring.set(1, 2, Rat::of(1, 3));
  CHECK_THROWS_AS(Element::make(sys, t, GroupElem(off_ring), t), std::invalid_argument);

  // cloning preserves the corner conditions
  Rng rng(193);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.range(1, 4);
    const UTMatrix g = std::any_cast<UTMatrix>(sys->sample(n, rng));
    const int k = rng.range(1, n);
    const UTMatrix c = mtx_clone(2, k, g);
    CHECK(c.at(1, 1) == Rat(1));
    CHECK(c.at(c.size(), c.size()) == Rat(1));
  }
}

TEST_CASE("corner-trivial family: no non-trivial matrix lies in every image") {
  // the level-n group sits inside n-by-n matrices, so the zero-row patterns
  // of the n cloning images cover every row; a near-identity matrix with one
  // off-diagonal entry in the second-to-last row is rejected somewhere
  SystemPtr sys = parse_instance("Abels(2,2)");
  for (int n : {2, 3, 4}) {
    UTMatrix a(n + 1);
    a.set(n, n + 1, Rat(1));
    bool in_all = true;
    for (int k = 1; k <= n && in_all; ++k)
      in_all = sys->unclone_elem(n, k, GroupElem(a)).has_value();
    CHECK(!in_all);
  }
}

TEST_CASE("scalar matrices sit inside every cloning image") {
  // the mechanism behind the plain family's diversity failure
  SystemPtr sys = parse_instance("B(Q,2)");
  for (int n : {2, 3, 4}) {
    const UTMatrix scalar = UTMatrix(n + 1).scaled(Rat(2));
    for (int k = 1; k <= n; ++k)
      CHECK(sys->unclone_elem(n, k, GroupElem(scalar)).has_value());
  }
}

TEST_CASE("matrix group laws at the element level") {
  for (const std::string sel : {"B(Q,2)", "Bbar(Q,2)", "Abels(2,2)"}) {
    SystemPtr sys = parse_instance(sel);
    Rng rng(197);
    for (int i = 0; i < 20; ++i) {
      const Element x = sample_element(sys, rng, rng.range(0, 3));
      const Element y = sample_element(sys, rng, rng.range(0, 3));
      const Element z = sample_element(sys, rng, rng.range(0, 3));
      CHECK(equals(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
      CHECK(is_identity(multiply(x, invert(x))));
    }
  }
}
