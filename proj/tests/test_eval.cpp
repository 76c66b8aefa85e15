#include <stdexcept>

#include "doctest.h"
#include "tg/eval.hpp"
#include "tg/instances.hpp"

using namespace tg;

TEST_CASE("expression evaluation") {
  SystemPtr f = parse_instance("F(2)");
  CHECK(render(eval_expression(f, "[ (LL) ; ; (LL) ] == [L ; ; L]")) == "true");
  CHECK(render(eval_expression(f, "x0 * x0^-1")) == "[L;;L]");
  CHECK(render(eval_expression(f, "x0 * x1 == x1 * x0")) == "false");
  CHECK(render(eval_expression(f, "theta(x0^3)")) == "3");
  CHECK(render(eval_expression(f, "reduce([ (LL) ; ; (LL) ])")) == "[L;;L]");
  CHECK(render(eval_expression(f, "inv(x0)")) == "[((LL)L);;(L(LL))]");

  SystemPtr v = parse_instance("V(2)");
  CHECK(render(eval_expression(
            v, "[ (L(LL)) ; 3 1 2 ; ((LL)L) ] == [ (L((LL)L)) ; 4 1 2 3 ; ((LL)(LL)) ]")) ==
        "true");
  CHECK(render(eval_expression(v, "pi([ (LL) ; 2 1 ; (LL) ])")) == "[(LL);2 1;(LL)]");

  // parse errors carry a position
  try {
    eval_expression(f, "x0 * * x0");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS_AS(eval_expression(f, "theta(x0) * x0"), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression(f, "frobnicate(x0)"), std::invalid_argument);
}

TEST_CASE("element text round trips on every shipped instance") {
  for (const std::string& sel : list_instances()) {
    SystemPtr sys = parse_instance(sel);
    Rng rng(313);
    for (int i = 0; i < 300; ++i) {
      const Element x = sample_element(sys, rng, rng.range(0, 3));
      const Element y = parse_element(sys, to_text(x));
      CHECK(to_text(y) == to_text(x));
      if (i % 10 == 0) CHECK(equals(x, y));
    }
  }
}
