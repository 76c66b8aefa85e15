#include "doctest.h"
#include "tg/axiom_checks.hpp"
#include "tg/instances.hpp"

using namespace tg;

TEST_CASE("axioms pass exhaustively for the symmetric-group instances") {
  for (const std::string sel : {"V(2)", "V(3)", "Vhat(2)", "Vhat(3)"}) {
    SystemPtr sys = parse_instance(sel);
    for (int n = 1; n <= 4; ++n) {
      const PropertyReport c1 = check_c1(*sys, n);
      CHECK(c1.verdict == Verdict::Pass);
      CHECK(c1.mode == "exhaustive");
      CHECK(check_c2(*sys, n).verdict == Verdict::Pass);
      CHECK(check_c3(*sys, n, true).verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("axioms pass on samples for the remaining shipped instances") {
  CheckConfig cfg;
  cfg.samples = 120;
  cfg.seed = 7;
  for (const std::string sel :
       {"bV(2)", "bF(2)", "B(Q,2)", "Bbar(Q,2)", "Abels(2,2)", "Pi(Z5,2,3)", "Psi(Z4,2)",
        "ZInf(2)"}) {
    SystemPtr sys = parse_instance(sel);
    for (int n : {2, 4, 5}) {
      CHECK(check_c1(*sys, n, cfg).passed());
      CHECK(check_c2(*sys, n, cfg).passed());
      CHECK(check_c3(*sys, n, sys->flags().fully_compatible, cfg).passed());
    }
  }
  // the 3-ary braid family too
  SystemPtr bv3 = parse_instance("bV(3)");
  for (int n : {2, 5}) {
    CHECK(check_c1(*bv3, n, cfg).passed());
    CHECK(check_c2(*bv3, n, cfg).passed());
    CHECK(check_c3(*bv3, n, true, cfg).passed());
  }
}

TEST_CASE("purity checks") {
  CheckConfig cfg;
  cfg.samples = 100;
  CHECK(check_pure(*parse_instance("bF(2)"), 3, cfg).verdict == Verdict::Pass);
  CHECK(check_pure(*parse_instance("B(Q,2)"), 3, cfg).verdict == Verdict::Pass);

  const PropertyReport hat_slight = check_slightly_pure(*parse_instance("Vhat(2)"), 3, cfg);
  CHECK(hat_slight.verdict == Verdict::Pass);
  const PropertyReport hat_pure = check_pure(*parse_instance("Vhat(2)"), 3, cfg);
  CHECK(hat_pure.verdict == Verdict::Fail);
  CHECK(!hat_pure.witnesses.empty());

  const PropertyReport v_slight = check_slightly_pure(*parse_instance("V(2)"), 3, cfg);
  CHECK(v_slight.verdict == Verdict::Fail);
  CHECK(!v_slight.witnesses.empty());
}

TEST_CASE("uniformity checks") {
  CheckConfig cfg;
  cfg.samples = 60;
  for (const std::string sel : {"V(2)", "Vhat(2)", "bF(2)", "bV(2)", "Bbar(Q,2)", "Abels(2,2)",
                                 "Pi(Z4,id,id)", "Psi(Z4,2)"}) {
    for (int n : {1, 2, 3}) CHECK(check_uniform(*parse_instance(sel), n, cfg).passed());
  }
  // distinct non-trivial endomorphisms break uniformity
  const PropertyReport bad = check_uniform(*parse_instance("Pi(Z5,2,3)"), 1, cfg);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(!bad.witnesses.empty());
  CHECK(check_uniform(*parse_instance("ZInf(2)"), 1, cfg).verdict == Verdict::Fail);
}

TEST_CASE("diversity checks") {
  CheckConfig cfg;
  cfg.samples = 200;
  // exhaustively settled for the finite families
  for (int n : {2, 3}) {
    const PropertyReport v = check_diverse(*parse_instance("V(2)"), n, cfg);
    CHECK(v.verdict == Verdict::Pass);
    CHECK(v.mode == "exhaustive");
    CHECK(check_diverse(*parse_instance("Vhat(2)"), n, cfg).verdict == Verdict::Pass);
    CHECK(check_diverse(*parse_instance("Psi(Z4,2)"), n, cfg).verdict == Verdict::Pass);
  }
  // the constant-diagonal witness kills diversity for identity endomorphisms
  const PropertyReport pi = check_diverse(*parse_instance("Pi(Z2,id,id)"), 2, cfg);
  CHECK(pi.verdict == Verdict::Fail);
  REQUIRE(!pi.witnesses.empty());
  CHECK(pi.witnesses.front() == "(1,1,1)");
  // infinite families can only report inconclusive passes
  const PropertyReport bb = check_diverse(*parse_instance("Bbar(Q,2)"), 3, cfg);
  CHECK(bb.verdict == Verdict::InconclusivePass);
  CHECK(check_diverse(*parse_instance("bV(2)"), 2, cfg).verdict == Verdict::InconclusivePass);
  CHECK(check_diverse(*parse_instance("ZInf(2)"), 2, cfg).verdict == Verdict::InconclusivePass);
}

TEST_CASE("negative controls fail with witnesses") {
  SystemPtr bad_clone = corrupt_clone(parse_instance("V(2)"));
  const PropertyReport c1 = check_c1(*bad_clone, 3);
  CHECK(c1.verdict == Verdict::Fail);
  CHECK(!c1.witnesses.empty());
  const PropertyReport c2 = check_c2(*bad_clone, 3);
  CHECK(c2.verdict == Verdict::Fail);

  SystemPtr bad_rho = corrupt_rho(parse_instance("V(2)"), 3);
  const PropertyReport c3 = check_c3(*bad_rho, 3, true);
  CHECK(c3.verdict == Verdict::Fail);
  CHECK(!c3.witnesses.empty());

  SystemPtr bad_rho_pure = corrupt_rho(parse_instance("bF(2)"), 3);
  CheckConfig cfg;
  cfg.samples = 50;
  CHECK(check_c3(*bad_rho_pure, 3, true, cfg).verdict == Verdict::Fail);
}

TEST_CASE("every shipped instance passes its claimed flags") {
  CheckConfig cfg;
  cfg.samples = 80;
  cfg.seed = 11;
  for (const std::string& sel : list_instances()) {
    SystemPtr sys = parse_instance(sel);
    const InstanceFlags& f = sys->flags();
    for (int n : {2, 3}) {
      CHECK(check_c1(*sys, n, cfg).passed());
      CHECK(check_c2(*sys, n, cfg).passed());
      CHECK(check_c3(*sys, n, false, cfg).passed());
      if (f.fully_compatible) CHECK(check_c3(*sys, n, true, cfg).passed());
      if (f.pure) CHECK(check_pure(*sys, n, cfg).passed());
      if (f.slightly_pure) CHECK(check_slightly_pure(*sys, n, cfg).passed());
      if (f.uniform) CHECK(check_uniform(*sys, n, cfg).passed());
      if (f.diverse) CHECK(check_diverse(*sys, n, cfg).passed());
    }
  }
}

TEST_CASE("reports are deterministic and serializable") {
  CheckConfig cfg;
  cfg.samples = 40;
  cfg.seed = 99;
  const PropertyReport a = check_c1(*parse_instance("bV(2)"), 3, cfg);
  const PropertyReport b = check_c1(*parse_instance("bV(2)"), 3, cfg);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.seed == 99);
  CHECK(a.mode == "randomized");
}

TEST_CASE("group laws driver") {
  CHECK(check_group_laws(parse_instance("V(2)"), 25, 5).verdict == Verdict::Pass);
  CHECK(check_group_laws(parse_instance("Pi(Z5,2,3)"), 25, 5).verdict == Verdict::Pass);
}
