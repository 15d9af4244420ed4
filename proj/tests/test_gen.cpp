#include "ltl2buchi/families.hpp"
#include "ltl2buchi/random_formula.hpp"
#include "ltl2buchi/oracle.hpp"

#include "support/corpus.hpp"

#include <doctest.h>

using namespace ltl2buchi;
using namespace testsupport;

TEST_CASE("benchmark families expand to the expected formulas") {
  Session s;
  CHECK(family(s, "theta", 2) ==
        parse(s.formulas, "!(([]<>p1 && []<>p2) -> [](q -> <>r))"));
  CHECK(family(s, "u2", 3) == parse(s.formulas, "p1 U (p2 U p3)"));
  CHECK(family(s, "u1", 3) == parse(s.formulas, "(p1 U p2) U p3"));
  CHECK(family(s, "psi", 3) == parse(s.formulas, "[]<>p1 && []<>p2 && []<>p3"));
  CHECK(family(s, "c1", 2) == parse(s.formulas, "[]<>p1 || []<>p2"));
  CHECK(family(s, "s", 2) == parse(s.formulas, "[]p1 && []p2"));
  CHECK(family(s, "e", 2) == parse(s.formulas, "<>p1 && <>p2"));
  CHECK(family(s, "q", 1) == parse(s.formulas, "<>p1 || []p2"));
  CHECK(family(s, "r", 1) == parse(s.formulas, "[]<>p1 || <>[]p2"));
  CHECK(family(s, "xi", 2) == parse(s.formulas, "<>[]p1 || <>[]p2"));
  CHECK(family(s, "alpha", 2) ==
        parse(s.formulas, "<>(p1 && <>p2) && <>(q1 && <>q2)"));
  CHECK(family(s, "beta", 2) == parse(s.formulas, "<>(p && X p) && <>(q && X q)"));
  CHECK(family(s, "beta_strict", 3) ==
        parse(s.formulas, "<>(p && X p && X X p) && <>(q && X q && X X q)"));
  CHECK_THROWS(family(s, "nope", 1));
  CHECK_THROWS(family(s, "theta", 0));
}

TEST_CASE("random generation is deterministic and hits the size budget") {
  Session s1, s2;
  GenConfig cfg;
  cfg.size_lo = 15;
  cfg.size_hi = 20;
  cfg.propositions = 8;
  cfg.seed = 1234;
  RandomFormulaGen g1(s1, cfg), g2(s2, cfg);
  for (int i = 0; i < 50; ++i) {
    Formula a = g1();
    Formula b = g2();
    CHECK(a.ascii() == b.ascii()); // same seed, same stream
    CHECK(a.size() >= 15);
    CHECK(a.size() <= 20);
    CHECK(a.in_pnf()); // NNF output
  }
}

TEST_CASE("degenerate generator configurations") {
  Session s;
  GenConfig lone;
  lone.size_lo = lone.size_hi = 1;
  lone.true_priority = lone.false_priority = 0;
  lone.and_priority = lone.or_priority = 0;
  lone.until_priority = lone.default_operator_priority = 0;
  lone.propositions = 1;
  RandomFormulaGen g(s, lone);
  for (int i = 0; i < 5; ++i) {
    Formula f = g();
    CHECK(f.size() == 1);
    CHECK((f.kind() == Kind::Atom || f.kind() == Kind::NotAtom));
  }

  GenConfig bad = lone;
  bad.size_lo = bad.size_hi = 3; // no binary operator has weight
  RandomFormulaGen gb(s, bad);
  CHECK_THROWS(gb());

  GenConfig unsupported;
  unsupported.xor_priority = 5;
  CHECK_THROWS(RandomFormulaGen(s, unsupported));
}

TEST_CASE("the four modification groups are language-neutral") {
  Corpus c = make_corpus(20, 4, 9, 3, 111, true);
  Session& s = *c.session;
  auto lassos = sample_lassos(s);
  for (Formula f : c.formulas) {
    std::vector<bool> expected;
    for (const auto& w : lassos)
      expected.push_back(eval(f, w));
    for (int mask = 0; mask < 16; ++mask) {
      PipelineConfig cfg;
      cfg.reduce_formula = mask & 1;
      if (mask & 2) {
        cfg.mode = VwaaMode::Improved;
        cfg.vwaa_simplify = VwaaSimplify::General;
      } else {
        cfg.mode = VwaaMode::Original;
        cfg.vwaa_simplify = VwaaSimplify::Basic;
      }
      cfg.tgba_suspend = mask & 4;
      cfg.gf_fastpath = mask & 4; // group 3 covers the TGBA changes
      cfg.ba_merge = (mask & 8) ? BaMerge::SelfLoop : BaMerge::Basic;
      Translation t = run_pipeline(s, f, cfg);
      for (size_t i = 0; i < lassos.size(); ++i) {
        INFO(f.ascii() << " mask=" << mask);
        CHECK(ba_accepts(t.ba, lassos[i]) == expected[i]);
      }
    }
  }
}

TEST_CASE("pipeline output is reproducible") {
  PipelineConfig cfg;
  Translation a = translate("([]<>p1) U (p2 && X p3)", cfg);
  Translation b = translate("([]<>p1) U (p2 && X p3)", cfg);
  CHECK(render(a, cfg) == render(b, cfg));

  Session s1, s2;
  GenConfig gc;
  gc.seed = 7;
  RandomFormulaGen g1(s1, gc), g2(s2, gc);
  CHECK(g1().ascii() == g2().ascii());
}
