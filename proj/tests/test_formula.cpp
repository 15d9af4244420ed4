#include "ltl2buchi/formula.hpp"
#include "ltl2buchi/oracle.hpp"

#include "support/corpus.hpp"

#include <doctest.h>

using namespace ltl2buchi;
using namespace testsupport;

TEST_CASE("parsing maps the ascii grammar onto the expected trees") {
  FormulaArena ar;

  Formula f = parse(ar, "[] <> p");
  CHECK(f.kind() == Kind::Always);
  CHECK(f.child().kind() == Kind::Eventually);
  CHECK(f.child().child() == ar.atom("p"));

  Formula g = parse(ar, "p U (q V r)");
  CHECK(g.kind() == Kind::Until);
  CHECK(g.lhs() == ar.atom("p"));
  CHECK(g.rhs().kind() == Kind::Release);

  // pre-PNF tree keeps the outer negation
  Formula h = parse(ar, "!(p U q)");
  CHECK(h.kind() == Kind::Not);
  CHECK(h.child().kind() == Kind::Until);
  CHECK_FALSE(h.in_pnf());
}

TEST_CASE("parser precedence and associativity") {
  FormulaArena ar;
  // unary > U/R > && > ||
  CHECK(parse(ar, "!a U b").kind() == Kind::Until);
  CHECK(parse(ar, "a U b && c").kind() == Kind::And);
  CHECK(parse(ar, "a && b || c").kind() == Kind::Or);
  // U right-associative
  Formula f = parse(ar, "a U b U c");
  CHECK(f.rhs().kind() == Kind::Until);
  // V is release
  CHECK(parse(ar, "a V b") == parse(ar, "a R b"));
  // -> and <-> eliminate at parse time
  Formula imp = parse(ar, "a -> b");
  CHECK(imp.kind() == Kind::Or);
  CHECK(imp.lhs().kind() == Kind::Not);
  CHECK(parse(ar, "a <-> b").in_pnf() == false);
}

TEST_CASE("parse errors carry positions") {
  FormulaArena ar;
  CHECK_THROWS_AS(parse(ar, ""), ParseError);
  CHECK_THROWS_AS(parse(ar, "a &&"), ParseError);
  CHECK_THROWS_AS(parse(ar, "(a"), ParseError);
  CHECK_THROWS_AS(parse(ar, "a # b"), ParseError);
  try {
    parse(ar, "a ## b");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("hash consing shares structurally identical subtrees") {
  FormulaArena ar;
  Formula a = parse(ar, "(p U q) && (p U q)");
  CHECK(a.lhs() == a.rhs());
  CHECK(a.lhs().node() == a.rhs().node());
  CHECK(parse(ar, "p U q") == a.lhs());
}

TEST_CASE("to_pnf pushes negation onto atoms") {
  FormulaArena ar;
  CHECK(to_pnf(ar, parse(ar, "!(a U b)")) ==
        ar.mk_release(ar.not_atom("a"), ar.not_atom("b")));
  CHECK(to_pnf(ar, parse(ar, "!X a")).kind() == Kind::Next);
  CHECK(to_pnf(ar, parse(ar, "!X a")).child() == ar.not_atom("a"));
  CHECK(to_pnf(ar, parse(ar, "!!a")) == ar.atom("a"));
  CHECK(to_pnf(ar, parse(ar, "!<>a")) == ar.mk_always(ar.not_atom("a")));
  CHECK(to_pnf(ar, parse(ar, "![]a")) == ar.mk_eventually(ar.not_atom("a")));
  // ff is a first-class node
  CHECK(to_pnf(ar, parse(ar, "!true")) == ar.ff());
}

TEST_CASE("classification follows the grammar equations") {
  FormulaArena ar;

  Formula f = to_pnf(ar, parse(ar, "(a U ([]<>b)) && (c V ([]<>d))"));
  ClassFlags cf = classify(f);
  CHECK(cf.alternating);
  CHECK_FALSE(cf.pure_eventuality);
  CHECK_FALSE(cf.pure_universality);

  ClassFlags gfa = classify(to_pnf(ar, parse(ar, "[]<>a")));
  CHECK(gfa.alternating);
  CHECK(gfa.pure_eventuality); // G mu
  CHECK(gfa.pure_universality); // G phi

  ClassFlags ab = classify(to_pnf(ar, parse(ar, "a U b")));
  CHECK_FALSE(ab.alternating);
  CHECK_FALSE(ab.pure_eventuality);
  CHECK_FALSE(ab.pure_universality);

  // atoms and tt are both temporal and state formulae
  CHECK(classify(ar.tt()).is_temporal);
  CHECK(classify(ar.tt()).is_state);
  CHECK(classify(ar.atom("a")).is_temporal);
  CHECK(classify(ar.atom("a")).is_state);
  CHECK_FALSE(classify(to_pnf(ar, parse(ar, "a && b"))).is_temporal);
  CHECK(classify(to_pnf(ar, parse(ar, "a && b"))).is_state);
  CHECK_FALSE(classify(to_pnf(ar, parse(ar, "X a"))).is_state);
}

TEST_CASE("temporal subformulae in subformula order") {
  FormulaArena ar;
  Formula f = to_pnf(ar, parse(ar, "([]<>a) U b"));
  auto subs = temporal_subformulae(f);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == parse(ar, "<> a"));
  CHECK(subs[1] == parse(ar, "[] <> a"));
  CHECK(subs[2] == f);

  CHECK(temporal_subformulae(to_pnf(ar, parse(ar, "a || b"))).empty());

  auto xa = temporal_subformulae(to_pnf(ar, parse(ar, "X a")));
  REQUIRE(xa.size() == 1);
  CHECK(xa[0].kind() == Kind::Next);
}

TEST_CASE("pretty printer round-trips through the parser") {
  FormulaArena ar;
  for (const char* txt : {"[] <> p", "p U (q V r)", "a && (b || X c)",
                          "!a U (b V (c && <> d))", "p1 U (p2 U p3)"}) {
    Formula f = parse(ar, txt);
    CHECK(parse(ar, f.ascii()) == f);
  }
}

TEST_CASE("pnf is idempotent and semantics-preserving on the corpus") {
  Corpus c = make_corpus(120, 3, 8, 3, 11, true);
  auto lassos = sample_lassos(*c.session);
  for (Formula f : c.formulas) {
    Formula p = to_pnf(c.session->formulas, f);
    CHECK(p == to_pnf(c.session->formulas, p));
    CHECK(p.in_pnf());
  }
  // semantic soundness against the oracle: pnf(f) agrees with f
  GenConfig cfg;
  cfg.size_lo = 3;
  cfg.size_hi = 8;
  cfg.propositions = 3;
  cfg.seed = 5;
  RandomFormulaGen gen(*c.session, cfg);
  for (int i = 0; i < 120; ++i) {
    Formula f = gen();
    Formula nf = c.session->formulas.mk_not(f); // general negation node
    Formula pf = to_pnf(c.session->formulas, nf);
    for (const auto& w : lassos) {
      CHECK(eval(f, w) == eval(to_pnf(c.session->formulas, f), w));
      CHECK(eval(nf, w) == eval(pf, w));
    }
  }
}

TEST_CASE("lemma properties of the formula classes hold on sampled words") {
  Corpus c = make_corpus(250, 3, 8, 2, 23, true);
  Session& s = *c.session;
  auto lassos = sample_lassos(s);

  // prefixes to prepend, |u| <= 4 over the 2-prop universe
  std::vector<std::vector<uint64_t>> prefixes = {
      {}, {0}, {1}, {2}, {3}, {0, 1}, {3, 2}, {1, 1, 2}, {0, 1, 2, 3}};

  int alternating_seen = 0, pe_seen = 0, pu_seen = 0;
  for (Formula f : c.formulas) {
    ClassFlags cf = classify(f);
    for (const auto& w : lassos) {
      bool base = eval(f, w);
      if (cf.alternating) {
        // corollary: xi == X xi
        CHECK(eval(s.formulas.mk_next(f), w) == base);
      }
      for (const auto& u : prefixes) {
        LassoWord uw = w;
        uw.prefix.insert(uw.prefix.begin(), u.begin(), u.end());
        bool shifted = eval(f, uw);
        if (cf.alternating) // prefix invariance, both directions
          CHECK(shifted == base);
        if (cf.pure_eventuality && base) // left-append closed
          CHECK(shifted);
        if (cf.pure_universality && shifted) // suffix closed
          CHECK(base);
      }
    }
    alternating_seen += cf.alternating;
    pe_seen += cf.pure_eventuality;
    pu_seen += cf.pure_universality;
  }
  // the corpus must actually exercise the classes
  CHECK(alternating_seen > 5);
  CHECK(pe_seen > 10);
  CHECK(pu_seen > 10);
}
