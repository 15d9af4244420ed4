#include "ltl2buchi/tgba.hpp"
#include "ltl2buchi/oracle.hpp"

#include "support/corpus.hpp"

#include <doctest.h>

using namespace ltl2buchi;
using namespace testsupport;

namespace {

Formula pnf_of(Session& s, const char* txt) {
  return to_pnf(s.formulas, parse(s.formulas, txt));
}

struct TransKey {
  Label label;
  IdSet target; // as VWAA id set
  IdSet marks;  // as VWAA ids of the accepting states
};

// look up a transition by source VWAA-set; marks are translated to the
// accepting VWAA states for readable comparisons
bool has_trans(const Tgba& g, const IdSet& src, const TransKey& key) {
  uint32_t s = g.state_of(src);
  for (const auto& t : g.delta[s]) {
    if (!(t.label == key.label) || !(g.states[t.target] == key.target))
      continue;
    IdSet marks;
    for (size_t j = 0; j < g.acc_sets.size(); ++j)
      if (t.marks & (uint64_t(1) << j))
        marks.insert(g.acc_sets[j]);
    if (marks == key.marks)
      return true;
  }
  return false;
}

size_t out_degree(const Tgba& g, const IdSet& src) {
  return g.delta[g.state_of(src)].size();
}

} // namespace

TEST_CASE("suspension info: M and progress formulae") {
  Session s;

  // GF a && F b: GFa and Fa live in M, Fb is a temporal progress formula
  {
    Formula phi = pnf_of(s, "([]<>a) && (<>b)");
    Vwaa v = build_vwaa(s, phi, VwaaMode::Original);
    SuspensionInfo info = compute_suspension(v);
    uint32_t gfa = v.state_of(pnf_of(s, "[]<>a"));
    uint32_t fa = v.state_of(pnf_of(s, "<>a"));
    uint32_t fb = v.state_of(pnf_of(s, "<>b"));
    CHECK(info.m_states.contains(gfa));
    CHECK(info.m_states.contains(fa));
    CHECK_FALSE(info.m_states.contains(fb));
    CHECK(info.is_progress[fb]);
    CHECK_FALSE(info.is_progress[gfa]);
    CHECK_FALSE(info.is_progress[fa]);
  }

  // G a alone: everything in M, no progress formulae
  {
    Session s2;
    Vwaa v = build_vwaa(s2, pnf_of(s2, "[] a"), VwaaMode::Improved);
    SuspensionInfo info = compute_suspension(v);
    for (uint32_t q = 0; q < v.states.size(); ++q)
      CHECK_FALSE(info.is_progress[q]);
  }

  // a U b: no R-state exists, M is empty, the U-state is progress
  {
    Session s3;
    Vwaa v = build_vwaa(s3, pnf_of(s3, "a U b"), VwaaMode::Improved);
    SuspensionInfo info = compute_suspension(v);
    CHECK(info.m_states.empty());
    CHECK(info.is_progress[v.state_of(pnf_of(s3, "a U b"))]);
  }
}

// The GF a && F b example worked through the paper's figures: the VWAA in
// original mode (states GFa, Fb, Fa) kept unsimplified, then the TGBA with
// and without suspension.
TEST_CASE("suspension changes the product of GF a && F b as in the figures") {
  Session s;
  Formula phi = pnf_of(s, "([]<>a) && (<>b)");
  Vwaa v = simplify_vwaa(build_vwaa(s, phi, VwaaMode::Original), VwaaSimplify::Basic);

  Formula gfa = pnf_of(s, "[]<>a");
  Formula fb = pnf_of(s, "<>b");
  Formula fa = pnf_of(s, "<>a");
  uint32_t i_gfa = v.state_of(gfa), i_fb = v.state_of(fb), i_fa = v.state_of(fa);
  Label a = s.atom_label(*s.formulas.ap_index("a"));
  Label b = s.atom_label(*s.formulas.ap_index("b"));

  TgbaOptions with, without;
  with.gf_fastpath = without.gf_fastpath = false;
  without.suspend = false;

  // suspended: the alternating GFa is frozen while Fb is pending
  {
    Tgba g = build_tgba(v, with);
    IdSet init{i_gfa, i_fb};
    CHECK(out_degree(g, init) == 2);
    CHECK(has_trans(g, init, {s.top(), init, {}}));                 // wait
    CHECK(has_trans(g, init, {b, IdSet{i_gfa}, IdSet{i_fb, i_fa}})); // progress
  }

  // without suspension: the four products of the original translation
  {
    Tgba g = build_tgba(v, without);
    IdSet init{i_gfa, i_fb};
    CHECK(out_degree(g, init) == 4);
    CHECK(has_trans(g, init, {a, init, IdSet{i_fa}}));
    CHECK(has_trans(g, init, {s.top(), IdSet{i_gfa, i_fb, i_fa}, {}}));
    CHECK(has_trans(g, init, {b, IdSet{i_gfa, i_fa}, IdSet{i_fb}}));
    CHECK(has_trans(g, init, {conj(a, b), IdSet{i_gfa}, IdSet{i_fb, i_fa}}));
  }

  // full result after state merging: two states as in the figure
  {
    Tgba g = simplify_tgba(build_tgba(v, with));
    REQUIRE(g.states.size() == 2);
    IdSet init{i_gfa, i_fb};
    CHECK(has_trans(g, init, {s.top(), init, {}}));
    CHECK(has_trans(g, init, {b, IdSet{i_gfa}, IdSet{i_fb, i_fa}}));
    CHECK(has_trans(g, IdSet{i_gfa}, {a, IdSet{i_gfa}, IdSet{i_fb, i_fa}}));
    CHECK(has_trans(g, IdSet{i_gfa}, {s.top(), IdSet{i_gfa}, IdSet{i_fb}}));
    CHECK(out_degree(g, init) == 2);
    CHECK(out_degree(g, IdSet{i_gfa}) == 2);

    // acceptance spot-checks on that automaton
    CHECK(tgba_accepts(g, parse_lasso(s.formulas, "{b}|{a}")));
    CHECK_FALSE(tgba_accepts(g, parse_lasso(s.formulas, "|{}")));
    CHECK_FALSE(tgba_accepts(g, parse_lasso(s.formulas, "|{a}"))); // b never
    CHECK_FALSE(tgba_accepts(g, parse_lasso(s.formulas, "{a b}|{}"))); // a finitely
  }
}

// hand-transcription of the accepting cycle that distinguishes the original
// accepting-set definition from the corrected one: under the original
// definition the back edge carries one mark too many and the word
// ({p1,p2}{p3})^omega is wrongly accepted
TEST_CASE("the acceptance oracle separates the two mark assignments") {
  Session s;
  for (const char* name : {"p1", "p2", "p3", "q"})
    s.formulas.atom(name);
  Label p1 = s.atom_label(0), p2 = s.atom_label(1), p3 = s.atom_label(2);

  auto make = [&](uint64_t back_edge_marks) {
    Tgba g;
    g.session = &s;
    g.acc_sets = {0, 1, 2};     // stand-ins for T2, T3, T4
    g.states = {IdSet{0}, IdSet{1}};
    g.initial = {0};
    g.delta.resize(2);
    // {1,2,4} --p3:{3,4}--> {1,2,5} and back with p1&&p2
    g.delta[0].push_back({p3, 1, 0b110});
    g.delta[1].push_back({conj(p1, p2), 0, back_edge_marks});
    return g;
  };

  // the same ultimately-periodic word, rotated to start at the p3 edge
  LassoWord w = parse_lasso(s.formulas, "|{p3}{p1 p2}");
  Tgba incorrect = make(0b011); // p1&&p2:{2,3} as in the flawed figure
  Tgba corrected = make(0b010); // p1&&p2:{3} with the corrected definition
  CHECK(tgba_accepts(incorrect, w));
  CHECK_FALSE(tgba_accepts(corrected, w));
}

// the counterexample that motivates the corrected accepting sets: the
// suspended product must not accept ({p1,p2}{p3})^omega
TEST_CASE("corrected acceptance rejects the counterexample word") {
  Session s;
  Formula phi = pnf_of(s, "((X((p1 V p2) || (!p1 U p3))) U p1) && ([]<> q)");
  for (VwaaMode mode : {VwaaMode::Original, VwaaMode::Improved}) {
    for (VwaaSimplify simp : {VwaaSimplify::Basic, VwaaSimplify::General}) {
      Vwaa v = simplify_vwaa(build_vwaa(s, phi, mode), simp);
      for (bool susp : {true, false}) {
        TgbaOptions opt;
        opt.suspend = susp;
        Tgba g = simplify_tgba(build_tgba(v, opt));
        LassoWord w = parse_lasso(s.formulas, "|{p1 p2}{p3}");
        CHECK_FALSE(tgba_accepts(g, w));
        // also some variations with finitely many q
        CHECK_FALSE(tgba_accepts(g, parse_lasso(s.formulas, "{q}{q}|{p1 p2}{p3}")));
        CHECK_FALSE(tgba_accepts(g, parse_lasso(s.formulas, "{p1 q}|{p1 p2 p3}")));
        // sanity: words satisfying the formula are accepted
        CHECK(tgba_accepts(g, parse_lasso(s.formulas, "{p1}|{q}")));
      }
    }
  }
}

TEST_CASE("gf fastpath constructs the expected self-loops") {
  Session s;

  // G a: a single safety loop
  {
    Formula phi = pnf_of(s, "[] a");
    Vwaa v = simplify_vwaa(build_vwaa(s, phi, VwaaMode::Improved));
    auto fast = gf_fastpath(v, IdSet{v.state_of(phi)}, {}, 0);
    REQUIRE(fast.has_value());
    REQUIRE(fast->size() == 1);
    CHECK((*fast)[0].label == s.atom_label(*s.formulas.ap_index("a")));
    CHECK((*fast)[0].marks == 0);
  }

  // GF a: two loops, (a, marked) and (!a, unmarked)
  {
    Session s2;
    Formula phi = pnf_of(s2, "[]<> a");
    Vwaa v = simplify_vwaa(build_vwaa(s2, phi, VwaaMode::Improved));
    std::vector<uint32_t> acc;
    for (uint32_t f : v.accepting)
      acc.push_back(f);
    auto fast = gf_fastpath(v, IdSet{v.state_of(phi)}, acc, 0);
    REQUIRE(fast.has_value());
    REQUIRE(fast->size() == 2);
    Label a = s2.atom_label(*s2.formulas.ap_index("a"));
    CHECK((*fast)[0].label == neg(a));
    CHECK((*fast)[0].marks == 0);
    CHECK((*fast)[1].label == a);
    CHECK((*fast)[1].marks == 1);
  }

  // GF a && GF b: one loop per subset of covered operands
  {
    Session s2;
    Formula phi = pnf_of(s2, "([]<>a) && ([]<>b)");
    Translation t = run_pipeline(s2, phi, {});
    REQUIRE(t.tgba.states.size() == 1);
    REQUIRE(t.tgba.acc_sets.size() == 2);
    const auto& loops = t.tgba.delta[0];
    REQUIRE(loops.size() == 4);
    Label a = s2.atom_label(*s2.formulas.ap_index("a"));
    Label b = s2.atom_label(*s2.formulas.ap_index("b"));
    auto find_marks = [&](Label l) -> int64_t {
      for (const auto& tr : loops)
        if (tr.label == l && tr.target == 0)
          return int64_t(tr.marks);
      return -1;
    };
    CHECK(find_marks(conj(neg(a), neg(b))) == 0b00);
    CHECK(find_marks(conj(a, neg(b))) != -1);
    CHECK(find_marks(conj(neg(a), b)) != -1);
    CHECK(find_marks(conj(a, b)) == 0b11);
    // the two singleton cells carry exactly one distinct mark each
    int64_t ma = find_marks(conj(a, neg(b))), mb = find_marks(conj(neg(a), b));
    CHECK((ma == 0b01 || ma == 0b10));
    CHECK(ma + mb == 0b11);
  }

  // non-matching shapes
  {
    Session s3;
    Formula phi = pnf_of(s3, "(<> a) && ([] b)");
    Vwaa v = simplify_vwaa(build_vwaa(s3, phi, VwaaMode::Improved));
    CHECK_FALSE(gf_fastpath(v, v.initial[0], {}, 0).has_value());
  }
}

// the paper observes that TGBA states on accepting cycles stay inside M;
// reported empirically, not relied on
TEST_CASE("states on all-mark cycles are subsets of M (empirical)") {
  Corpus c = make_corpus(80, 3, 9, 3, 222, true);
  Session& s = *c.session;
  int violations = 0;
  for (Formula f : c.formulas) {
    Vwaa v = simplify_vwaa(build_vwaa(s, f, VwaaMode::Improved));
    SuspensionInfo info = compute_suspension(v);
    TgbaOptions opt;
    Tgba g = simplify_tgba(build_tgba(v, opt));
    uint64_t all = g.all_marks();
    // mark-union per SCC of the TGBA graph (simple Kosaraju-free check:
    // iterate pair reachability through a Floyd-Warshall style closure,
    // fine at corpus sizes)
    size_t n = g.states.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (uint32_t q = 0; q < n; ++q)
      for (const auto& t : g.delta[q])
        reach[q][t.target] = true;
    for (uint32_t k = 0; k < n; ++k)
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
          reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    for (uint32_t q = 0; q < n; ++q) {
      if (!reach[q][q])
        continue;
      uint64_t scc_marks = 0;
      for (uint32_t r = 0; r < n; ++r) {
        if (!(reach[q][r] && reach[r][q]))
          continue;
        for (const auto& t : g.delta[r])
          if (reach[t.target][q] && reach[q][t.target])
            scc_marks |= t.marks;
      }
      if ((scc_marks & all) == all) {
        bool inside_m = true;
        for (uint32_t vstate : g.states[q])
          inside_m &= info.m_states.contains(vstate);
        if (!inside_m)
          ++violations;
      }
    }
  }
  WARN_MESSAGE(violations == 0,
               "observation violated " << violations << " times on this corpus");
}

TEST_CASE("gf fastpath agrees with the generic construction") {
  // on every state of the GF shape, the directly-constructed loops must
  // equal what the generic product left there after simplification
  int matched_states = 0;
  for (const char* txt : {"[]<>a", "([]<>a) && ([]<>b)", "([] c) && ([]<>a)",
                          "([]<>a) && ([]<>b) && ([]<>c)", "[] a",
                          "([]<>a) U b", "(<>c) && ([]<>a) && ([]<>b)"}) {
    Session s;
    PipelineConfig generic;
    generic.gf_fastpath = false;
    Translation t = run_pipeline(s, pnf_of(s, txt), generic);
    const Tgba& g = t.tgba;
    for (uint32_t q = 0; q < g.states.size(); ++q) {
      auto fast = gf_fastpath(t.vwaa, g.states[q], g.acc_sets, q);
      if (!fast)
        continue;
      // the equality claim is per state-set; a conjunction-rooted state is
      // collapsed by the fast path on purpose and only language-compared
      bool all_g = true;
      for (uint32_t v : g.states[q])
        all_g &= t.vwaa.states[v].kind() == Kind::Always;
      if (!all_g)
        continue;
      ++matched_states;
      auto sorted = [](std::vector<Tgba::Trans> ts) {
        std::sort(ts.begin(), ts.end(), [](const Tgba::Trans& a, const Tgba::Trans& b) {
          return std::make_tuple(a.label.id(), a.target, a.marks) <
                 std::make_tuple(b.label.id(), b.target, b.marks);
        });
        return ts;
      };
      INFO(std::string(txt) << " state " << g.state_name(q));
      CHECK(sorted(*fast) == sorted(g.delta[q]));
    }

    // and the two pipeline variants recognize the same language
    PipelineConfig with;
    Translation tf = run_pipeline(s, pnf_of(s, txt), with);
    for (const auto& w : sample_lassos(s))
      CHECK(tgba_accepts(tf.tgba, w) == tgba_accepts(g, w));
  }
  CHECK(matched_states >= 5);
}

TEST_CASE("mark coverage: a mark on a transition implies a non-looping step") {
  Corpus c = make_corpus(80, 3, 9, 3, 41, true);
  Session& s = *c.session;
  for (Formula f : c.formulas) {
    Vwaa v = simplify_vwaa(build_vwaa(s, f, VwaaMode::Improved));
    TgbaOptions opt;
    opt.gf_fastpath = false;
    Tgba g = build_tgba(v, opt);
    for (uint32_t q = 0; q < g.states.size(); ++q)
      for (const auto& t : g.delta[q])
        for (size_t j = 0; j < g.acc_sets.size(); ++j) {
          if (!(t.marks & (uint64_t(1) << j)))
            continue;
          uint32_t acc = g.acc_sets[j];
          if (!g.states[q].contains(acc) || !g.states[t.target].contains(acc))
            continue;
          // f in source and target: some delta(f) step must avoid f while
          // staying inside the transition
          bool witness = false;
          for (const auto& step : v.delta[acc])
            if (!step.targets.contains(acc) && t.label.implies(step.label) &&
                step.targets.is_subset_of(g.states[t.target]))
              witness = true;
          CHECK(witness);
        }
  }
}

TEST_CASE("language invariants of the TGBA stage on the corpus") {
  Corpus c = make_corpus(120, 3, 9, 3, 53, true);
  Session& s = *c.session;
  auto lassos = sample_lassos(s);
  for (Formula f : c.formulas) {
    Vwaa v = simplify_vwaa(build_vwaa(s, f, VwaaMode::Improved));
    TgbaOptions on, off;
    off.suspend = false;
    Tgba g_on = simplify_tgba(build_tgba(v, on));
    Tgba g_off = simplify_tgba(build_tgba(v, off));
    for (const auto& w : lassos) {
      bool expected = eval(f, w);
      CHECK(tgba_accepts(g_on, w) == expected);
      CHECK(tgba_accepts(g_off, w) == expected);
    }
  }
}

TEST_CASE("simplify_tgba reaches a fixpoint") {
  Session s;
  Formula phi = pnf_of(s, "([]<>a) U b");
  Tgba g = simplify_tgba(build_tgba(simplify_vwaa(build_vwaa(s, phi))));
  Tgba g2 = simplify_tgba(g);
  CHECK(g.states.size() == g2.states.size());
  for (uint32_t q = 0; q < g.states.size(); ++q)
    CHECK(g.delta[q].size() == g2.delta[q].size());
}
