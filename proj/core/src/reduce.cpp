#include "ltl2buchi/reduce.hpp"

#include <cassert>

namespace ltl2buchi {

namespace {

using Memo = std::map<std::pair<const FormulaNode*, const FormulaNode*>, bool>;

bool implies_rec(Session& s, Memo& memo, Formula a, Formula b, int depth) {
  if (a == b || a.kind() == Kind::False || b.kind() == Kind::True)
    return true;
  if (depth <= 0)
    return false;
  auto key = std::make_pair(a.node(), b.node());
  auto it = memo.find(key);
  if (it != memo.end())
    return it->second;
  memo.emplace(key, false); // cuts cycles; the relation is monotone

  auto imp = [&](Formula x, Formula y) { return implies_rec(s, memo, x, y, depth - 1); };

  bool r = false;
  // decompose the right side
  if (!r && b.kind() == Kind::And)
    r = imp(a, b.lhs()) && imp(a, b.rhs());
  if (!r && b.kind() == Kind::Or)
    r = imp(a, b.lhs()) || imp(a, b.rhs());
  // decompose the left side
  if (!r && a.kind() == Kind::Or)
    r = imp(a.lhs(), b) && imp(a.rhs(), b);
  if (!r && a.kind() == Kind::And)
    r = imp(a.lhs(), b) || imp(a.rhs(), b);
  // G phi => phi,  phi => F phi
  if (!r && a.kind() == Kind::Always)
    r = imp(a.child(), b);
  if (!r && b.kind() == Kind::Eventually)
    r = imp(a, b.child());
  // until/release unfolding consequences
  if (!r && a.kind() == Kind::Until)
    r = imp(a.lhs(), b) && imp(a.rhs(), b); // U implies lhs or rhs now
  if (!r && a.kind() == Kind::Release)
    r = imp(a.rhs(), b);
  if (!r && b.kind() == Kind::Until)
    r = imp(a, b.rhs());
  if (!r && b.kind() == Kind::Release)
    r = imp(a, b.lhs()) && imp(a, b.rhs());
  // the three derivation rules
  if (!r && a.kind() == Kind::Always && b.kind() == Kind::Next)
    r = imp(a, b.child()); // G phi => psi  /  G phi => X psi
  if (!r && a.kind() == Kind::Next && b.kind() == Kind::Eventually)
    r = imp(a.child(), b); // phi => F psi  /  X phi => F psi
  if (!r && a.kind() == Kind::Next && b.kind() == Kind::Next)
    r = imp(a.child(), b.child()); // phi => psi  /  X phi => X psi

  memo[key] = r;
  return r;
}

} // namespace

bool implies_syntactic(Session& s, Formula a, Formula b, int depth) {
  return implies_rec(s, s.implies_memo, a, b, depth);
}

namespace {

struct Rewriter {
  Session& s;
  const RuleSet& rules;
  std::map<const FormulaNode*, Formula> memo;

  Formula arena_mk(Kind k, Formula a, Formula b = Formula()) {
    return s.formulas.mk(k, a, b);
  }

  bool imp(Formula a, Formula b) { return implies_syntactic(s, a, b); }

  // rules applicable at the root; children are already reduced
  Formula apply_at_root(Formula f) {
    while (true) {
      Formula g = step(f);
      if (g == f)
        return f;
      f = g;
    }
  }

  Formula build(Kind k, Formula a, Formula b = Formula()) {
    return apply_at_root(arena_mk(k, a, b));
  }

  Formula step(Formula f) {
    Kind k = f.kind();
    Formula tt = s.formulas.tt();
    Formula ff = s.formulas.ff();

    if (rules.constant_folds) {
      switch (k) {
      case Kind::And:
        if (f.lhs() == ff || f.rhs() == ff)
          return ff;
        if (f.lhs() == tt)
          return f.rhs();
        if (f.rhs() == tt)
          return f.lhs();
        if (f.lhs() == f.rhs())
          return f.lhs();
        break;
      case Kind::Or:
        if (f.lhs() == tt || f.rhs() == tt)
          return tt;
        if (f.lhs() == ff)
          return f.rhs();
        if (f.rhs() == ff)
          return f.lhs();
        if (f.lhs() == f.rhs())
          return f.lhs();
        break;
      case Kind::Next:
      case Kind::Eventually:
      case Kind::Always:
        if (f.child() == tt)
          return tt;
        if (f.child() == ff)
          return ff;
        break;
      case Kind::Until:
        if (f.rhs() == tt || f.rhs() == ff)
          return f.rhs();
        if (f.lhs() == ff || f.lhs() == f.rhs())
          return f.rhs();
        if (f.lhs() == tt)
          return build(Kind::Eventually, f.rhs());
        break;
      case Kind::Release:
        if (f.rhs() == tt || f.rhs() == ff)
          return f.rhs();
        if (f.lhs() == tt || f.lhs() == f.rhs())
          return f.rhs();
        if (f.lhs() == ff)
          return build(Kind::Always, f.rhs());
        break;
      default:
        break;
      }
    }

    if (rules.alternating_collapse) {
      switch (k) {
      case Kind::Until:
      case Kind::Release:
        if (f.rhs().alternating())
          return f.rhs();
        break;
      case Kind::Next:
      case Kind::Eventually:
      case Kind::Always:
        if (f.child().alternating())
          return f.child();
        break;
      default:
        break;
      }
    }

    if (rules.class_collapse) {
      if (k == Kind::Eventually && f.child().pure_eventuality())
        return f.child();
      if (k == Kind::Always && f.child().pure_universality())
        return f.child();
    }

    if (rules.until_absorption && k == Kind::Until && f.rhs().kind() == Kind::Until &&
        f.rhs().lhs() == f.lhs())
      return f.rhs();

    if (rules.x_factoring) {
      if (k == Kind::Release && f.lhs().kind() == Kind::Next &&
          f.rhs().kind() == Kind::Next)
        return build(Kind::Next, build(Kind::Release, f.lhs().child(), f.rhs().child()));
      if (k == Kind::Or && f.lhs().kind() == Kind::Next && f.rhs().kind() == Kind::Next)
        return build(Kind::Next, build(Kind::Or, f.lhs().child(), f.rhs().child()));
    }

    if (rules.conditional) {
      // psi U (phi U gamma) == psi U gamma,  given phi => psi
      if (k == Kind::Until && f.rhs().kind() == Kind::Until &&
          f.rhs().rhs().alternating() && imp(f.rhs().lhs(), f.lhs()))
        return build(Kind::Until, f.lhs(), f.rhs().rhs());
      // (psi R gamma) R phi == gamma R phi,  given phi => psi
      if (k == Kind::Release && f.lhs().kind() == Kind::Release &&
          f.lhs().rhs().alternating() && imp(f.rhs(), f.lhs().lhs()))
        return build(Kind::Release, f.lhs().rhs(), f.rhs());
      // phi && (psi && gamma) == phi && gamma,  given phi => psi
      if (k == Kind::And && f.rhs().kind() == Kind::And && f.rhs().rhs().alternating() &&
          imp(f.lhs(), f.rhs().lhs()))
        return build(Kind::And, f.lhs(), f.rhs().rhs());
      // psi || (phi || gamma) == psi || gamma,  given phi => psi
      if (k == Kind::Or && f.rhs().kind() == Kind::Or && f.rhs().rhs().alternating() &&
          imp(f.rhs().lhs(), f.lhs()))
        return build(Kind::Or, f.lhs(), f.rhs().rhs());
      // phi U (gamma R (psi U rho)) == gamma R (psi U rho),  given phi => psi
      if (k == Kind::Until && f.rhs().kind() == Kind::Release &&
          f.rhs().lhs().alternating() && f.rhs().rhs().kind() == Kind::Until &&
          imp(f.lhs(), f.rhs().rhs().lhs()))
        return f.rhs();
    }

    return f;
  }

  Formula rewrite(Formula f) {
    auto it = memo.find(f.node());
    if (it != memo.end())
      return it->second;
    Formula g;
    if (is_leaf(f.kind())) {
      g = apply_at_root(f);
    } else if (is_unary(f.kind())) {
      g = build(f.kind(), rewrite(f.child()));
    } else {
      g = build(f.kind(), rewrite(f.lhs()), rewrite(f.rhs()));
    }
    memo.emplace(f.node(), g);
    return g;
  }
};

} // namespace

Formula reduce(Session& s, Formula f, const RuleSet& rules) {
  assert(f.in_pnf());
  for (int pass = 0; pass < rules.max_passes; ++pass) {
    Rewriter rw{s, rules, {}};
    Formula g = rw.rewrite(f);
    assert(g.size() <= f.size());
    if (g == f)
      return f;
    f = g;
  }
  return f;
}

} // namespace ltl2buchi
