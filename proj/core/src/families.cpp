#include "ltl2buchi/families.hpp"

#include <stdexcept>

namespace ltl2buchi {

namespace {

Formula prop(Session& s, const std::string& base, int i) {
  return s.formulas.atom(base + std::to_string(i));
}

Formula conj_all(Session& s, const std::vector<Formula>& fs) {
  Formula r = fs.front();
  for (size_t i = 1; i < fs.size(); ++i)
    r = s.formulas.mk_and(r, fs[i]);
  return r;
}

Formula disj_all(Session& s, const std::vector<Formula>& fs) {
  Formula r = fs.front();
  for (size_t i = 1; i < fs.size(); ++i)
    r = s.formulas.mk_or(r, fs[i]);
  return r;
}

Formula gf(Session& s, Formula f) { return s.formulas.mk_always(s.formulas.mk_eventually(f)); }
Formula fg(Session& s, Formula f) { return s.formulas.mk_eventually(s.formulas.mk_always(f)); }

// F(p1 && F(p2 && ... && F pn)...)
Formula nested_f(Session& s, const std::string& base, int n) {
  Formula r = s.formulas.mk_eventually(prop(s, base, n));
  for (int i = n - 1; i >= 1; --i)
    r = s.formulas.mk_eventually(s.formulas.mk_and(prop(s, base, i), r));
  return r;
}

// F(p && X(p && ... && X p)...), n occurrences of p
Formula nested_x(Session& s, const std::string& name, int n) {
  Formula p = s.formulas.atom(name);
  Formula r = p;
  for (int i = 1; i < n; ++i)
    r = s.formulas.mk_and(p, s.formulas.mk_next(r));
  return s.formulas.mk_eventually(r);
}

// F(p && Xp && X^2 p && ... && X^(n-1) p)
Formula stacked_x(Session& s, const std::string& name, int n) {
  Formula p = s.formulas.atom(name);
  Formula r = p;
  Formula xp = p;
  for (int i = 1; i < n; ++i) {
    xp = s.formulas.mk_next(xp);
    r = s.formulas.mk_and(r, xp);
  }
  return s.formulas.mk_eventually(r);
}

} // namespace

std::vector<std::string> family_names() {
  return {"theta", "u1", "u2", "r",     "s",    "e",           "c1",
          "c2",    "q",  "alpha", "beta", "beta_strict", "psi", "xi"};
}

Formula family(Session& s, const std::string& name, int n) {
  if (n < 1)
    throw std::invalid_argument("family parameter must be >= 1");
  FormulaArena& ar = s.formulas;

  if (name == "theta") {
    // not((GF p1 && ... && GF pn) -> G(q -> F r))
    std::vector<Formula> gfs;
    for (int i = 1; i <= n; ++i)
      gfs.push_back(gf(s, prop(s, "p", i)));
    Formula left = conj_all(s, gfs);
    Formula right = ar.mk_always(
        ar.mk_or(ar.mk_not(ar.atom("q")), ar.mk_eventually(ar.atom("r"))));
    return ar.mk_not(ar.mk_or(ar.mk_not(left), right));
  }
  if (name == "u1") { // (...(p1 U p2) U ...) U pn
    Formula r = prop(s, "p", 1);
    for (int i = 2; i <= n; ++i)
      r = ar.mk_until(r, prop(s, "p", i));
    return r;
  }
  if (name == "u2") { // p1 U (p2 U (... U pn))
    Formula r = prop(s, "p", n);
    for (int i = n - 1; i >= 1; --i)
      r = ar.mk_until(prop(s, "p", i), r);
    return r;
  }
  if (name == "r") { // AND (GF pi || FG p(i+1))
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(ar.mk_or(gf(s, prop(s, "p", i)), fg(s, prop(s, "p", i + 1))));
    return conj_all(s, parts);
  }
  if (name == "s") {
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(ar.mk_always(prop(s, "p", i)));
    return conj_all(s, parts);
  }
  if (name == "e") {
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(ar.mk_eventually(prop(s, "p", i)));
    return conj_all(s, parts);
  }
  if (name == "c1") {
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(gf(s, prop(s, "p", i)));
    return disj_all(s, parts);
  }
  if (name == "c2" || name == "psi") {
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(gf(s, prop(s, "p", i)));
    return conj_all(s, parts);
  }
  if (name == "q") { // AND (F pi || G p(i+1))
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(
          ar.mk_or(ar.mk_eventually(prop(s, "p", i)), ar.mk_always(prop(s, "p", i + 1))));
    return conj_all(s, parts);
  }
  if (name == "alpha")
    return ar.mk_and(nested_f(s, "p", n), nested_f(s, "q", n));
  if (name == "beta")
    return ar.mk_and(nested_x(s, "p", n), nested_x(s, "q", n));
  if (name == "beta_strict")
    return ar.mk_and(stacked_x(s, "p", n), stacked_x(s, "q", n));
  if (name == "xi") {
    std::vector<Formula> parts;
    for (int i = 1; i <= n; ++i)
      parts.push_back(fg(s, prop(s, "p", i)));
    return disj_all(s, parts);
  }
  throw std::invalid_argument("unknown formula family: " + name);
}

} // namespace ltl2buchi
