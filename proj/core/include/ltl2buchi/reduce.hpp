#pragma once

#include "ltl2buchi/label.hpp"

#include <map>

namespace ltl2buchi {

/// Rewrite-rule groups; all on by default.  Every group is validated as
/// semantics-preserving by the oracle property suite.
struct RuleSet {
  bool constant_folds = true;
  bool alternating_collapse = true; // phi U gamma, F gamma, ... for alternating gamma
  bool class_collapse = true;       // F mu, G nu
  bool until_absorption = true;     // phi U (phi U psi)
  bool x_factoring = true;          // X/X through R and disjunction
  bool conditional = true;          // the implication-guarded rules
  int max_passes = 64;

  static RuleSet all() { return RuleSet{}; }
  static RuleSet none() {
    RuleSet r;
    r.constant_folds = r.alternating_collapse = r.class_collapse = false;
    r.until_absorption = r.x_factoring = r.conditional = false;
    return r;
  }
};

/// Sound, incomplete syntactic implication: a base relation closed under
/// the three X-introduction derivation rules.  Memoized per session;
/// bounded derivation depth (default 8), false on exhaustion.
bool implies_syntactic(Session& s, Formula a, Formula b, int depth = 8);

/// Innermost-first rewriting to a fixpoint (bounded by max_passes).
/// Never grows the formula.
Formula reduce(Session& s, Formula f, const RuleSet& rules = RuleSet::all());

} // namespace ltl2buchi
