#pragma once

#include "ltl2buchi/bdd.hpp"
#include "ltl2buchi/formula.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ltl2buchi {

/// A transition label: a canonical propositional function over the session's
/// AP universe, denoting a subset of the alphabet 2^AP.  Equal denotations
/// have equal node ids, so equivalence is a pointer-style comparison.
class Label {
public:
  Label() = default;
  Label(BddManager* mgr, uint32_t id) : mgr_(mgr), id_(id) {}

  static Label top(BddManager& m) { return Label(&m, BddManager::kTrue); }
  static Label bottom(BddManager& m) { return Label(&m, BddManager::kFalse); }
  static Label literal(BddManager& m, uint32_t ap, bool positive) {
    return Label(&m, m.literal(ap, positive));
  }

  bool is_sat() const { return id_ != BddManager::kFalse; }
  bool is_top() const { return id_ == BddManager::kTrue; }
  bool implies(Label other) const { return mgr_->implies(id_, other.id_); }
  bool admits(uint64_t letter) const { return mgr_->eval(id_, letter); }

  /// All letters of 2^AP satisfying the label, in lexicographic order.
  /// Only meant for oracle-scale universes.
  std::vector<uint64_t> letters(uint32_t ap_count) const;

  /// Guard syntax used by the emitters: `(a && !b) || c`, `1` for top,
  /// `0` for bottom.
  std::string str(const FormulaArena& aps) const;

  friend Label conj(Label a, Label b) {
    return Label(a.mgr_, a.mgr_->apply_and(a.id_, b.id_));
  }
  friend Label disj(Label a, Label b) {
    return Label(a.mgr_, a.mgr_->apply_or(a.id_, b.id_));
  }
  friend Label neg(Label a) { return Label(a.mgr_, a.mgr_->apply_not(a.id_)); }

  bool operator==(const Label&) const = default;
  uint32_t id() const { return id_; }
  BddManager* manager() const { return mgr_; }

private:
  BddManager* mgr_ = nullptr;
  uint32_t id_ = BddManager::kFalse;
};

/// One translation session: the interning tables for formulae and labels,
/// with the AP universe shared between them.  Sessions are independent and
/// must not share Formula or Label values.
struct Session {
  FormulaArena formulas;
  BddManager labels;
  // memo for the syntactic implication relation, keyed by node identity
  std::map<std::pair<const FormulaNode*, const FormulaNode*>, bool> implies_memo;

  Label top() { return Label::top(labels); }
  Label bottom() { return Label::bottom(labels); }
  Label atom_label(uint32_t ap, bool positive = true) {
    return Label::literal(labels, ap, positive);
  }
  /// Label of a state formula (no temporal operators).
  Label state_label(Formula f);
};

} // namespace ltl2buchi
