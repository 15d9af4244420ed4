#pragma once

#include "ltl2buchi/idset.hpp"
#include "ltl2buchi/label.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace ltl2buchi {

enum class VwaaMode { Original, Improved };
enum class VwaaSimplify { Off, Basic, General };

/// Very weak alternating co-Buchi automaton.  States are formulae; a
/// transition pair (label, target set) means a universal branch into all
/// members of the set.  The subformula order witnesses very-weakness.
struct Vwaa {
  struct Trans {
    Label label;
    IdSet targets;
    bool operator==(const Trans&) const = default;
  };
  using TransSet = std::vector<Trans>;

  std::vector<Formula> states;             // id -> formula
  std::vector<TransSet> delta;             // per state, canonically sorted
  std::vector<IdSet> initial;              // universal branch alternatives
  IdSet accepting;                         // co-Buchi set: U-subformulae

  Session* session = nullptr;
  VwaaMode mode = VwaaMode::Improved;

  uint32_t state_of(Formula f) const;      // throws if f is not a state
  bool has_state(Formula f) const;
  std::string dot() const;
};

/// 2^(Sigma' x Q') product: pairwise label conjunction and target union,
/// unsatisfiable results dropped.
Vwaa::TransSet otimes(BddManager& labels, const Vwaa::TransSet& j1,
                      const Vwaa::TransSet& j2);

/// The overline operator: a PNF formula as a set of state-set alternatives.
std::vector<std::vector<Formula>> overline(Formula f);

Vwaa build_vwaa(Session& s, Formula f, VwaaMode mode = VwaaMode::Improved);

/// Transition simplification.  Basic removes transitions implied by another
/// (weaker label, smaller target set).  General additionally subtracts
/// labels between comparable target sets and merges equal target sets; it
/// subsumes Basic.  Unreachable states are pruned in both modes.
Vwaa simplify_vwaa(const Vwaa& a, VwaaSimplify level = VwaaSimplify::General);

} // namespace ltl2buchi
