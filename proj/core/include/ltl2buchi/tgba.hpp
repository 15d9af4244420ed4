#pragma once

#include "ltl2buchi/vwaa.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltl2buchi {

/// Transition-based generalized Buchi automaton.  States are canonical sets
/// of VWAA states; acceptance is one transition set T_f per co-Buchi
/// accepting VWAA state f, stored as a bitmask indexed like `acc_sets`.
struct Tgba {
  struct Trans {
    Label label;
    uint32_t target;
    uint64_t marks;
    bool operator==(const Trans&) const = default;
  };

  std::vector<IdSet> states;                // sets of VWAA state ids
  std::vector<std::vector<Trans>> delta;
  std::vector<uint32_t> initial;
  std::vector<uint32_t> acc_sets;           // mark index -> VWAA accepting state
  std::vector<Formula> vwaa_states;         // VWAA id -> formula (for naming)
  Session* session = nullptr;

  uint64_t all_marks() const {
    return acc_sets.size() == 64 ? ~uint64_t(0)
                                 : (uint64_t(1) << acc_sets.size()) - 1;
  }
  uint32_t state_of(const IdSet& vwaa_ids) const; // throws if absent
  std::string state_name(uint32_t q) const;
  std::string dot() const;
};

struct SuspensionInfo {
  IdSet m_states;                  // least set closed under R-states + rhs subformulae
  std::vector<bool> is_progress;   // outside M (after the temporal restriction)
  std::vector<bool> is_alternating;
  std::vector<bool> is_temporal;
};

/// M and the progress flags.  With `temporal_restriction` only temporal
/// formulae count as progress formulae (the default that performed better).
SuspensionInfo compute_suspension(const Vwaa& a, bool temporal_restriction = true);

struct TgbaOptions {
  bool suspend = true;
  bool temporal_progress_restriction = true;
  bool gf_fastpath = true;
};

Tgba build_tgba(const Vwaa& a, const TgbaOptions& opt = {});

/// Directly-built self-loop transitions for a state whose conjunction is
/// G a0 && GF a1 && ... && GF an with state-formula operands; nullopt when
/// the state does not have that shape.
std::optional<std::vector<Tgba::Trans>> gf_fastpath(const Vwaa& a, const IdSet& state,
                                                    const std::vector<uint32_t>& acc_sets,
                                                    uint32_t self);

/// Merge states with identical outgoing transitions, prune unreachable
/// states, renumber breadth-first.
Tgba simplify_tgba(const Tgba& g);

} // namespace ltl2buchi
