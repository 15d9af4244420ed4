#pragma once

#include "ltl2buchi/tgba.hpp"

#include <string>
#include <vector>

namespace ltl2buchi {

enum class BaMerge { Basic, SelfLoop };

/// Buchi automaton produced by degeneralizing a TGBA with a level counter.
/// States remember the TGBA state and level they came from.  Transitions to
/// one target are kept merged (one label per (source, target) pair).
struct Ba {
  struct Trans {
    Label label;
    uint32_t target;
    bool operator==(const Trans&) const = default;
  };

  std::vector<std::string> names; // descriptive: TGBA state set + level
  std::vector<std::vector<Trans>> delta;
  std::vector<uint32_t> initial;
  std::vector<bool> accepting;
  Session* session = nullptr;

  size_t size() const { return delta.size(); }
  std::string dot() const;
};

struct BaStats {
  uint64_t states = 0;
  uint64_t transitions = 0; // merged-pair convention: one per (source, target)
  bool deterministic = false;
};

Ba degeneralize(const Tgba& g);

/// Iterated state merging (original rule or the self-loop-aware rule, which
/// subsumes it) plus unreachable-state pruning.
Ba simplify_ba(const Ba& b, BaMerge rule = BaMerge::SelfLoop);

BaStats stats(const Ba& b);

} // namespace ltl2buchi
