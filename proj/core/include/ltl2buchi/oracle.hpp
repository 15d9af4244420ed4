#pragma once

#include "ltl2buchi/ba.hpp"
#include "ltl2buchi/formula.hpp"
#include "ltl2buchi/tgba.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace ltl2buchi {

/// Ultimately periodic word u . v^omega; letters are subsets of the session
/// AP universe encoded as bitmasks.
struct LassoWord {
  std::vector<uint64_t> prefix;
  std::vector<uint64_t> loop; // non-empty

  size_t length() const { return prefix.size() + loop.size(); }
  uint64_t letter(size_t i) const {
    return i < prefix.size() ? prefix[i] : loop[i - prefix.size()];
  }
  size_t succ(size_t i) const { return i + 1 < length() ? i + 1 : prefix.size(); }
};

/// Literal syntax for tests: letters as brace-enclosed proposition sets,
/// `|` starts the loop.  Example: `{a b}{}|{a}`.
LassoWord parse_lasso(const FormulaArena& aps, std::string_view text);

/// Exact satisfaction of the word at position 0.  Works on any formula,
/// including pre-PNF trees with general negation.
bool eval(Formula f, const LassoWord& w);

bool ba_accepts(const Ba& b, const LassoWord& w);
bool tgba_accepts(const Tgba& g, const LassoWord& w);

/// Emptiness of the intersection language, on the shared AP universe.
bool product_empty(const Ba& b1, const Ba& b2);

} // namespace ltl2buchi
