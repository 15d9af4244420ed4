#pragma once

#include "ltl2buchi/ba.hpp"
#include "ltl2buchi/tgba.hpp"

#include <string>

namespace ltl2buchi {

/// SPIN never claim.  One labeled block per state, `accept_` prefix on
/// accepting states, `_init` suffix on the initial one; `skip` for an
/// accepting sink with a top self-loop.
std::string to_never_claim(const Ba& b, const std::string& formula_comment);

/// HOA v1, state-based acceptance (`acc-name: Buchi`).
std::string to_hoa(const Ba& b, const std::string& name);

/// HOA v1, transition-based generalized acceptance
/// (`acc-name: generalized-Buchi m`).
std::string to_hoa(const Tgba& g, const std::string& name);

} // namespace ltl2buchi
