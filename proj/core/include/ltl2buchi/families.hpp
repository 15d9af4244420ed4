#pragma once

#include "ltl2buchi/label.hpp"

#include <string>
#include <vector>

namespace ltl2buchi {

/// Parametric benchmark families: theta, u1, u2, r, s, e, c1, c2, q,
/// alpha, beta, beta_strict, psi, xi.  n >= 1.
Formula family(Session& s, const std::string& name, int n);

std::vector<std::string> family_names();

} // namespace ltl2buchi
