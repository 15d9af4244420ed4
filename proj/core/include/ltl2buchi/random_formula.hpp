#pragma once

#include "ltl2buchi/label.hpp"

#include <cstdint>

namespace ltl2buchi {

/// Weighted top-down generation of NNF formulae with an exact node count.
/// Operator weights mirror the usual random-testbench parameter names;
/// operators this tool does not support must keep weight 0.
struct GenConfig {
  uint32_t size_lo = 15;
  uint32_t size_hi = 20;
  uint32_t propositions = 8;
  uint64_t seed = 1;

  uint32_t proposition_priority = 50;
  uint32_t true_priority = 1;
  uint32_t false_priority = 1;
  uint32_t and_priority = 10;
  uint32_t or_priority = 10;
  uint32_t until_priority = 30;
  uint32_t default_operator_priority = 15; // X, F, G, R each

  uint32_t xor_priority = 0;
  uint32_t equivalence_priority = 0;
  uint32_t before_priority = 0;
  uint32_t weak_until_priority = 0;
  uint32_t strong_release_priority = 0;
};

class RandomFormulaGen {
public:
  RandomFormulaGen(Session& s, const GenConfig& cfg);

  /// Next formula; size is drawn uniformly from [size_lo, size_hi].
  Formula operator()();

private:
  Formula gen(uint32_t budget);
  uint64_t next_raw();
  uint64_t below(uint64_t bound); // uniform in [0, bound)

  Session& s_;
  GenConfig cfg_;
  uint64_t state_;
};

} // namespace ltl2buchi
