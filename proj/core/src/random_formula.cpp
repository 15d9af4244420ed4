#include "ltl2buchi/random_formula.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ltl2buchi {

RandomFormulaGen::RandomFormulaGen(Session& s, const GenConfig& cfg)
    : s_(s), cfg_(cfg), state_(cfg.seed * 0x9e3779b97f4a7c15ull + 1) {
  if (cfg.size_lo < 1 || cfg.size_lo > cfg.size_hi)
    throw std::invalid_argument("invalid size range");
  if (cfg.propositions < 1)
    throw std::invalid_argument("need at least one proposition");
  if (cfg.xor_priority || cfg.equivalence_priority || cfg.before_priority ||
      cfg.weak_until_priority || cfg.strong_release_priority)
    throw std::invalid_argument("unsupported operator has non-zero weight");
  // pre-register the proposition universe in a fixed order
  for (uint32_t i = 1; i <= cfg.propositions; ++i)
    s_.formulas.atom("p" + std::to_string(i));
}

// splitmix64: portable and deterministic across platforms
uint64_t RandomFormulaGen::next_raw() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t RandomFormulaGen::below(uint64_t bound) {
  // rejection sampling to stay unbiased
  uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound);
  uint64_t r;
  do {
    r = next_raw();
  } while (r >= limit);
  return r % bound;
}

Formula RandomFormulaGen::operator()() {
  uint32_t size = cfg_.size_lo + uint32_t(below(cfg_.size_hi - cfg_.size_lo + 1));
  return gen(size);
}

Formula RandomFormulaGen::gen(uint32_t budget) {
  enum Op { Prop, True, False, Next, Ev, Alw, And, Or, Until, Rel };
  std::vector<std::pair<Op, uint64_t>> cand;
  if (budget == 1) {
    cand = {{Prop, cfg_.proposition_priority},
            {True, cfg_.true_priority},
            {False, cfg_.false_priority}};
  } else {
    if (budget >= 2) {
      cand.push_back({Next, cfg_.default_operator_priority});
      cand.push_back({Ev, cfg_.default_operator_priority});
      cand.push_back({Alw, cfg_.default_operator_priority});
    }
    if (budget >= 3) {
      cand.push_back({And, cfg_.and_priority});
      cand.push_back({Or, cfg_.or_priority});
      cand.push_back({Until, cfg_.until_priority});
      cand.push_back({Rel, cfg_.default_operator_priority});
    }
  }
  uint64_t total = 0;
  for (auto& [op, w] : cand)
    total += w;
  if (total == 0)
    throw std::invalid_argument("no operator feasible for the size budget");
  uint64_t pick = below(total);
  Op op = cand.back().first;
  for (auto& [o, w] : cand) {
    if (pick < w) {
      op = o;
      break;
    }
    pick -= w;
  }

  FormulaArena& ar = s_.formulas;
  switch (op) {
  case True:
    return ar.tt();
  case False:
    return ar.ff();
  case Prop: {
    std::string name = "p" + std::to_string(1 + below(cfg_.propositions));
    // NNF output: negation only on propositions, half of the time
    return below(2) ? ar.atom(name) : ar.not_atom(name);
  }
  case Next:
    return ar.mk_next(gen(budget - 1));
  case Ev:
    return ar.mk_eventually(gen(budget - 1));
  case Alw:
    return ar.mk_always(gen(budget - 1));
  default: {
    uint32_t left = 1 + uint32_t(below(budget - 2));
    Formula a = gen(left);
    Formula b = gen(budget - 1 - left);
    switch (op) {
    case And:
      return ar.mk_and(a, b);
    case Or:
      return ar.mk_or(a, b);
    case Until:
      return ar.mk_until(a, b);
    default:
      return ar.mk_release(a, b);
    }
  }
  }
}

} // namespace ltl2buchi
