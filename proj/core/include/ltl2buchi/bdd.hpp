#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace ltl2buchi {

/// Reduced ordered BDDs over a fixed variable order (the AP universe of one
/// translation session).  Node ids are canonical: two functions are equal
/// iff their ids are equal.
class BddManager {
public:
  static constexpr uint32_t kFalse = 0;
  static constexpr uint32_t kTrue = 1;

  BddManager();

  uint32_t literal(uint32_t var, bool positive);
  uint32_t apply_not(uint32_t f);
  uint32_t apply_and(uint32_t f, uint32_t g);
  uint32_t apply_or(uint32_t f, uint32_t g);

  // f => g, i.e. f & !g is unsatisfiable
  bool implies(uint32_t f, uint32_t g) { return apply_and(f, apply_not(g)) == kFalse; }

  // evaluate under a letter given as a bitmask over variables
  bool eval(uint32_t f, uint64_t letter) const;

  // all paths to the true terminal; a cube maps var -> polarity, unmentioned
  // vars are don't-cares.  Paths come out in variable order, deterministic.
  using Cube = std::vector<std::pair<uint32_t, bool>>;
  std::vector<Cube> cubes(uint32_t f) const;

  size_t node_count() const { return nodes_.size(); }

private:
  struct Node {
    uint32_t var;
    uint32_t low;
    uint32_t high;
  };

  uint32_t mk(uint32_t var, uint32_t low, uint32_t high);

  std::vector<Node> nodes_;
  std::unordered_map<uint64_t, uint32_t> unique_;
  std::unordered_map<uint64_t, uint32_t> and_cache_;
  std::unordered_map<uint64_t, uint32_t> or_cache_;
  std::unordered_map<uint32_t, uint32_t> not_cache_;
};

} // namespace ltl2buchi
