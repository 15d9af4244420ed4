#include "ltl2buchi/bdd.hpp"

#include <cassert>
#include <stdexcept>

namespace ltl2buchi {

namespace {
constexpr uint32_t kTermVar = 0xffffffffu;

uint64_t pack2(uint32_t a, uint32_t b) { return (uint64_t(a) << 32) | b; }
} // namespace

BddManager::BddManager() {
  nodes_.push_back({kTermVar, kFalse, kFalse}); // 0 = false
  nodes_.push_back({kTermVar, kTrue, kTrue});   // 1 = true
}

uint32_t BddManager::mk(uint32_t var, uint32_t low, uint32_t high) {
  if (low == high)
    return low;
  // injective packing: var < 64, node ids < 2^28
  if (nodes_.size() >= (1u << 28))
    throw std::length_error("BDD node table overflow");
  uint64_t key = (uint64_t(var) << 56) | (uint64_t(low) << 28) | uint64_t(high);
  auto it = unique_.find(key);
  if (it != unique_.end())
    return it->second;
  uint32_t id = uint32_t(nodes_.size());
  nodes_.push_back({var, low, high});
  unique_.emplace(key, id);
  return id;
}

uint32_t BddManager::literal(uint32_t var, bool positive) {
  if (var >= 64)
    throw std::length_error("label universe limited to 64 propositions");
  return positive ? mk(var, kFalse, kTrue) : mk(var, kTrue, kFalse);
}

uint32_t BddManager::apply_not(uint32_t f) {
  if (f == kFalse)
    return kTrue;
  if (f == kTrue)
    return kFalse;
  auto it = not_cache_.find(f);
  if (it != not_cache_.end())
    return it->second;
  const Node n = nodes_[f];
  uint32_t r = mk(n.var, apply_not(n.low), apply_not(n.high));
  not_cache_.emplace(f, r);
  return r;
}

uint32_t BddManager::apply_and(uint32_t f, uint32_t g) {
  if (f == g || g == kTrue)
    return f;
  if (f == kTrue)
    return g;
  if (f == kFalse || g == kFalse)
    return kFalse;
  if (f > g)
    std::swap(f, g);
  auto it = and_cache_.find(pack2(f, g));
  if (it != and_cache_.end())
    return it->second;
  const Node& nf = nodes_[f];
  const Node& ng = nodes_[g];
  uint32_t var = std::min(nf.var, ng.var);
  uint32_t f0 = nf.var == var ? nf.low : f;
  uint32_t f1 = nf.var == var ? nf.high : f;
  uint32_t g0 = ng.var == var ? ng.low : g;
  uint32_t g1 = ng.var == var ? ng.high : g;
  uint32_t r = mk(var, apply_and(f0, g0), apply_and(f1, g1));
  and_cache_.emplace(pack2(f, g), r);
  return r;
}

uint32_t BddManager::apply_or(uint32_t f, uint32_t g) {
  if (f == g || g == kFalse)
    return f;
  if (f == kFalse)
    return g;
  if (f == kTrue || g == kTrue)
    return kTrue;
  if (f > g)
    std::swap(f, g);
  auto it = or_cache_.find(pack2(f, g));
  if (it != or_cache_.end())
    return it->second;
  const Node& nf = nodes_[f];
  const Node& ng = nodes_[g];
  uint32_t var = std::min(nf.var, ng.var);
  uint32_t f0 = nf.var == var ? nf.low : f;
  uint32_t f1 = nf.var == var ? nf.high : f;
  uint32_t g0 = ng.var == var ? ng.low : g;
  uint32_t g1 = ng.var == var ? ng.high : g;
  uint32_t r = mk(var, apply_or(f0, g0), apply_or(f1, g1));
  or_cache_.emplace(pack2(f, g), r);
  return r;
}

bool BddManager::eval(uint32_t f, uint64_t letter) const {
  while (f > kTrue) {
    const Node& n = nodes_[f];
    f = (letter >> n.var) & 1 ? n.high : n.low;
  }
  return f == kTrue;
}

std::vector<BddManager::Cube> BddManager::cubes(uint32_t f) const {
  std::vector<Cube> out;
  Cube path;
  std::function<void(uint32_t)> walk = [&](uint32_t id) {
    if (id == kFalse)
      return;
    if (id == kTrue) {
      out.push_back(path);
      return;
    }
    const Node& n = nodes_[id];
    path.emplace_back(n.var, false);
    walk(n.low);
    path.back().second = true;
    walk(n.high);
    path.pop_back();
  };
  walk(f);
  return out;
}

} // namespace ltl2buchi
