#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ltl2buchi {

/// Sorted set of small ids (VWAA states, TGBA states).  Canonical: equal
/// sets compare equal; ordering is (size, lexicographic), which is also the
/// iteration order the simplification passes rely on.
class IdSet {
public:
  IdSet() = default;
  IdSet(std::initializer_list<uint32_t> xs) : v_(xs) { normalize(); }
  explicit IdSet(std::vector<uint32_t> xs) : v_(std::move(xs)) { normalize(); }

  bool empty() const { return v_.empty(); }
  size_t size() const { return v_.size(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  uint32_t operator[](size_t i) const { return v_[i]; }

  bool contains(uint32_t x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }

  void insert(uint32_t x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it == v_.end() || *it != x)
      v_.insert(it, x);
  }

  void erase(uint32_t x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it != v_.end() && *it == x)
      v_.erase(it);
  }

  friend IdSet set_union(const IdSet& a, const IdSet& b) {
    IdSet r;
    r.v_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.v_));
    return r;
  }

  bool is_subset_of(const IdSet& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }
  bool is_proper_subset_of(const IdSet& o) const {
    return size() < o.size() && is_subset_of(o);
  }

  bool operator==(const IdSet&) const = default;

  // size first, then lexicographic: deterministic exploration order
  bool operator<(const IdSet& o) const {
    if (v_.size() != o.v_.size())
      return v_.size() < o.v_.size();
    return v_ < o.v_;
  }

  const std::vector<uint32_t>& items() const { return v_; }

private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  std::vector<uint32_t> v_;
};

struct IdSetHash {
  size_t operator()(const IdSet& s) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t x : s)
      h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

} // namespace ltl2buchi
