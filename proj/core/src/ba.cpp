#include "ltl2buchi/ba.hpp"

#include <map>
#include <queue>
#include <sstream>

namespace ltl2buchi {

namespace {

// merge parallel transitions into one label per target, sort by target
void normalize(std::vector<Ba::Trans>& ts) {
  std::map<uint32_t, Label> per_target;
  for (const auto& t : ts) {
    auto [it, fresh] = per_target.emplace(t.target, t.label);
    if (!fresh)
      it->second = disj(it->second, t.label);
  }
  ts.clear();
  for (const auto& [target, label] : per_target)
    ts.push_back({label, target});
}

} // namespace

Ba degeneralize(const Tgba& g) {
  uint32_t m = uint32_t(g.acc_sets.size());
  Ba b;
  b.session = g.session;

  // state = (TGBA state, level); level m is the accepting layer and restarts
  // the count.  A transition advances as far as its marks allow.
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
  std::queue<std::pair<uint32_t, uint32_t>> work;
  auto discover = [&](uint32_t q, uint32_t level) {
    auto key = std::make_pair(q, level);
    auto it = ids.find(key);
    if (it != ids.end())
      return it->second;
    uint32_t id = uint32_t(b.names.size());
    ids.emplace(key, id);
    std::ostringstream name;
    name << g.state_name(q) << '#' << level;
    b.names.push_back(name.str());
    b.accepting.push_back(level == m);
    b.delta.emplace_back();
    work.push(key);
    return id;
  };

  // with m == 0 the only level is 0 == m, a single all-accepting layer
  for (uint32_t q : g.initial)
    b.initial.push_back(discover(q, 0));

  while (!work.empty()) {
    auto [q, level] = work.front();
    work.pop();
    uint32_t id = ids.at({q, level});
    uint32_t base = level == m ? 0 : level;
    std::vector<Ba::Trans> out; // discover() grows b.delta
    for (const auto& t : g.delta[q]) {
      uint32_t next = base;
      while (next < m && (t.marks & (uint64_t(1) << next)))
        ++next;
      out.push_back({t.label, discover(t.target, next)});
    }
    normalize(out);
    b.delta[id] = std::move(out);
  }
  return b;
}

namespace {

Ba prune_and_renumber(const Ba& b) {
  std::vector<int64_t> newid(b.size(), -1);
  std::vector<uint32_t> order;
  std::queue<uint32_t> work;
  for (uint32_t i : b.initial)
    if (newid[i] < 0) {
      newid[i] = int64_t(order.size());
      order.push_back(i);
      work.push(i);
    }
  while (!work.empty()) {
    uint32_t q = work.front();
    work.pop();
    for (const auto& t : b.delta[q])
      if (newid[t.target] < 0) {
        newid[t.target] = int64_t(order.size());
        order.push_back(t.target);
        work.push(t.target);
      }
  }
  Ba out;
  out.session = b.session;
  for (uint32_t old : order) {
    out.names.push_back(b.names[old]);
    out.accepting.push_back(b.accepting[old]);
  }
  for (uint32_t old : order) {
    auto ts = b.delta[old];
    for (auto& t : ts)
      t.target = uint32_t(newid[t.target]);
    normalize(ts);
    out.delta.push_back(std::move(ts));
  }
  for (uint32_t i : b.initial) {
    uint32_t ni = uint32_t(newid[i]);
    if (std::find(out.initial.begin(), out.initial.end(), ni) == out.initial.end())
      out.initial.push_back(ni);
  }
  return out;
}

} // namespace

Ba simplify_ba(const Ba& input, BaMerge rule) {
  Ba cur = prune_and_renumber(input);
  constexpr uint32_t kSelf = 0xffffffffu;
  bool changed = true;
  while (changed) {
    changed = false;
    // signature: acceptance bit + outgoing transitions, self targets
    // replaced by a placeholder under the self-loop-aware rule
    std::map<std::pair<bool, std::vector<std::pair<uint32_t, uint32_t>>>, uint32_t> sig;
    std::vector<uint32_t> remap(cur.size());
    for (uint32_t q = 0; q < cur.size(); ++q) {
      std::vector<std::pair<uint32_t, uint32_t>> key;
      for (const auto& t : cur.delta[q]) {
        uint32_t tgt = (rule == BaMerge::SelfLoop && t.target == q) ? kSelf : t.target;
        key.emplace_back(tgt, t.label.id());
      }
      std::sort(key.begin(), key.end());
      auto [it, fresh] = sig.emplace(std::make_pair(cur.accepting[q], std::move(key)), q);
      remap[q] = it->second;
      if (!fresh)
        changed = true;
    }
    if (changed) {
      // redirect every edge into a merged state to the surviving state;
      // a merged state's own self-loops follow it there
      for (uint32_t q = 0; q < cur.size(); ++q)
        for (auto& t : cur.delta[q])
          t.target = remap[t.target];
      for (auto& i : cur.initial)
        i = remap[i];
      cur = prune_and_renumber(cur);
    }
  }
  return cur;
}

BaStats stats(const Ba& b) {
  BaStats st;
  st.states = b.size();
  st.deterministic = b.initial.size() <= 1;
  for (uint32_t q = 0; q < b.size(); ++q) {
    // merged-pair convention: all arcs from q to one target count once
    std::map<uint32_t, Label> per_target;
    for (const auto& t : b.delta[q]) {
      auto [it, fresh] = per_target.emplace(t.target, t.label);
      if (!fresh)
        it->second = disj(it->second, t.label);
    }
    st.transitions += per_target.size();
    if (st.deterministic)
      for (auto i = per_target.begin(); i != per_target.end(); ++i)
        for (auto j = std::next(i); j != per_target.end(); ++j)
          if (conj(i->second, j->second).is_sat()) {
            st.deterministic = false;
            break;
          }
  }
  return st;
}

std::string Ba::dot() const {
  std::ostringstream os;
  const FormulaArena& aps = session->formulas;
  os << "digraph ba {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (uint32_t q = 0; q < size(); ++q) {
    os << "  s" << q << " [label=\"" << names[q] << '"';
    if (accepting[q])
      os << ", shape=doublecircle";
    os << "];\n";
  }
  for (size_t i = 0; i < initial.size(); ++i)
    os << "  i" << i << " [style=invis];\n  i" << i << " -> s" << initial[i] << ";\n";
  for (uint32_t q = 0; q < size(); ++q)
    for (const auto& t : delta[q])
      os << "  s" << q << " -> s" << t.target << " [label=\"" << t.label.str(aps)
         << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace ltl2buchi
