#include "ltl2buchi/oracle.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>

namespace ltl2buchi {

LassoWord parse_lasso(const FormulaArena& aps, std::string_view text) {
  LassoWord w;
  bool in_loop = false;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] == '|') {
      if (in_loop)
        throw std::invalid_argument("lasso: second '|'");
      in_loop = true;
      ++pos;
      skip_ws();
      continue;
    }
    if (text[pos] != '{')
      throw std::invalid_argument("lasso: expected '{'");
    ++pos;
    uint64_t letter = 0;
    skip_ws();
    while (pos < text.size() && text[pos] != '}') {
      size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      if (pos == start)
        throw std::invalid_argument("lasso: expected proposition name");
      auto idx = aps.ap_index(text.substr(start, pos - start));
      if (!idx)
        throw std::invalid_argument("lasso: unknown proposition");
      letter |= uint64_t(1) << *idx;
      skip_ws();
    }
    if (pos >= text.size())
      throw std::invalid_argument("lasso: unterminated letter");
    ++pos; // '}'
    (in_loop ? w.loop : w.prefix).push_back(letter);
    skip_ws();
  }
  if (w.loop.empty())
    throw std::invalid_argument("lasso: loop must be non-empty");
  return w;
}

namespace {

// per-position truth values, least/greatest fixpoints resolved by two
// backward sweeps over the loop and one over the prefix
struct Evaluator {
  const LassoWord& w;
  size_t len;
  size_t loop_start;
  std::map<const FormulaNode*, std::vector<char>> memo;

  const std::vector<char>& vals(Formula f) {
    auto it = memo.find(f.node());
    if (it != memo.end())
      return it->second;
    std::vector<char> v(len, 0);
    switch (f.kind()) {
    case Kind::True:
      std::fill(v.begin(), v.end(), 1);
      break;
    case Kind::False:
      break;
    case Kind::Atom:
      for (size_t i = 0; i < len; ++i)
        v[i] = (w.letter(i) >> f.atom()) & 1;
      break;
    case Kind::NotAtom:
      for (size_t i = 0; i < len; ++i)
        v[i] = !((w.letter(i) >> f.atom()) & 1);
      break;
    case Kind::Not: {
      const auto& a = vals(f.child());
      for (size_t i = 0; i < len; ++i)
        v[i] = !a[i];
      break;
    }
    case Kind::And: {
      const auto& a = vals(f.lhs());
      const auto& b = vals(f.rhs());
      for (size_t i = 0; i < len; ++i)
        v[i] = a[i] && b[i];
      break;
    }
    case Kind::Or: {
      const auto& a = vals(f.lhs());
      const auto& b = vals(f.rhs());
      for (size_t i = 0; i < len; ++i)
        v[i] = a[i] || b[i];
      break;
    }
    case Kind::Next: {
      const auto& a = vals(f.child());
      for (size_t i = 0; i < len; ++i)
        v[i] = a[w.succ(i)];
      break;
    }
    case Kind::Until:
    case Kind::Eventually: {
      const auto& r = vals(f.kind() == Kind::Until ? f.rhs() : f.child());
      const std::vector<char> ones(len, 1);
      const auto& l = f.kind() == Kind::Until ? vals(f.lhs()) : ones;
      // least fixpoint of v = r | (l & X v), seeded with false
      for (int pass = 0; pass < 2; ++pass)
        for (size_t i = len; i-- > loop_start;)
          v[i] = r[i] || (l[i] && v[w.succ(i)]);
      for (size_t i = loop_start; i-- > 0;)
        v[i] = r[i] || (l[i] && v[w.succ(i)]);
      break;
    }
    case Kind::Release:
    case Kind::Always: {
      const auto& r = vals(f.kind() == Kind::Release ? f.rhs() : f.child());
      const std::vector<char> zeros(len, 0);
      const auto& l = f.kind() == Kind::Release ? vals(f.lhs()) : zeros;
      // greatest fixpoint of v = r & (l | X v), seeded with true
      std::fill(v.begin(), v.end(), 1);
      for (int pass = 0; pass < 2; ++pass)
        for (size_t i = len; i-- > loop_start;)
          v[i] = r[i] && (l[i] || v[w.succ(i)]);
      for (size_t i = loop_start; i-- > 0;)
        v[i] = r[i] && (l[i] || v[w.succ(i)]);
      break;
    }
    }
    return memo.emplace(f.node(), std::move(v)).first->second;
  }
};

// Tarjan SCC over an explicit product graph
struct SccAnalysis {
  const std::vector<std::vector<uint32_t>>& adj;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<uint32_t> stack;
  int counter = 0, comp_count = 0;

  explicit SccAnalysis(const std::vector<std::vector<uint32_t>>& a)
      : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
        on_stack(a.size(), false) {
    for (uint32_t v = 0; v < adj.size(); ++v)
      if (index[v] < 0)
        run(v);
  }

  void run(uint32_t root) {
    // iterative Tarjan
    std::vector<std::pair<uint32_t, size_t>> call{{root, 0}};
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (ei < adj[v].size()) {
        uint32_t w = adj[v][ei++];
        if (index[w] < 0) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w])
          low[v] = std::min(low[v], index[w]);
      }
      if (descended)
        continue;
      if (low[v] == index[v]) {
        while (true) {
          uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
          if (w == v)
            break;
        }
        ++comp_count;
      }
      uint32_t child = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[child]);
    }
  }
};

} // namespace

bool eval(Formula f, const LassoWord& w) {
  assert(!w.loop.empty());
  Evaluator ev{w, w.length(), w.prefix.size(), {}};
  return ev.vals(f)[0] != 0;
}

bool ba_accepts(const Ba& b, const LassoWord& w) {
  size_t len = w.length();
  size_t n = b.size() * len;
  std::vector<std::vector<uint32_t>> adj(n);
  std::vector<bool> reach(n, false);
  std::vector<uint32_t> work;
  auto node = [&](uint32_t q, size_t pos) { return uint32_t(q * len + pos); };
  for (uint32_t i : b.initial)
    if (!reach[node(i, 0)]) {
      reach[node(i, 0)] = true;
      work.push_back(node(i, 0));
    }
  while (!work.empty()) {
    uint32_t v = work.back();
    work.pop_back();
    uint32_t q = v / uint32_t(len);
    size_t pos = v % len;
    for (const auto& t : b.delta[q])
      if (t.label.admits(w.letter(pos))) {
        uint32_t u = node(t.target, w.succ(pos));
        adj[v].push_back(u);
        if (!reach[u]) {
          reach[u] = true;
          work.push_back(u);
        }
      }
  }
  SccAnalysis scc(adj);
  // accept iff a reachable accepting node lies on a cycle: its SCC has an
  // internal edge
  std::vector<bool> nontrivial(scc.comp_count, false);
  for (uint32_t v = 0; v < n; ++v)
    if (reach[v])
      for (uint32_t u : adj[v])
        if (scc.comp[u] == scc.comp[v])
          nontrivial[scc.comp[v]] = true;
  for (uint32_t v = 0; v < n; ++v)
    if (reach[v] && b.accepting[v / len] && nontrivial[scc.comp[v]])
      return true;
  return false;
}

bool tgba_accepts(const Tgba& g, const LassoWord& w) {
  size_t len = w.length();
  size_t n = g.states.size() * len;
  std::vector<std::vector<uint32_t>> adj(n);
  std::vector<std::vector<std::pair<uint32_t, uint64_t>>> marked_adj(n);
  std::vector<bool> reach(n, false);
  std::vector<uint32_t> work;
  auto node = [&](uint32_t q, size_t pos) { return uint32_t(q * len + pos); };
  for (uint32_t i : g.initial)
    if (!reach[node(i, 0)]) {
      reach[node(i, 0)] = true;
      work.push_back(node(i, 0));
    }
  while (!work.empty()) {
    uint32_t v = work.back();
    work.pop_back();
    uint32_t q = v / uint32_t(len);
    size_t pos = v % len;
    for (const auto& t : g.delta[q])
      if (t.label.admits(w.letter(pos))) {
        uint32_t u = node(t.target, w.succ(pos));
        adj[v].push_back(u);
        marked_adj[v].emplace_back(u, t.marks);
        if (!reach[u]) {
          reach[u] = true;
          work.push_back(u);
        }
      }
  }
  SccAnalysis scc(adj);
  std::vector<uint64_t> scc_marks(scc.comp_count, 0);
  std::vector<bool> nontrivial(scc.comp_count, false);
  for (uint32_t v = 0; v < n; ++v) {
    if (!reach[v])
      continue;
    for (auto [u, marks] : marked_adj[v])
      if (scc.comp[u] == scc.comp[v]) {
        scc_marks[scc.comp[v]] |= marks;
        nontrivial[scc.comp[v]] = true;
      }
  }
  uint64_t want = g.all_marks();
  for (int c = 0; c < scc.comp_count; ++c)
    if (nontrivial[c] && (scc_marks[c] & want) == want) {
      // the SCC must be reachable; components only contain reachable nodes
      for (uint32_t v = 0; v < n; ++v)
        if (reach[v] && scc.comp[v] == c)
          return true;
    }
  return false;
}

bool product_empty(const Ba& b1, const Ba& b2) {
  // phase 1: waiting for an accepting state of b1; phase 2: of b2.
  // accepting product states: phase 2 at an accepting b2 state.
  struct Key {
    uint32_t q1, q2, phase;
    bool operator<(const Key& o) const {
      return std::tie(q1, q2, phase) < std::tie(o.q1, o.q2, o.phase);
    }
  };
  std::map<Key, uint32_t> ids;
  std::vector<Key> keys;
  std::vector<uint32_t> work;
  auto discover = [&](Key k) {
    auto it = ids.find(k);
    if (it != ids.end())
      return it->second;
    uint32_t id = uint32_t(keys.size());
    ids.emplace(k, id);
    keys.push_back(k);
    work.push_back(id);
    return id;
  };
  for (uint32_t i1 : b1.initial)
    for (uint32_t i2 : b2.initial)
      discover({i1, i2, 1});

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  while (!work.empty()) {
    uint32_t v = work.back();
    work.pop_back();
    Key k = keys[v];
    for (const auto& t1 : b1.delta[k.q1])
      for (const auto& t2 : b2.delta[k.q2]) {
        if (!conj(t1.label, t2.label).is_sat())
          continue;
        uint32_t phase = k.phase;
        if (phase == 1 && b1.accepting[k.q1])
          phase = 2;
        else if (phase == 2 && b2.accepting[k.q2])
          phase = 1;
        edges.emplace_back(v, discover({t1.target, t2.target, phase}));
      }
  }
  std::vector<std::vector<uint32_t>> adj(keys.size());
  for (auto [v, u] : edges)
    adj[v].push_back(u);
  SccAnalysis scc(adj);
  std::vector<bool> nontrivial(scc.comp_count, false);
  for (uint32_t v = 0; v < keys.size(); ++v)
    for (uint32_t u : adj[v])
      if (scc.comp[u] == scc.comp[v])
        nontrivial[scc.comp[v]] = true;
  for (uint32_t v = 0; v < keys.size(); ++v)
    if (keys[v].phase == 2 && b2.accepting[keys[v].q2] && nontrivial[scc.comp[v]])
      return false;
  return true;
}

} // namespace ltl2buchi
