#include "ltl2buchi/tgba.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ltl2buchi {

namespace {

void collect_subformulae(Formula f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.lhs())
    collect_subformulae(f.lhs(), out);
  if (f.rhs())
    collect_subformulae(f.rhs(), out);
}

} // namespace

SuspensionInfo compute_suspension(const Vwaa& a, bool temporal_restriction) {
  SuspensionInfo info;
  size_t n = a.states.size();
  info.is_progress.assign(n, false);
  info.is_alternating.assign(n, false);
  info.is_temporal.assign(n, false);

  std::map<Formula, uint32_t> ids;
  for (uint32_t q = 0; q < n; ++q)
    ids.emplace(a.states[q], q);

  for (uint32_t q = 0; q < n; ++q) {
    Formula f = a.states[q];
    info.is_alternating[q] = f.alternating();
    info.is_temporal[q] = f.is_temporal();
    if (f.kind() == Kind::Release || f.kind() == Kind::Always) {
      info.m_states.insert(q);
      Formula rhs = f.kind() == Kind::Release ? f.rhs() : f.child();
      std::vector<Formula> subs;
      collect_subformulae(rhs, subs);
      for (Formula g : subs) {
        auto it = ids.find(g);
        if (it != ids.end())
          info.m_states.insert(it->second);
      }
    }
  }
  for (uint32_t q = 0; q < n; ++q)
    info.is_progress[q] = !info.m_states.contains(q) &&
                          (!temporal_restriction || info.is_temporal[q]);
  return info;
}

uint32_t Tgba::state_of(const IdSet& vwaa_ids) const {
  for (uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == vwaa_ids)
      return i;
  throw std::out_of_range("no TGBA state for that VWAA state set");
}

std::string Tgba::state_name(uint32_t q) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (uint32_t v : states[q]) {
    if (!first)
      os << ',';
    first = false;
    os << v;
  }
  os << '}';
  return os.str();
}

namespace {

struct ProductTerm {
  Label label;
  IdSet targets;
  uint64_t looped;       // acc-indexed: source factor q in F stepped back into q
  bool any_suspended;
  bool all_stationary;
};

// acceptance mark assignment for one assembled product term; the pure-wait
// case (a suspended assembly where every factor steps onto exactly itself)
// carries no marks
uint64_t term_marks(const ProductTerm& t, const IdSet& source,
                    const std::vector<uint32_t>& acc_sets) {
  if (t.any_suspended && t.all_stationary)
    return 0;
  uint64_t marks = 0;
  for (size_t j = 0; j < acc_sets.size(); ++j) {
    uint32_t f = acc_sets[j];
    if (!t.targets.contains(f))
      marks |= uint64_t(1) << j;
    else if (source.contains(f) && !(t.looped & (uint64_t(1) << j)))
      marks |= uint64_t(1) << j;
  }
  return marks;
}

void canonical_sort(std::vector<Tgba::Trans>& ts, const std::vector<IdSet>& states) {
  std::sort(ts.begin(), ts.end(), [&](const Tgba::Trans& a, const Tgba::Trans& b) {
    if (a.target != b.target)
      return states[a.target] < states[b.target];
    if (a.label.id() != b.label.id())
      return a.label.id() < b.label.id();
    return a.marks < b.marks;
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// drop transitions dominated under the preceq relation: a transition is
// dominated by one with a weaker label, a smaller target set and at least
// the same marks
template <typename T>
void minimize_preceq(std::vector<T>& ts, const std::vector<IdSet>& targets_of) {
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = 0; j < ts.size();) {
      bool dominated = i != j && ts[j].label.implies(ts[i].label) &&
                       targets_of[ts[i].target].is_subset_of(targets_of[ts[j].target]) &&
                       (ts[j].marks & ts[i].marks) == ts[j].marks;
      if (dominated) {
        ts.erase(ts.begin() + j);
        if (i > j)
          --i;
      } else {
        ++j;
      }
    }
}

} // namespace

std::optional<std::vector<Tgba::Trans>> gf_fastpath(const Vwaa& a, const IdSet& state,
                                                    const std::vector<uint32_t>& acc_sets,
                                                    uint32_t self) {
  Session& s = *a.session;
  Label alpha0 = s.top();
  std::vector<Formula> gf_operands; // the a_i, by first occurrence
  std::vector<Formula> conjuncts;
  for (uint32_t q : state)
    conjuncts.push_back(a.states[q]);
  while (!conjuncts.empty()) {
    Formula f = conjuncts.back();
    conjuncts.pop_back();
    if (f.kind() == Kind::And) {
      conjuncts.push_back(f.rhs());
      conjuncts.push_back(f.lhs());
      continue;
    }
    if (f.kind() != Kind::Always)
      return std::nullopt;
    Formula body = f.child();
    if (body.is_state()) {
      alpha0 = conj(alpha0, s.state_label(body));
      continue;
    }
    if (body.kind() == Kind::Eventually && body.child().is_state()) {
      if (std::find(gf_operands.begin(), gf_operands.end(), body) == gf_operands.end())
        gf_operands.push_back(body);
      continue;
    }
    return std::nullopt;
  }

  // each GF a_i needs its F a_i acceptance id; bail out if one is missing
  std::vector<size_t> mark_of;
  uint64_t gf_marks = 0;
  for (Formula fa : gf_operands) { // the F a_i nodes
    size_t idx = acc_sets.size();
    for (size_t j = 0; j < acc_sets.size(); ++j)
      if (a.states[acc_sets[j]] == fa) {
        idx = j;
        break;
      }
    if (idx == acc_sets.size())
      return std::nullopt;
    mark_of.push_back(idx);
    gf_marks |= uint64_t(1) << idx;
  }

  // marks for acceptance ids whose state is not part of this component
  uint64_t free_marks = 0;
  for (size_t j = 0; j < acc_sets.size(); ++j)
    if (!state.contains(acc_sets[j]) && !(gf_marks & (uint64_t(1) << j)))
      free_marks |= uint64_t(1) << j;

  size_t n = gf_operands.size();
  std::vector<Tgba::Trans> out;
  for (uint64_t sub = 0; sub < (uint64_t(1) << n); ++sub) {
    Label l = alpha0;
    uint64_t marks = free_marks;
    for (size_t i = 0; i < n; ++i) {
      Label ai = s.state_label(gf_operands[i].child());
      if (sub & (uint64_t(1) << i)) {
        l = conj(l, ai);
        marks |= uint64_t(1) << mark_of[i];
      } else {
        l = conj(l, neg(ai));
      }
    }
    if (l.is_sat())
      out.push_back({l, self, marks});
  }
  return out;
}

Tgba build_tgba(const Vwaa& a, const TgbaOptions& opt) {
  Session& s = *a.session;
  Tgba g;
  g.session = &s;
  g.vwaa_states = a.states;
  for (uint32_t f : a.accepting)
    g.acc_sets.push_back(f);
  if (g.acc_sets.size() > 64)
    throw std::length_error("more than 64 acceptance sets");

  SuspensionInfo susp = compute_suspension(a, opt.temporal_progress_restriction);

  std::map<IdSet, uint32_t> ids;
  std::queue<uint32_t> work;
  auto discover = [&](const IdSet& o) {
    auto it = ids.find(o);
    if (it != ids.end())
      return it->second;
    uint32_t id = uint32_t(g.states.size());
    ids.emplace(o, id);
    g.states.push_back(o);
    g.delta.emplace_back();
    work.push(id);
    return id;
  };

  for (const IdSet& o : a.initial)
    g.initial.push_back(discover(o));

  auto acc_index = [&](uint32_t f) -> int {
    for (size_t j = 0; j < g.acc_sets.size(); ++j)
      if (g.acc_sets[j] == f)
        return int(j);
    return -1;
  };

  while (!work.empty()) {
    uint32_t id = work.front();
    work.pop();
    IdSet O = g.states[id]; // copy: g.states may grow below

    if (opt.gf_fastpath)
      if (auto fast = gf_fastpath(a, O, g.acc_sets, id)) {
        minimize_preceq(*fast, g.states);
        canonical_sort(*fast, g.states);
        g.delta[id] = std::move(*fast);
        continue;
      }

    bool has_progress = false, has_progress_nonalt = false;
    for (uint32_t q : O) {
      if (susp.is_progress[q]) {
        has_progress = true;
        if (!susp.is_alternating[q])
          has_progress_nonalt = true;
      }
    }

    // fold the product over the factors' (possibly suspended) steps
    std::vector<ProductTerm> terms{{s.top(), IdSet{}, 0, false, true}};
    for (uint32_t q : O) {
      bool suspended =
          opt.suspend && ((has_progress_nonalt && susp.is_alternating[q]) ||
                          (has_progress && susp.is_alternating[q] && !susp.is_progress[q]));
      std::vector<ProductTerm> next;
      auto extend = [&](const ProductTerm& base, Label l, const IdSet& to,
                        bool factor_suspended) {
        Label nl = conj(base.label, l);
        if (!nl.is_sat())
          return;
        ProductTerm t = base;
        t.label = nl;
        t.targets = set_union(t.targets, to);
        t.any_suspended |= factor_suspended;
        t.all_stationary &= to.size() == 1 && to[0] == q;
        int j = acc_index(q);
        if (j >= 0 && to.contains(q))
          t.looped |= uint64_t(1) << j;
        next.push_back(std::move(t));
      };
      if (suspended) {
        IdSet self{q};
        for (const ProductTerm& base : terms)
          extend(base, s.top(), self, true);
      } else {
        for (const ProductTerm& base : terms)
          for (const auto& step : a.delta[q])
            extend(base, step.label, step.targets, false);
      }
      terms = std::move(next);
    }

    // group by (label, target set), union marks over assemblies
    std::map<std::pair<uint32_t, IdSet>, uint64_t> grouped;
    for (const ProductTerm& t : terms)
      grouped[{t.label.id(), t.targets}] |= term_marks(t, O, g.acc_sets);

    struct Raw {
      Label label;
      IdSet targets;
      uint64_t marks;
      uint32_t target; // filled after discovery
    };
    std::vector<Raw> raw;
    for (const auto& [key, marks] : grouped)
      raw.push_back({Label(&s.labels, key.first), key.second, marks, 0});

    // preceq minimization over the raw transitions
    for (size_t i = 0; i < raw.size(); ++i)
      for (size_t j = 0; j < raw.size();) {
        bool dominated = i != j && raw[j].label.implies(raw[i].label) &&
                         raw[i].targets.is_subset_of(raw[j].targets) &&
                         (raw[j].marks & raw[i].marks) == raw[j].marks;
        if (dominated) {
          raw.erase(raw.begin() + j);
          if (i > j)
            --i;
        } else {
          ++j;
        }
      }

    // discover() may grow g.delta, so build locally first
    std::vector<Tgba::Trans> out;
    for (const Raw& r : raw)
      out.push_back({r.label, discover(r.targets), r.marks});
    canonical_sort(out, g.states);
    g.delta[id] = std::move(out);
  }
  return g;
}

Tgba simplify_tgba(const Tgba& g) {
  Tgba cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    // merge states with identical outgoing transition sets
    std::map<std::vector<std::tuple<uint32_t, uint32_t, uint64_t>>, uint32_t> sig;
    std::vector<uint32_t> remap(cur.states.size());
    for (uint32_t q = 0; q < cur.states.size(); ++q) {
      std::vector<std::tuple<uint32_t, uint32_t, uint64_t>> key;
      for (const auto& t : cur.delta[q])
        key.emplace_back(t.label.id(), t.target, t.marks);
      std::sort(key.begin(), key.end());
      auto [it, fresh] = sig.emplace(std::move(key), q);
      remap[q] = it->second;
      if (!fresh)
        changed = true;
    }
    if (changed) {
      for (auto& ts : cur.delta)
        for (auto& t : ts)
          t.target = remap[t.target];
      for (auto& i : cur.initial)
        i = remap[i];
    }

    // prune unreachable, renumber breadth-first
    std::vector<uint32_t> order;
    std::vector<int64_t> newid(cur.states.size(), -1);
    std::queue<uint32_t> work;
    for (uint32_t i : cur.initial)
      if (newid[i] < 0) {
        newid[i] = int64_t(order.size());
        order.push_back(i);
        work.push(i);
      }
    while (!work.empty()) {
      uint32_t q = work.front();
      work.pop();
      for (const auto& t : cur.delta[q])
        if (newid[t.target] < 0) {
          newid[t.target] = int64_t(order.size());
          order.push_back(t.target);
          work.push(t.target);
        }
    }
    if (order.size() != cur.states.size())
      changed = true;

    Tgba next;
    next.session = cur.session;
    next.acc_sets = cur.acc_sets;
    next.vwaa_states = cur.vwaa_states;
    for (uint32_t old : order)
      next.states.push_back(cur.states[old]);
    for (uint32_t old : order) {
      auto ts = cur.delta[old];
      for (auto& t : ts)
        t.target = uint32_t(newid[t.target]);
      canonical_sort(ts, next.states);
      next.delta.push_back(std::move(ts));
    }
    for (uint32_t i : cur.initial) {
      uint32_t ni = uint32_t(newid[i]);
      if (std::find(next.initial.begin(), next.initial.end(), ni) == next.initial.end())
        next.initial.push_back(ni);
    }
    cur = std::move(next);
  }
  return cur;
}

std::string Tgba::dot() const {
  std::ostringstream os;
  const FormulaArena& aps = session->formulas;
  os << "digraph tgba {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (uint32_t q = 0; q < states.size(); ++q)
    os << "  s" << q << " [label=\"" << state_name(q) << "\"];\n";
  for (size_t i = 0; i < initial.size(); ++i) {
    os << "  i" << i << " [style=invis];\n  i" << i << " -> s" << initial[i] << ";\n";
  }
  for (uint32_t q = 0; q < states.size(); ++q)
    for (const auto& t : delta[q]) {
      os << "  s" << q << " -> s" << t.target << " [label=\"" << t.label.str(aps)
         << ":{";
      bool first = true;
      for (size_t j = 0; j < acc_sets.size(); ++j)
        if (t.marks & (uint64_t(1) << j)) {
          if (!first)
            os << ',';
          first = false;
          os << "T" << acc_sets[j];
        }
      os << "}\"];\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace ltl2buchi
