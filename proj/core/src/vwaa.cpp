#include "ltl2buchi/vwaa.hpp"

#include <cassert>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ltl2buchi {

namespace {

// transition sets over formulae, used while the automaton is being built
struct FTrans {
  Label label;
  std::vector<Formula> targets; // sorted by seq, unique
};
using FTransSet = std::vector<FTrans>;

std::vector<Formula> sorted_union(const std::vector<Formula>& a,
                                  const std::vector<Formula>& b) {
  std::vector<Formula> r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

void dedup(FTransSet& ts) {
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size();) {
      if (ts[j].label == ts[i].label && ts[j].targets == ts[i].targets)
        ts.erase(ts.begin() + j);
      else
        ++j;
    }
}

FTransSet funion(FTransSet a, const FTransSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  dedup(a);
  return a;
}

FTransSet fotimes(BddManager& m, const FTransSet& j1, const FTransSet& j2) {
  FTransSet r;
  for (const FTrans& t1 : j1)
    for (const FTrans& t2 : j2) {
      Label l = conj(t1.label, t2.label);
      if (!l.is_sat())
        continue;
      r.push_back({l, sorted_union(t1.targets, t2.targets)});
    }
  dedup(r);
  return r;
}

struct Builder {
  Session& s;
  VwaaMode mode;
  std::map<Formula, FTransSet> memo;

  FTransSet one(Label l, std::vector<Formula> targets) {
    return {FTrans{l, std::move(targets)}};
  }

  bool suspendable(Formula f) const {
    return mode == VwaaMode::Improved && f.alternating();
  }

  // Delta: homomorphic over And/Or; temporal formulae either suspended
  // (one step of self-delay) or expanded through delta
  FTransSet big_delta(Formula f) {
    switch (f.kind()) {
    case Kind::And:
      return fotimes(s.labels, big_delta(f.lhs()), big_delta(f.rhs()));
    case Kind::Or:
      return funion(big_delta(f.lhs()), big_delta(f.rhs()));
    default:
      if (suspendable(f))
        return one(s.top(), {f});
      return delta(f);
    }
  }

  FTransSet delta(Formula f) {
    auto it = memo.find(f);
    if (it != memo.end())
      return it->second;
    FTransSet r;
    switch (f.kind()) {
    case Kind::True:
      r = one(s.top(), {});
      break;
    case Kind::False:
      r = {};
      break;
    case Kind::Atom:
      r = one(s.atom_label(f.atom(), true), {});
      break;
    case Kind::NotAtom:
      r = one(s.atom_label(f.atom(), false), {});
      break;
    case Kind::Next:
      if (mode == VwaaMode::Improved) {
        r = one(s.top(), {f.child()});
      } else {
        for (const auto& o : overline(f.child()))
          r.push_back({s.top(), o});
        dedup(r);
      }
      break;
    case Kind::And: // non-temporal states occur in improved mode only
      r = fotimes(s.labels, big_delta(f.lhs()), big_delta(f.rhs()));
      break;
    case Kind::Or:
      r = funion(big_delta(f.lhs()), big_delta(f.rhs()));
      break;
    case Kind::Until:
    case Kind::Eventually: {
      Formula l = f.kind() == Kind::Until ? f.lhs() : s.formulas.tt();
      Formula rr = f.kind() == Kind::Until ? f.rhs() : f.child();
      FTransSet cont = suspendable(l) ? one(s.top(), {l}) : big_delta(l);
      r = funion(big_delta(rr), fotimes(s.labels, cont, one(s.top(), {f})));
      break;
    }
    case Kind::Release:
    case Kind::Always: {
      Formula l = f.kind() == Kind::Release ? f.lhs() : s.formulas.ff();
      Formula rr = f.kind() == Kind::Release ? f.rhs() : f.child();
      FTransSet cont = suspendable(l) ? one(s.top(), {l}) : big_delta(l);
      r = fotimes(s.labels, big_delta(rr), funion(cont, one(s.top(), {f})));
      break;
    }
    case Kind::Not:
      throw std::invalid_argument("VWAA construction requires positive normal form");
    }
    memo.emplace(f, r);
    return r;
  }
};

bool is_accepting_kind(Formula f) {
  return f.kind() == Kind::Until || f.kind() == Kind::Eventually;
}

void canonical_sort(Vwaa::TransSet& ts) {
  std::sort(ts.begin(), ts.end(), [](const Vwaa::Trans& a, const Vwaa::Trans& b) {
    if (a.targets != b.targets)
      return a.targets < b.targets;
    return a.label.id() < b.label.id();
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

} // namespace

Vwaa::TransSet otimes(BddManager& labels, const Vwaa::TransSet& j1,
                      const Vwaa::TransSet& j2) {
  Vwaa::TransSet r;
  for (const auto& t1 : j1)
    for (const auto& t2 : j2) {
      Label l = conj(t1.label, t2.label);
      if (!l.is_sat())
        continue;
      r.push_back({l, set_union(t1.targets, t2.targets)});
    }
  canonical_sort(r);
  return r;
}

std::vector<std::vector<Formula>> overline(Formula f) {
  if (f.is_temporal())
    return {{f}};
  if (f.kind() == Kind::And) {
    auto ls = overline(f.lhs());
    auto rs = overline(f.rhs());
    std::vector<std::vector<Formula>> out;
    for (const auto& a : ls)
      for (const auto& b : rs)
        out.push_back(sorted_union(a, b));
    return out;
  }
  assert(f.kind() == Kind::Or);
  auto out = overline(f.lhs());
  auto rs = overline(f.rhs());
  for (auto& o : rs)
    if (std::find(out.begin(), out.end(), o) == out.end())
      out.push_back(std::move(o));
  return out;
}

uint32_t Vwaa::state_of(Formula f) const {
  for (uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == f)
      return i;
  throw std::out_of_range("formula is not a VWAA state");
}

bool Vwaa::has_state(Formula f) const {
  for (const auto& g : states)
    if (g == f)
      return true;
  return false;
}

Vwaa build_vwaa(Session& s, Formula f, VwaaMode mode) {
  if (!f.in_pnf())
    throw std::invalid_argument("VWAA construction requires positive normal form");

  Builder b{s, mode};
  std::vector<std::vector<Formula>> init =
      mode == VwaaMode::Improved ? std::vector<std::vector<Formula>>{{f}} : overline(f);

  Vwaa a;
  a.session = &s;
  a.mode = mode;

  std::map<Formula, uint32_t> ids;
  std::queue<Formula> work;
  auto discover = [&](Formula g) {
    auto it = ids.find(g);
    if (it != ids.end())
      return it->second;
    uint32_t id = uint32_t(a.states.size());
    ids.emplace(g, id);
    a.states.push_back(g);
    work.push(g);
    return id;
  };

  for (const auto& o : init) {
    IdSet set;
    for (Formula g : o)
      set.insert(discover(g));
    a.initial.push_back(set);
  }

  std::vector<FTransSet> raw;
  while (!work.empty()) {
    Formula q = work.front();
    work.pop();
    FTransSet ts = b.delta(q);
    for (const FTrans& t : ts)
      for (Formula g : t.targets)
        discover(g);
    raw.push_back(std::move(ts));
  }

  a.delta.resize(a.states.size());
  for (uint32_t q = 0; q < a.states.size(); ++q) {
    for (const FTrans& t : raw[q]) {
      IdSet targets;
      for (Formula g : t.targets)
        targets.insert(ids.at(g));
      a.delta[q].push_back({t.label, std::move(targets)});
    }
    canonical_sort(a.delta[q]);
  }

  for (uint32_t q = 0; q < a.states.size(); ++q)
    if (is_accepting_kind(a.states[q]))
      a.accepting.insert(q);
  return a;
}

namespace {

Vwaa prune_unreachable(const Vwaa& a) {
  std::vector<bool> seen(a.states.size(), false);
  std::queue<uint32_t> work;
  for (const IdSet& o : a.initial)
    for (uint32_t q : o)
      if (!seen[q]) {
        seen[q] = true;
        work.push(q);
      }
  while (!work.empty()) {
    uint32_t q = work.front();
    work.pop();
    for (const auto& t : a.delta[q])
      for (uint32_t r : t.targets)
        if (!seen[r]) {
          seen[r] = true;
          work.push(r);
        }
  }
  std::vector<uint32_t> remap(a.states.size(), 0);
  Vwaa out;
  out.session = a.session;
  out.mode = a.mode;
  for (uint32_t q = 0; q < a.states.size(); ++q)
    if (seen[q]) {
      remap[q] = uint32_t(out.states.size());
      out.states.push_back(a.states[q]);
    }
  out.delta.resize(out.states.size());
  for (uint32_t q = 0; q < a.states.size(); ++q) {
    if (!seen[q])
      continue;
    for (const auto& t : a.delta[q]) {
      IdSet targets;
      for (uint32_t r : t.targets)
        targets.insert(remap[r]);
      out.delta[remap[q]].push_back({t.label, std::move(targets)});
    }
    canonical_sort(out.delta[remap[q]]);
  }
  for (const IdSet& o : a.initial) {
    IdSet m;
    for (uint32_t q : o)
      m.insert(remap[q]);
    out.initial.push_back(m);
  }
  for (uint32_t q : a.accepting)
    if (seen[q])
      out.accepting.insert(remap[q]);
  return out;
}

} // namespace

Vwaa simplify_vwaa(const Vwaa& a, VwaaSimplify level) {
  if (level == VwaaSimplify::Off)
    return prune_unreachable(a);

  Vwaa out = a;
  for (auto& ts : out.delta) {
    bool changed = true;
    while (changed) {
      changed = false;
      canonical_sort(ts);
      if (level == VwaaSimplify::General) {
        // merge transitions with identical target sets
        for (size_t i = 0; i + 1 < ts.size();) {
          if (ts[i].targets == ts[i + 1].targets) {
            Label l = disj(ts[i].label, ts[i + 1].label);
            if (l != ts[i].label)
              changed = true;
            ts[i].label = l;
            ts.erase(ts.begin() + i + 1);
            changed = true;
          } else {
            ++i;
          }
        }
        // strictly smaller target sets make larger ones more specific
        for (size_t i = 0; i < ts.size(); ++i)
          for (size_t j = 0; j < ts.size();) {
            if (i != j && ts[i].targets.is_proper_subset_of(ts[j].targets)) {
              Label l = conj(ts[j].label, neg(ts[i].label));
              if (l != ts[j].label) {
                changed = true;
                if (!l.is_sat()) {
                  ts.erase(ts.begin() + j);
                  if (i > j)
                    --i;
                  continue;
                }
                ts[j].label = l;
              }
            }
            ++j;
          }
      } else { // Basic: remove transitions implied by another
        // exact duplicates were removed by canonical_sort, so domination
        // cannot be mutual here
        for (size_t i = 0; i < ts.size(); ++i)
          for (size_t j = 0; j < ts.size();) {
            bool redundant = i != j && ts[j].label.implies(ts[i].label) &&
                             ts[i].targets.is_subset_of(ts[j].targets);
            if (redundant) {
              ts.erase(ts.begin() + j);
              if (i > j)
                --i;
              changed = true;
            } else {
              ++j;
            }
          }
      }
    }
    canonical_sort(ts);
  }
  return prune_unreachable(out);
}

std::string Vwaa::dot() const {
  std::ostringstream os;
  os << "digraph vwaa {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (uint32_t q = 0; q < states.size(); ++q) {
    os << "  s" << q << " [label=\"" << q << ": " << states[q].str() << '"';
    if (accepting.contains(q))
      os << ", shape=doublecircle";
    os << "];\n";
  }
  int anon = 0;
  for (size_t i = 0; i < initial.size(); ++i) {
    os << "  i" << i << " [style=invis];\n";
    for (uint32_t q : initial[i])
      os << "  i" << i << " -> s" << q << ";\n";
  }
  const FormulaArena& aps = session->formulas;
  for (uint32_t q = 0; q < states.size(); ++q)
    for (const auto& t : delta[q]) {
      std::string guard = t.label.str(aps);
      if (t.targets.empty()) {
        os << "  t" << anon << " [style=invis];\n";
        os << "  s" << q << " -> t" << anon++ << " [label=\"" << guard << "\"];\n";
      } else if (t.targets.size() == 1) {
        os << "  s" << q << " -> s" << t.targets[0] << " [label=\"" << guard << "\"];\n";
      } else {
        // universal branch through a fan-out point
        os << "  t" << anon << " [shape=point];\n";
        os << "  s" << q << " -> t" << anon << " [label=\"" << guard
           << "\", arrowhead=none];\n";
        for (uint32_t r : t.targets)
          os << "  t" << anon << " -> s" << r << ";\n";
        ++anon;
      }
    }
  os << "}\n";
  return os.str();
}

} // namespace ltl2buchi
