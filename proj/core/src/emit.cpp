#include "ltl2buchi/emit.hpp"

#include <sstream>

namespace ltl2buchi {

namespace {

// never claims need one entry label; with several initial states an
// artificial entry state takes the union of their outgoing arms
struct NeverStates {
  const Ba& b;
  bool synthetic_init;
  uint32_t init;

  explicit NeverStates(const Ba& ba) : b(ba) {
    synthetic_init = b.initial.size() != 1;
    init = synthetic_init ? uint32_t(b.size()) : b.initial[0];
  }
};

std::string never_label(const Ba& b, uint32_t q, bool is_init) {
  std::string name = b.accepting.size() > q && b.accepting[q] ? "accept_" : "T0_";
  if (is_init)
    return name + "init";
  return name + "S" + std::to_string(q);
}

} // namespace

std::string to_never_claim(const Ba& b, const std::string& formula_comment) {
  const FormulaArena& aps = b.session->formulas;
  NeverStates ns(b);
  std::ostringstream os;
  os << "never { /* " << formula_comment << " */\n";

  auto emit_state = [&](uint32_t q, bool is_init, const std::vector<Ba::Trans>& arms,
                        bool accepting) {
    os << never_label(b, q, is_init) << ":\n";
    if (arms.empty()) {
      os << "\tfalse;\n";
      return;
    }
    // accepting sink with a top self-loop prints as skip
    if (accepting && arms.size() == 1 && arms[0].target == q && arms[0].label.is_top()) {
      os << "\tskip\n";
      return;
    }
    os << "\tif\n";
    for (const auto& t : arms) {
      bool target_init = !ns.synthetic_init && t.target == ns.init;
      os << "\t:: (" << t.label.str(aps) << ") -> goto "
         << never_label(b, t.target, target_init) << '\n';
    }
    os << "\tfi;\n";
  };

  if (ns.synthetic_init) {
    std::vector<Ba::Trans> arms;
    for (uint32_t i : b.initial)
      arms.insert(arms.end(), b.delta[i].begin(), b.delta[i].end());
    os << "T0_init:\n";
    if (arms.empty()) {
      os << "\tfalse;\n";
    } else {
      os << "\tif\n";
      for (const auto& t : arms)
        os << "\t:: (" << t.label.str(aps) << ") -> goto " << never_label(b, t.target, false)
           << '\n';
      os << "\tfi;\n";
    }
    for (uint32_t q = 0; q < b.size(); ++q)
      emit_state(q, false, b.delta[q], b.accepting[q]);
  } else {
    for (uint32_t q = 0; q < b.size(); ++q)
      emit_state(q, q == ns.init, b.delta[q], b.accepting[q]);
  }
  os << "}\n";
  return os.str();
}

namespace {

// HOA labels are boolean formulae over AP indices
std::string hoa_guard(const Label& l, const BddManager& mgr) {
  if (l.is_top())
    return "t";
  if (!l.is_sat())
    return "f";
  auto cs = l.manager()->cubes(l.id());
  std::ostringstream os;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i)
      os << " | ";
    if (cs.size() > 1 && cs[i].size() > 1)
      os << '(';
    for (size_t j = 0; j < cs[i].size(); ++j) {
      if (j)
        os << '&';
      if (!cs[i][j].second)
        os << '!';
      os << cs[i][j].first;
    }
    if (cs.size() > 1 && cs[i].size() > 1)
      os << ')';
  }
  return os.str();
}

void hoa_ap_line(std::ostringstream& os, const FormulaArena& aps) {
  os << "AP: " << aps.ap_count();
  for (uint32_t i = 0; i < aps.ap_count(); ++i)
    os << " \"" << aps.ap_name(i) << '"';
  os << '\n';
}

} // namespace

std::string to_hoa(const Ba& b, const std::string& name) {
  const FormulaArena& aps = b.session->formulas;
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "name: \"" << name << "\"\n";
  os << "States: " << b.size() << '\n';
  for (uint32_t i : b.initial)
    os << "Start: " << i << '\n';
  hoa_ap_line(os, aps);
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "properties: trans-labels explicit-labels state-acc\n";
  os << "--BODY--\n";
  for (uint32_t q = 0; q < b.size(); ++q) {
    os << "State: " << q << " \"" << b.names[q] << '"';
    if (b.accepting[q])
      os << " {0}";
    os << '\n';
    for (const auto& t : b.delta[q])
      os << '[' << hoa_guard(t.label, b.session->labels) << "] " << t.target << '\n';
  }
  os << "--END--\n";
  return os.str();
}

std::string to_hoa(const Tgba& g, const std::string& name) {
  const FormulaArena& aps = g.session->formulas;
  size_t m = g.acc_sets.size();
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "name: \"" << name << "\"\n";
  os << "States: " << g.states.size() << '\n';
  for (uint32_t i : g.initial)
    os << "Start: " << i << '\n';
  hoa_ap_line(os, aps);
  os << "acc-name: generalized-Buchi " << m << '\n';
  if (m == 0) {
    os << "Acceptance: 0 t\n";
  } else {
    os << "Acceptance: " << m << ' ';
    for (size_t j = 0; j < m; ++j) {
      if (j)
        os << " & ";
      os << "Inf(" << j << ')';
    }
    os << '\n';
  }
  os << "properties: trans-labels explicit-labels trans-acc\n";
  os << "--BODY--\n";
  for (uint32_t q = 0; q < g.states.size(); ++q) {
    os << "State: " << q << " \"" << g.state_name(q) << "\"\n";
    for (const auto& t : g.delta[q]) {
      os << '[' << hoa_guard(t.label, g.session->labels) << "] " << t.target;
      if (t.marks) {
        os << " {";
        bool first = true;
        for (size_t j = 0; j < m; ++j)
          if (t.marks & (uint64_t(1) << j)) {
            if (!first)
              os << ' ';
            first = false;
            os << j;
          }
        os << '}';
      }
      os << '\n';
    }
  }
  os << "--END--\n";
  return os.str();
}

} // namespace ltl2buchi
