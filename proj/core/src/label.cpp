#include "ltl2buchi/label.hpp"

#include <sstream>
#include <stdexcept>

namespace ltl2buchi {

std::vector<uint64_t> Label::letters(uint32_t ap_count) const {
  if (ap_count > 16)
    throw std::length_error("letter enumeration limited to 16 propositions");
  std::vector<uint64_t> out;
  for (uint64_t sigma = 0; sigma < (uint64_t(1) << ap_count); ++sigma)
    if (mgr_->eval(id_, sigma))
      out.push_back(sigma);
  return out;
}

std::string Label::str(const FormulaArena& aps) const {
  if (id_ == BddManager::kTrue)
    return "1";
  if (id_ == BddManager::kFalse)
    return "0";
  auto cs = mgr_->cubes(id_);
  std::ostringstream os;
  bool multi = cs.size() > 1;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i)
      os << " || ";
    if (multi && cs[i].size() > 1)
      os << '(';
    for (size_t j = 0; j < cs[i].size(); ++j) {
      if (j)
        os << " && ";
      if (!cs[i][j].second)
        os << '!';
      os << aps.ap_name(cs[i][j].first);
    }
    if (multi && cs[i].size() > 1)
      os << ')';
  }
  return os.str();
}

Label Session::state_label(Formula f) {
  switch (f.kind()) {
  case Kind::True:
    return top();
  case Kind::False:
    return bottom();
  case Kind::Atom:
    return atom_label(f.atom(), true);
  case Kind::NotAtom:
    return atom_label(f.atom(), false);
  case Kind::And:
    return conj(state_label(f.lhs()), state_label(f.rhs()));
  case Kind::Or:
    return disj(state_label(f.lhs()), state_label(f.rhs()));
  case Kind::Not:
    return neg(state_label(f.child()));
  default:
    throw std::logic_error("state_label on a temporal formula");
  }
}

} // namespace ltl2buchi
