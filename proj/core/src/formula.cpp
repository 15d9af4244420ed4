#include "ltl2buchi/formula.hpp"

#include <cassert>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace ltl2buchi {

namespace {

// grammar classification for a fresh node, children already classified
void compute_flags(FormulaNode& n) {
  const FormulaNode* l = n.lhs;
  const FormulaNode* r = n.rhs;
  n.ap_mask = (l ? l->ap_mask : 0) | (r ? r->ap_mask : 0);
  if (n.kind == Kind::Atom || n.kind == Kind::NotAtom)
    n.ap_mask = uint64_t(1) << n.atom;
  n.size = 1 + (l ? l->size : 0) + (r ? r->size : 0);
  n.pnf = n.kind != Kind::Not && (!l || l->pnf) && (!r || r->pnf);
  n.temporal = n.kind != Kind::And && n.kind != Kind::Or;
  switch (n.kind) {
  case Kind::True:
  case Kind::False:
  case Kind::Atom:
  case Kind::NotAtom:
    n.state = true;
    break;
  case Kind::Not:
  case Kind::And:
  case Kind::Or:
    n.state = (!l || l->state) && (!r || r->state);
    break;
  default:
    n.state = false;
  }
  n.pure_event = n.pure_univ = n.alternating = false;
  switch (n.kind) {
  case Kind::Eventually:
    n.pure_event = true;
    n.pure_univ = l->pure_univ;
    n.alternating = l->pure_univ || l->alternating;
    break;
  case Kind::Always:
    n.pure_event = l->pure_event;
    n.pure_univ = true;
    n.alternating = l->pure_event || l->alternating;
    break;
  case Kind::And:
  case Kind::Or:
    n.pure_event = l->pure_event && r->pure_event;
    n.pure_univ = l->pure_univ && r->pure_univ;
    n.alternating = l->alternating && r->alternating;
    break;
  case Kind::Next:
    n.pure_event = l->pure_event;
    n.pure_univ = l->pure_univ;
    n.alternating = l->alternating;
    break;
  case Kind::Until:
    n.pure_event = r->pure_event;
    n.pure_univ = l->pure_univ && r->pure_univ;
    n.alternating = r->alternating;
    break;
  case Kind::Release:
    n.pure_event = l->pure_event && r->pure_event;
    n.pure_univ = r->pure_univ;
    n.alternating = r->alternating;
    break;
  default:
    break;
  }
}

} // namespace

FormulaArena::FormulaArena() {
  tt_ = mk(Kind::True, Formula());
  ff_ = mk(Kind::False, Formula());
}

uint32_t FormulaArena::ap_id(std::string_view name) {
  auto it = ap_ids_.find(name);
  if (it != ap_ids_.end())
    return it->second;
  if (ap_names_.size() >= 64)
    throw std::length_error("too many atomic propositions (limit 64)");
  ap_names_.emplace_back(name);
  uint32_t id = uint32_t(ap_names_.size() - 1);
  ap_ids_.emplace(ap_names_.back(), id);
  return id;
}

std::optional<uint32_t> FormulaArena::ap_index(std::string_view name) const {
  auto it = ap_ids_.find(name);
  if (it == ap_ids_.end())
    return std::nullopt;
  return it->second;
}

Formula FormulaArena::intern(const FormulaNode& proto) {
  uint64_t key = (uint64_t(uint8_t(proto.kind)) << 56) ^
                 (std::hash<const void*>()(proto.lhs)) ^
                 (std::hash<const void*>()(proto.rhs) >> 1) ^ (uint64_t(proto.atom) << 17);
  auto& bucket = intern_[key];
  for (const FormulaNode* n : bucket)
    if (n->kind == proto.kind && n->lhs == proto.lhs && n->rhs == proto.rhs &&
        n->atom == proto.atom)
      return Formula(n);
  nodes_.push_back(proto);
  FormulaNode* stored = &nodes_.back();
  stored->seq = uint32_t(nodes_.size() - 1);
  compute_flags(*stored);
  bucket.push_back(stored);
  return Formula(stored);
}

Formula FormulaArena::atom(std::string_view name) {
  FormulaNode proto{};
  proto.kind = Kind::Atom;
  proto.atom = ap_id(name);
  proto.atom_name = &ap_names_[proto.atom];
  return intern(proto);
}

Formula FormulaArena::not_atom(std::string_view name) {
  FormulaNode proto{};
  proto.kind = Kind::NotAtom;
  proto.atom = ap_id(name);
  proto.atom_name = &ap_names_[proto.atom];
  return intern(proto);
}

Formula FormulaArena::mk(Kind k, Formula a, Formula b) {
  assert(is_leaf(k) ? (!a && !b) : true);
  assert(is_unary(k) ? (a && !b) : true);
  assert(is_binary(k) ? (a && b) : true);
  if (k == Kind::Atom || k == Kind::NotAtom)
    throw std::logic_error("atoms must be created through atom()/not_atom()");
  FormulaNode proto{};
  proto.kind = k;
  proto.lhs = a.node();
  proto.rhs = b.node();
  return intern(proto);
}

ClassFlags classify(Formula f) {
  assert(f.in_pnf());
  return ClassFlags{f.pure_eventuality(), f.pure_universality(), f.alternating(),
                    f.is_temporal(), f.is_state()};
}

std::vector<Formula> temporal_subformulae(Formula f) {
  std::vector<Formula> out;
  std::unordered_set<const FormulaNode*> seen;
  std::function<void(Formula)> walk = [&](Formula g) {
    if (!g || seen.count(g.node()))
      return;
    seen.insert(g.node());
    if (g.lhs())
      walk(g.lhs());
    if (g.rhs())
      walk(g.rhs());
    switch (g.kind()) {
    case Kind::Next:
    case Kind::Until:
    case Kind::Release:
    case Kind::Eventually:
    case Kind::Always:
      out.push_back(g);
      break;
    default:
      break;
    }
  };
  walk(f);
  return out;
}

namespace {

Formula pnf_pos(FormulaArena& ar, Formula f);

Formula pnf_neg(FormulaArena& ar, Formula f) {
  switch (f.kind()) {
  case Kind::True:
    return ar.ff();
  case Kind::False:
    return ar.tt();
  case Kind::Atom:
    return ar.not_atom(f.atom_name());
  case Kind::NotAtom:
    return ar.atom(f.atom_name());
  case Kind::Not:
    return pnf_pos(ar, f.child());
  case Kind::And:
    return ar.mk_or(pnf_neg(ar, f.lhs()), pnf_neg(ar, f.rhs()));
  case Kind::Or:
    return ar.mk_and(pnf_neg(ar, f.lhs()), pnf_neg(ar, f.rhs()));
  case Kind::Next:
    return ar.mk_next(pnf_neg(ar, f.child()));
  case Kind::Until:
    return ar.mk_release(pnf_neg(ar, f.lhs()), pnf_neg(ar, f.rhs()));
  case Kind::Release:
    return ar.mk_until(pnf_neg(ar, f.lhs()), pnf_neg(ar, f.rhs()));
  case Kind::Eventually:
    return ar.mk_always(pnf_neg(ar, f.child()));
  case Kind::Always:
    return ar.mk_eventually(pnf_neg(ar, f.child()));
  }
  throw std::logic_error("unreachable");
}

Formula pnf_pos(FormulaArena& ar, Formula f) {
  if (f.in_pnf())
    return f;
  switch (f.kind()) {
  case Kind::Not:
    return pnf_neg(ar, f.child());
  case Kind::And:
  case Kind::Or:
  case Kind::Until:
  case Kind::Release:
    return ar.mk(f.kind(), pnf_pos(ar, f.lhs()), pnf_pos(ar, f.rhs()));
  case Kind::Next:
  case Kind::Eventually:
  case Kind::Always:
    return ar.mk(f.kind(), pnf_pos(ar, f.child()));
  default:
    return f;
  }
}

} // namespace

Formula to_pnf(FormulaArena& arena, Formula f) { return pnf_pos(arena, f); }

// ---------------------------------------------------------------- printing

namespace {

int precedence(Kind k) {
  switch (k) {
  case Kind::Or:
    return 1;
  case Kind::And:
    return 2;
  case Kind::Until:
  case Kind::Release:
    return 3;
  default:
    return 4; // unary and leaves
  }
}

void print(std::ostream& os, Formula f, bool unicode, int parent_prec) {
  int prec = precedence(f.kind());
  bool paren = prec < parent_prec;
  if (paren)
    os << '(';
  switch (f.kind()) {
  case Kind::True:
    os << (unicode ? "tt" : "true");
    break;
  case Kind::False:
    os << (unicode ? "ff" : "false");
    break;
  case Kind::Atom:
    os << f.atom_name();
    break;
  case Kind::NotAtom:
    os << (unicode ? "¬" : "!") << f.atom_name();
    break;
  case Kind::Not:
    os << (unicode ? "¬" : "!");
    print(os, f.child(), unicode, prec);
    break;
  case Kind::Next:
    os << "X ";
    print(os, f.child(), unicode, prec);
    break;
  case Kind::Eventually:
    os << (unicode ? "F " : "<> ");
    print(os, f.child(), unicode, prec);
    break;
  case Kind::Always:
    os << (unicode ? "G " : "[] ");
    print(os, f.child(), unicode, prec);
    break;
  case Kind::And:
    print(os, f.lhs(), unicode, prec);
    os << (unicode ? " ∧ " : " && ");
    print(os, f.rhs(), unicode, prec);
    break;
  case Kind::Or:
    print(os, f.lhs(), unicode, prec);
    os << (unicode ? " ∨ " : " || ");
    print(os, f.rhs(), unicode, prec);
    break;
  case Kind::Until:
    print(os, f.lhs(), unicode, prec + 1);
    os << " U ";
    print(os, f.rhs(), unicode, prec); // right-associative
    break;
  case Kind::Release:
    print(os, f.lhs(), unicode, prec + 1);
    os << (unicode ? " R " : " V ");
    print(os, f.rhs(), unicode, prec);
    break;
  }
  if (paren)
    os << ')';
}

} // namespace

std::string Formula::str() const {
  std::ostringstream os;
  print(os, *this, true, 0);
  return os.str();
}

std::string Formula::ascii() const {
  std::ostringstream os;
  print(os, *this, false, 0);
  return os.str();
}

// ----------------------------------------------------------------- parser

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  enum Tok {
    End,
    Ident,
    KwTrue,
    KwFalse,
    Bang,
    AndAnd,
    OrOr,
    OpU,
    OpR,
    OpX,
    OpF, // "<>"
    OpG, // "[]"
    LPar,
    RPar,
    Arrow,
    DArrow,
  };

  Tok tok = End;
  std::string_view ident;
  size_t tok_pos = 0;

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = End;
      return;
    }
    char c = text[pos];
    auto two = [&](char a, char b) {
      return c == a && pos + 1 < text.size() && text[pos + 1] == b;
    };
    if (two('&', '&')) { tok = AndAnd; pos += 2; return; }
    if (two('|', '|')) { tok = OrOr; pos += 2; return; }
    if (two('<', '>')) { tok = OpF; pos += 2; return; }
    if (two('[', ']')) { tok = OpG; pos += 2; return; }
    if (two('-', '>')) { tok = Arrow; pos += 2; return; }
    if (c == '<' && pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
      tok = DArrow;
      pos += 3;
      return;
    }
    switch (c) {
    case '!': tok = Bang; ++pos; return;
    case '&': tok = AndAnd; ++pos; return; // single & accepted as well
    case '|': tok = OrOr; ++pos; return;
    case '(': tok = LPar; ++pos; return;
    case ')': tok = RPar; ++pos; return;
    default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string_view word = text.substr(start, pos - start);
      if (word == "true") { tok = KwTrue; return; }
      if (word == "false") { tok = KwFalse; return; }
      if (word == "U") { tok = OpU; return; }
      if (word == "V" || word == "R") { tok = OpR; return; }
      if (word == "X") { tok = OpX; return; }
      tok = Ident;
      ident = word;
      return;
    }
    throw ParseError(pos, "unexpected character '" + std::string(1, c) + "'");
  }
};

struct Parser {
  FormulaArena& ar;
  Lexer lx;

  Formula parse_equiv() {
    Formula a = parse_or();
    if (lx.tok == Lexer::Arrow) {
      lx.next();
      Formula b = parse_equiv();
      return ar.mk_or(ar.mk_not(a), b);
    }
    if (lx.tok == Lexer::DArrow) {
      lx.next();
      Formula b = parse_equiv();
      return ar.mk_or(ar.mk_and(a, b), ar.mk_and(ar.mk_not(a), ar.mk_not(b)));
    }
    return a;
  }

  Formula parse_or() {
    Formula a = parse_and();
    while (lx.tok == Lexer::OrOr) {
      lx.next();
      a = ar.mk_or(a, parse_and());
    }
    return a;
  }

  Formula parse_and() {
    Formula a = parse_until();
    while (lx.tok == Lexer::AndAnd) {
      lx.next();
      a = ar.mk_and(a, parse_until());
    }
    return a;
  }

  Formula parse_until() {
    Formula a = parse_unary();
    if (lx.tok == Lexer::OpU) {
      lx.next();
      return ar.mk_until(a, parse_until());
    }
    if (lx.tok == Lexer::OpR) {
      lx.next();
      return ar.mk_release(a, parse_until());
    }
    return a;
  }

  Formula parse_unary() {
    switch (lx.tok) {
    case Lexer::Bang:
      lx.next();
      return ar.mk_not(parse_unary());
    case Lexer::OpX:
      lx.next();
      return ar.mk_next(parse_unary());
    case Lexer::OpF:
      lx.next();
      return ar.mk_eventually(parse_unary());
    case Lexer::OpG:
      lx.next();
      return ar.mk_always(parse_unary());
    default:
      return parse_primary();
    }
  }

  Formula parse_primary() {
    switch (lx.tok) {
    case Lexer::KwTrue:
      lx.next();
      return ar.tt();
    case Lexer::KwFalse:
      lx.next();
      return ar.ff();
    case Lexer::Ident: {
      Formula f = ar.atom(lx.ident);
      lx.next();
      return f;
    }
    case Lexer::LPar: {
      lx.next();
      Formula f = parse_equiv();
      if (lx.tok != Lexer::RPar)
        throw ParseError(lx.tok_pos, "expected ')'");
      lx.next();
      return f;
    }
    case Lexer::End:
      throw ParseError(lx.tok_pos, "unexpected end of input");
    default:
      throw ParseError(lx.tok_pos, "expected a formula");
    }
  }
};

} // namespace

Formula parse(FormulaArena& arena, std::string_view text) {
  Parser p{arena, Lexer{text}};
  p.lx.next();
  if (p.lx.tok == Lexer::End)
    throw ParseError(0, "empty input");
  Formula f = p.parse_equiv();
  if (p.lx.tok != Lexer::End)
    throw ParseError(p.lx.tok_pos, "trailing input");
  return f;
}

} // namespace ltl2buchi
