#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltl2buchi {

enum class Kind : uint8_t {
  True,
  False,
  Atom,
  NotAtom,
  Not, // transient: only before positive normal form
  And,
  Or,
  Next,
  Until,
  Release,
  Eventually,
  Always,
};

constexpr bool is_leaf(Kind k) {
  return k == Kind::True || k == Kind::False || k == Kind::Atom || k == Kind::NotAtom;
}
constexpr bool is_unary(Kind k) {
  return k == Kind::Not || k == Kind::Next || k == Kind::Eventually || k == Kind::Always;
}
constexpr bool is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Until || k == Kind::Release;
}

struct FormulaNode {
  Kind kind;
  bool pnf;        // no Not node in the subtree
  bool temporal;   // topmost operator is neither And nor Or
  bool state;      // no temporal operator in the subtree
  bool pure_event; // mu grammar
  bool pure_univ;  // nu grammar
  bool alternating; // xi grammar
  uint32_t atom = 0;
  const FormulaNode* lhs = nullptr;
  const FormulaNode* rhs = nullptr;
  const std::string* atom_name = nullptr;
  uint64_t ap_mask = 0;
  uint32_t size = 1; // syntax-tree node count
  uint32_t seq = 0;  // interning order; stable, deterministic per session
};

/// Lightweight handle to an interned formula.  Structural equality is
/// pointer equality: identical subtrees share one node.
class Formula {
public:
  Formula() = default;

  Kind kind() const { return n_->kind; }
  Formula lhs() const { return Formula(n_->lhs); }
  Formula rhs() const { return Formula(n_->rhs); }
  Formula child() const { return Formula(n_->lhs); }
  uint32_t atom() const { return n_->atom; }
  const std::string& atom_name() const { return *n_->atom_name; }

  bool in_pnf() const { return n_->pnf; }
  bool is_temporal() const { return n_->temporal; }
  bool is_state() const { return n_->state; }
  bool pure_eventuality() const { return n_->pure_event; }
  bool pure_universality() const { return n_->pure_univ; }
  bool alternating() const { return n_->alternating; }
  uint64_t ap_mask() const { return n_->ap_mask; }
  uint32_t size() const { return n_->size; }

  bool operator==(const Formula&) const = default;
  bool operator!=(const Formula&) const = default;
  explicit operator bool() const { return n_ != nullptr; }
  const FormulaNode* node() const { return n_; }
  uint32_t seq() const { return n_->seq; } // stable creation order

  // deterministic total order (creation order), for canonical containers
  bool operator<(const Formula& o) const { return n_->seq < o.n_->seq; }

  std::string str() const;   // unicode rendering
  std::string ascii() const; // round-trips through parse()

private:
  friend class FormulaArena;
  friend struct FormulaHash;
  explicit Formula(const FormulaNode* n) : n_(n) {}
  const FormulaNode* n_ = nullptr;
};

struct FormulaHash {
  size_t operator()(const Formula& f) const { return std::hash<const void*>()(f.node()); }
};

class FormulaArena {
public:
  FormulaArena();

  Formula tt() const { return tt_; }
  Formula ff() const { return ff_; }
  Formula atom(std::string_view name);
  Formula not_atom(std::string_view name);
  Formula mk(Kind k, Formula a, Formula b = Formula());

  Formula mk_not(Formula a) { return mk(Kind::Not, a); }
  Formula mk_and(Formula a, Formula b) { return mk(Kind::And, a, b); }
  Formula mk_or(Formula a, Formula b) { return mk(Kind::Or, a, b); }
  Formula mk_next(Formula a) { return mk(Kind::Next, a); }
  Formula mk_until(Formula a, Formula b) { return mk(Kind::Until, a, b); }
  Formula mk_release(Formula a, Formula b) { return mk(Kind::Release, a, b); }
  Formula mk_eventually(Formula a) { return mk(Kind::Eventually, a); }
  Formula mk_always(Formula a) { return mk(Kind::Always, a); }

  uint32_t ap_count() const { return uint32_t(ap_names_.size()); }
  const std::string& ap_name(uint32_t i) const { return ap_names_[i]; }
  std::optional<uint32_t> ap_index(std::string_view name) const;

private:
  uint32_t ap_id(std::string_view name);
  Formula intern(const FormulaNode& proto);

  std::deque<FormulaNode> nodes_;
  std::unordered_map<uint64_t, std::vector<const FormulaNode*>> intern_;
  std::deque<std::string> ap_names_;
  std::unordered_map<std::string_view, uint32_t> ap_ids_;
  Formula tt_, ff_;
};

struct ClassFlags {
  bool pure_eventuality = false;
  bool pure_universality = false;
  bool alternating = false;
  bool is_temporal = false;
  bool is_state = false;
};

/// Formula-class analysis; requires positive normal form.
ClassFlags classify(Formula f);

/// Temporal-operator-rooted subformulae (X/U/R/F/G nodes), postorder:
/// subformulae come before their superformulae, duplicates collapsed.
std::vector<Formula> temporal_subformulae(Formula f);

/// Negation pushing; keeps F and G as first-class nodes.
Formula to_pnf(FormulaArena& arena, Formula f);

class ParseError : public std::runtime_error {
public:
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

/// ASCII input grammar: true false ident ! && || U V R X <> [] ( ) -> <->
/// Precedence: unary > U/R > && > || > ->/<-> ; U and R right-associative.
Formula parse(FormulaArena& arena, std::string_view text);

} // namespace ltl2buchi
