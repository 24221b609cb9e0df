// Abstract syntax of the first-order language: terms, core formulas and the
// sugared surface formulas produced by the parser.

#ifndef PEANO_SYNTAX_HPP
#define PEANO_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace peano {

using VarIndex = unsigned;

// Predicate letter A{1,2} is equality.
inline constexpr unsigned kEqualityPredicate = 1;
// Function letters f{1,1}, f{1,2}, f{2,2} are successor, sum and product.
inline constexpr unsigned kSuccessorLetter = 1;
inline constexpr unsigned kSumLetter = 1;
inline constexpr unsigned kProductLetter = 2;
// a1 denotes zero.
inline constexpr unsigned kZeroConstant = 1;

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : std::runtime_error("at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when a substitution would bind a variable of the substituted term.
class CaptureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, Func };

  static Term var(unsigned index);
  static Term constant(unsigned index);
  // The arity of the letter is the number of arguments; f{k,n} and f{k,m}
  // are distinct letters when n != m.
  static Term func(unsigned letter, std::vector<Term> args);

  static Term zero() { return constant(kZeroConstant); }
  static Term succ(Term t) { return func(kSuccessorLetter, {std::move(t)}); }
  static Term sum(Term a, Term b) { return func(kSumLetter, {std::move(a), std::move(b)}); }
  static Term product(Term a, Term b) { return func(kProductLetter, {std::move(a), std::move(b)}); }

  Kind kind() const noexcept;
  // Variable index, constant index or function letter index.
  unsigned index() const noexcept;
  std::size_t arity() const noexcept;
  std::span<const Term> args() const noexcept;

  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_var(VarIndex v) const noexcept { return is_var() && index() == v; }
  bool is_func(unsigned letter, std::size_t arity) const noexcept {
    return kind() == Kind::Func && index() == letter && this->arity() == arity;
  }

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static void check_index(unsigned index, const char* what) {
    if (index < 1) throw std::invalid_argument(std::string(what) + " index must be >= 1");
  }

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  unsigned index;
  std::vector<Term> args;
};

inline Term Term::var(unsigned index) {
  check_index(index, "variable");
  return Term(std::make_shared<const Node>(Node{Kind::Var, index, {}}));
}

inline Term Term::constant(unsigned index) {
  check_index(index, "constant");
  return Term(std::make_shared<const Node>(Node{Kind::Const, index, {}}));
}

inline Term Term::func(unsigned letter, std::vector<Term> args) {
  check_index(letter, "function letter");
  if (args.empty()) throw std::invalid_argument("function letter needs arity >= 1");
  return Term(std::make_shared<const Node>(Node{Kind::Func, letter, std::move(args)}));
}

inline Term::Kind Term::kind() const noexcept { return node_->kind; }
inline unsigned Term::index() const noexcept { return node_->index; }
inline std::size_t Term::arity() const noexcept { return node_->args.size(); }
inline std::span<const Term> Term::args() const noexcept { return node_->args; }

inline bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.index() != b.index() || a.arity() != b.arity()) return false;
  auto xs = a.args(), ys = b.args();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!(xs[i] == ys[i])) return false;
  return true;
}

// Core formula: only negation, conditional and universal quantification.
// Immutable; copies share structure.
class Wff {
 public:
  enum class Kind : std::uint8_t { Atom, Not, Implies, ForAll };

  static Wff atom(unsigned predicate, std::vector<Term> terms) {
    if (predicate < 1) throw std::invalid_argument("predicate index must be >= 1");
    if (terms.empty()) throw std::invalid_argument("predicate letter needs arity >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->index = predicate;
    n->terms = std::move(terms);
    return Wff(std::move(n));
  }
  static Wff equals(Term lhs, Term rhs) { return atom(kEqualityPredicate, {std::move(lhs), std::move(rhs)}); }
  static Wff negation(Wff a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->children = {std::move(a)};
    return Wff(std::move(n));
  }
  static Wff implies(Wff a, Wff b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Implies;
    n->children = {std::move(a), std::move(b)};
    return Wff(std::move(n));
  }
  static Wff forall(VarIndex v, Wff body) {
    if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::ForAll;
    n->index = v;
    n->children = {std::move(body)};
    return Wff(std::move(n));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return kind() == k; }

  // Atom accessors.
  unsigned predicate() const noexcept { return node_->index; }
  std::span<const Term> terms() const noexcept { return node_->terms; }
  bool is_equality() const noexcept {
    return kind() == Kind::Atom && predicate() == kEqualityPredicate && node_->terms.size() == 2;
  }

  // Body of Not / ForAll.
  const Wff& operand() const noexcept { return node_->children.front(); }
  // Antecedent and consequent of Implies.
  const Wff& lhs() const noexcept { return node_->children[0]; }
  const Wff& rhs() const noexcept { return node_->children[1]; }
  // Bound variable of ForAll.
  VarIndex variable() const noexcept { return node_->index; }

  friend bool operator==(const Wff& a, const Wff& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.node_->index != b.node_->index) return false;
    if (a.kind() == Kind::Atom) {
      auto xs = a.terms(), ys = b.terms();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == ys[i])) return false;
      return true;
    }
    for (std::size_t i = 0; i < a.node_->children.size(); ++i)
      if (!(a.node_->children[i] == b.node_->children[i])) return false;
    return true;
  }

 private:
  struct Node {
    Kind kind{};
    unsigned index = 0;  // predicate or bound variable
    std::vector<Term> terms;
    std::vector<Wff> children;
  };
  explicit Wff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Abbreviations, emitted directly in core form.
inline Wff conj(Wff a, Wff b) { return Wff::negation(Wff::implies(std::move(a), Wff::negation(std::move(b)))); }
inline Wff disj(Wff a, Wff b) { return Wff::implies(Wff::negation(std::move(a)), std::move(b)); }
inline Wff exists(VarIndex v, Wff body) { return Wff::negation(Wff::forall(v, Wff::negation(std::move(body)))); }
inline Wff iff(Wff a, Wff b) { return conj(Wff::implies(a, b), Wff::implies(b, a)); }

// Parser output. Sugar nodes survive until lower().
struct SurfaceWff {
  enum class Kind : std::uint8_t { Atom, Not, Implies, ForAll, Exists, And, Or, Iff };

  Kind kind{};
  unsigned predicate = 0;
  VarIndex variable = 0;
  std::vector<Term> terms;
  std::vector<SurfaceWff> children;

  static SurfaceWff atom(unsigned predicate, std::vector<Term> terms) {
    SurfaceWff s;
    s.kind = Kind::Atom;
    s.predicate = predicate;
    s.terms = std::move(terms);
    return s;
  }
  static SurfaceWff unary(Kind k, SurfaceWff a) {
    SurfaceWff s;
    s.kind = k;
    s.children.push_back(std::move(a));
    return s;
  }
  static SurfaceWff binary(Kind k, SurfaceWff a, SurfaceWff b) {
    SurfaceWff s;
    s.kind = k;
    s.children.push_back(std::move(a));
    s.children.push_back(std::move(b));
    return s;
  }
  static SurfaceWff quantified(Kind k, VarIndex v, SurfaceWff body) {
    SurfaceWff s = unary(k, std::move(body));
    s.variable = v;
    return s;
  }

  friend bool operator==(const SurfaceWff& a, const SurfaceWff& b) {
    return a.kind == b.kind && a.predicate == b.predicate && a.variable == b.variable && a.terms == b.terms &&
           a.children == b.children;
  }
};

// Expands every sugar node into its definition, innermost first.
inline Wff lower(const SurfaceWff& s) {
  using K = SurfaceWff::Kind;
  switch (s.kind) {
    case K::Atom: return Wff::atom(s.predicate, s.terms);
    case K::Not: return Wff::negation(lower(s.children[0]));
    case K::Implies: return Wff::implies(lower(s.children[0]), lower(s.children[1]));
    case K::ForAll: return Wff::forall(s.variable, lower(s.children[0]));
    case K::Exists: return exists(s.variable, lower(s.children[0]));
    case K::And: return conj(lower(s.children[0]), lower(s.children[1]));
    case K::Or: return disj(lower(s.children[0]), lower(s.children[1]));
    case K::Iff: return iff(lower(s.children[0]), lower(s.children[1]));
  }
  throw std::logic_error("unreachable");
}

// Embeds a core formula as a sugar-free surface formula.
inline SurfaceWff raise(const Wff& w) {
  using K = SurfaceWff::Kind;
  switch (w.kind()) {
    case Wff::Kind::Atom: return SurfaceWff::atom(w.predicate(), {w.terms().begin(), w.terms().end()});
    case Wff::Kind::Not: return SurfaceWff::unary(K::Not, raise(w.operand()));
    case Wff::Kind::Implies: return SurfaceWff::binary(K::Implies, raise(w.lhs()), raise(w.rhs()));
    case Wff::Kind::ForAll: return SurfaceWff::quantified(K::ForAll, w.variable(), raise(w.operand()));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Variables

inline void collect_vars(const Term& t, std::set<VarIndex>& out) {
  if (t.is_var()) {
    out.insert(t.index());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

inline std::set<VarIndex> vars(const Term& t) {
  std::set<VarIndex> out;
  collect_vars(t, out);
  return out;
}

inline bool occurs(VarIndex x, const Term& t) {
  if (t.is_var()) return t.index() == x;
  for (const auto& a : t.args())
    if (occurs(x, a)) return true;
  return false;
}

inline bool is_closed(const Term& t) {
  if (t.is_var()) return false;
  for (const auto& a : t.args())
    if (!is_closed(a)) return false;
  return true;
}

namespace detail {
inline void collect_free(const Wff& w, std::set<VarIndex>& bound, std::set<VarIndex>& out) {
  switch (w.kind()) {
    case Wff::Kind::Atom:
      for (const auto& t : w.terms()) {
        std::set<VarIndex> vs = vars(t);
        for (VarIndex v : vs)
          if (!bound.contains(v)) out.insert(v);
      }
      return;
    case Wff::Kind::Not: collect_free(w.operand(), bound, out); return;
    case Wff::Kind::Implies:
      collect_free(w.lhs(), bound, out);
      collect_free(w.rhs(), bound, out);
      return;
    case Wff::Kind::ForAll: {
      bool fresh = bound.insert(w.variable()).second;
      collect_free(w.operand(), bound, out);
      if (fresh) bound.erase(w.variable());
      return;
    }
  }
}
}  // namespace detail

inline std::set<VarIndex> free_vars(const Wff& w) {
  std::set<VarIndex> bound, out;
  detail::collect_free(w, bound, out);
  return out;
}

inline bool occurs_free(VarIndex x, const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Atom:
      for (const auto& t : w.terms())
        if (occurs(x, t)) return true;
      return false;
    case Wff::Kind::Not: return occurs_free(x, w.operand());
    case Wff::Kind::Implies: return occurs_free(x, w.lhs()) || occurs_free(x, w.rhs());
    case Wff::Kind::ForAll: return w.variable() != x && occurs_free(x, w.operand());
  }
  return false;
}

inline bool is_closed(const Wff& w) { return free_vars(w).empty(); }

// Every index, free or bound, mentioned anywhere in w.
inline void collect_all_vars(const Wff& w, std::set<VarIndex>& out) {
  switch (w.kind()) {
    case Wff::Kind::Atom:
      for (const auto& t : w.terms()) collect_vars(t, out);
      return;
    case Wff::Kind::Not: collect_all_vars(w.operand(), out); return;
    case Wff::Kind::Implies:
      collect_all_vars(w.lhs(), out);
      collect_all_vars(w.rhs(), out);
      return;
    case Wff::Kind::ForAll:
      out.insert(w.variable());
      collect_all_vars(w.operand(), out);
      return;
  }
}

// ---------------------------------------------------------------------------
// Substitution

// True iff no free occurrence of x in w lies in the scope of a quantifier
// binding a variable of t.
inline bool is_free_for(const Term& t, VarIndex x, const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Atom: return true;
    case Wff::Kind::Not: return is_free_for(t, x, w.operand());
    case Wff::Kind::Implies: return is_free_for(t, x, w.lhs()) && is_free_for(t, x, w.rhs());
    case Wff::Kind::ForAll:
      if (w.variable() == x) return true;  // x has no free occurrence below
      if (occurs(w.variable(), t) && occurs_free(x, w.operand())) return false;
      return is_free_for(t, x, w.operand());
  }
  return true;
}

inline Term substitute(const Term& s, VarIndex x, const Term& t) {
  switch (s.kind()) {
    case Term::Kind::Var: return s.index() == x ? t : s;
    case Term::Kind::Const: return s;
    case Term::Kind::Func: {
      std::vector<Term> args;
      args.reserve(s.arity());
      for (const auto& a : s.args()) args.push_back(substitute(a, x, t));
      return Term::func(s.index(), std::move(args));
    }
  }
  return s;
}

namespace detail {
inline Wff substitute_unchecked(const Wff& w, VarIndex x, const Term& t) {
  if (!occurs_free(x, w)) return w;
  switch (w.kind()) {
    case Wff::Kind::Atom: {
      std::vector<Term> ts;
      for (const auto& s : w.terms()) ts.push_back(substitute(s, x, t));
      return Wff::atom(w.predicate(), std::move(ts));
    }
    case Wff::Kind::Not: return Wff::negation(substitute_unchecked(w.operand(), x, t));
    case Wff::Kind::Implies:
      return Wff::implies(substitute_unchecked(w.lhs(), x, t), substitute_unchecked(w.rhs(), x, t));
    case Wff::Kind::ForAll: return Wff::forall(w.variable(), substitute_unchecked(w.operand(), x, t));
  }
  return w;
}
}  // namespace detail

// Replaces every free occurrence of x by t. Never renames bound variables:
// a capturing substitution is an error.
inline Wff substitute(const Wff& w, VarIndex x, const Term& t) {
  if (!is_free_for(t, x, w)) throw CaptureError("term is not free for x" + std::to_string(x));
  return detail::substitute_unchecked(w, x, t);
}

// Outcome of recovering t from A and A' = A[x := t].
struct MatchResult {
  enum class Kind : std::uint8_t { Witness, AnyTerm, NoMatch };
  Kind kind = Kind::NoMatch;
  std::optional<Term> witness;

  static MatchResult no_match() { return {}; }
  static MatchResult any_term() { return {Kind::AnyTerm, std::nullopt}; }
  static MatchResult with(Term t) { return {Kind::Witness, std::move(t)}; }

  bool matched() const noexcept { return kind != Kind::NoMatch; }
};

namespace detail {
class SubstitutionMatcher {
 public:
  explicit SubstitutionMatcher(VarIndex x) : x_(x) {}

  bool wff(const Wff& a, const Wff& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Wff::Kind::Atom: {
        if (a.predicate() != b.predicate()) return false;
        auto xs = a.terms(), ys = b.terms();
        if (xs.size() != ys.size()) return false;
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (!term(xs[i], ys[i])) return false;
        return true;
      }
      case Wff::Kind::Not: return wff(a.operand(), b.operand());
      case Wff::Kind::Implies: return wff(a.lhs(), b.lhs()) && wff(a.rhs(), b.rhs());
      case Wff::Kind::ForAll:
        if (a.variable() != b.variable()) return false;
        if (a.variable() == x_) return a.operand() == b.operand();
        return wff(a.operand(), b.operand());
    }
    return false;
  }

  const std::optional<Term>& witness() const { return witness_; }

 private:
  bool term(const Term& a, const Term& b) {
    if (a.is_var(x_)) {
      if (!witness_) {
        witness_ = b;
        return true;
      }
      return *witness_ == b;
    }
    if (a.kind() != b.kind() || a.index() != b.index() || a.arity() != b.arity()) return false;
    auto xs = a.args(), ys = b.args();
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!term(xs[i], ys[i])) return false;
    return true;
  }

  VarIndex x_;
  std::optional<Term> witness_;
};
}  // namespace detail

// Decides whether a_prime = substitute(a, x, t) for some t, recovering t.
inline MatchResult match_substitution_result(const Wff& a, VarIndex x, const Wff& a_prime) {
  detail::SubstitutionMatcher m(x);
  if (!m.wff(a, a_prime)) return MatchResult::no_match();
  if (!m.witness()) return MatchResult::any_term();
  if (!is_free_for(*m.witness(), x, a)) return MatchResult::no_match();
  return MatchResult::with(*m.witness());
}

}  // namespace peano

#endif  // PEANO_SYNTAX_HPP
