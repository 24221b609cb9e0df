// Hilbert-style proof kernel: axiom schemes K1-K6 and the induction scheme
// N7, theories as chains of extensions, proof checking and justification
// discovery for bare formula sequences.

#ifndef PEANO_KERNEL_HPP
#define PEANO_KERNEL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "peano/syntax.hpp"
#include "peano/text.hpp"

namespace peano {

enum class SchemeId : std::uint8_t { K1, K2, K3, K4, K5, K6, N7 };

inline constexpr std::array kAllSchemes{SchemeId::K1, SchemeId::K2, SchemeId::K3, SchemeId::K4,
                                        SchemeId::K5, SchemeId::K6, SchemeId::N7};

inline std::string_view to_string(SchemeId s) {
  constexpr std::array<std::string_view, 7> names{"K1", "K2", "K3", "K4", "K5", "K6", "N7"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<SchemeId> scheme_from_string(std::string_view s) {
  for (SchemeId id : kAllSchemes)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theory carries every scheme and proper axiom of its ancestors; the
// parent link only records lineage.
class Theory {
 public:
  using AxiomTable = std::vector<std::pair<std::string, Wff>>;

  const std::string& name() const noexcept { return name_; }
  const std::shared_ptr<const Theory>& parent() const noexcept { return parent_; }
  const std::set<SchemeId>& schemes() const noexcept { return schemes_; }
  // In declaration order, inherited axioms first.
  const AxiomTable& proper_axioms() const noexcept { return axioms_; }
  // Only N7 is affected: accept any variable as the induction variable, not just x1.
  bool relaxed_induction() const noexcept { return relaxed_induction_; }

  bool has_scheme(SchemeId s) const { return schemes_.contains(s); }

  const Wff* axiom(std::string_view name) const {
    for (const auto& [n, w] : axioms_)
      if (n == name) return &w;
    return nullptr;
  }

  // Axioms added by this theory itself rather than inherited.
  AxiomTable own_axioms() const {
    std::size_t inherited = parent_ ? parent_->axioms_.size() : 0;
    return {axioms_.begin() + static_cast<std::ptrdiff_t>(inherited), axioms_.end()};
  }

  bool extends(const Theory& other) const {
    for (const Theory* t = this; t; t = t->parent_.get())
      if (t == &other) return true;
    return false;
  }

 private:
  friend std::shared_ptr<const Theory> build_theory_K();
  friend std::shared_ptr<const Theory> build_theory_N(bool);
  friend std::shared_ptr<const Theory> extend_theory(const std::shared_ptr<const Theory>&, std::string,
                                                    const AxiomTable&);

  std::string name_;
  std::shared_ptr<const Theory> parent_;
  std::set<SchemeId> schemes_;
  AxiomTable axioms_;
  bool relaxed_induction_ = false;
};

using TheoryPtr = std::shared_ptr<const Theory>;

// The pure calculus: K1-K6, no proper axioms.
inline TheoryPtr build_theory_K() {
  auto t = std::make_shared<Theory>();
  t->name_ = "K";
  t->schemes_ = {SchemeId::K1, SchemeId::K2, SchemeId::K3, SchemeId::K4, SchemeId::K5, SchemeId::K6};
  return t;
}

inline TheoryPtr extend_theory(const TheoryPtr& base, std::string name, const Theory::AxiomTable& extra) {
  if (!base) throw TheoryError("extension of a null theory");
  auto t = std::make_shared<Theory>(*base);
  t->name_ = std::move(name);
  t->parent_ = base;
  for (const auto& [n, w] : extra) {
    if (t->axiom(n)) throw TheoryError("duplicate axiom name '" + n + "'");
    if (!is_closed(w)) throw TheoryError("axiom '" + n + "' is not closed");
    t->axioms_.emplace_back(n, w);
  }
  return t;
}

// First-order arithmetic, with the proper axioms exactly as listed for it.
inline const std::array<std::pair<std::string_view, std::string_view>, 6>& arithmetic_axiom_sources() {
  static const std::array<std::pair<std::string_view, std::string_view>, 6> sources{{
      {"N1", "(all x1 ~(S(x1) = 0))"},
      {"N2", "(all x1 (all x2 ((S(x1) = S(x2)) -> (x1 = x2))))"},
      {"N3", "(all x1 ((x1 + 0) = x1))"},
      {"N4", "(all x1 (all x2 ((x1 + S(x2)) = S((x1 + x2)))))"},
      {"N5", "(all x1 ((x1 * 0) = 0))"},
      {"N6", "(all x1 (all x2 ((x1 * S(x2)) = ((x1 * x2) + x1))))"},
  }};
  return sources;
}

inline TheoryPtr build_theory_N(bool relaxed_induction = false) {
  Theory::AxiomTable axioms;
  for (auto [name, text] : arithmetic_axiom_sources()) axioms.emplace_back(std::string(name), parse_core(text));
  auto k = build_theory_K();
  auto t = std::make_shared<Theory>(*extend_theory(k, "N", axioms));
  t->schemes_.insert(SchemeId::N7);
  t->relaxed_induction_ = relaxed_induction;
  return t;
}

// Arithmetic plus equality: reflexivity and substitutivity for every symbol
// of the arithmetic language, stated as closed axioms.
inline TheoryPtr build_theory_N_eq() {
  static const std::array<std::pair<std::string_view, std::string_view>, 6> sources{{
      {"E1", "(all x1 (x1 = x1))"},
      {"E2", "(all x1 (all x2 (all x3 ((x1 = x2) -> ((x1 = x3) -> (x2 = x3))))))"},
      {"E3", "(all x1 (all x2 ((x1 = x2) -> (S(x1) = S(x2)))))"},
      {"E4", "(all x1 (all x2 (all x3 ((x1 = x2) -> (((x1 + x3) = (x2 + x3)) & ((x3 + x1) = (x3 + x2)))))))"},
      {"E5", "(all x1 (all x2 (all x3 ((x1 = x2) -> (((x1 * x3) = (x2 * x3)) & ((x3 * x1) = (x3 * x2)))))))"},
      {"E6", "(all x1 (all x2 ((x1 = x2) -> (x2 = x1))))"},
  }};
  Theory::AxiomTable axioms;
  for (auto [name, text] : sources) axioms.emplace_back(std::string(name), parse_core(text));
  return extend_theory(build_theory_N(), "N-eq", axioms);
}

// Resolves the builtin names K, N and N-eq.
inline TheoryPtr builtin_theory(std::string_view name) {
  if (name == "K") return build_theory_K();
  if (name == "N") return build_theory_N();
  if (name == "N-eq") return build_theory_N_eq();
  return nullptr;
}

// ---------------------------------------------------------------------------
// Scheme recognition

struct SchemeMatch {
  SchemeId scheme;
  // Metavariable bindings, e.g. {"A", ...}, {"B", ...}.
  std::vector<std::pair<std::string, Wff>> parts;
  std::optional<Term> witness;        // K5: the instantiated term
  std::optional<VarIndex> variable;   // K4, K5, K6, N7: the quantified variable
};

namespace detail {

inline bool is_imp(const Wff& w) { return w.is(Wff::Kind::Implies); }

inline std::optional<SchemeMatch> match_k1(const Wff& w) {
  // A -> (B -> A)
  if (!is_imp(w) || !is_imp(w.rhs()) || !(w.lhs() == w.rhs().rhs())) return std::nullopt;
  return SchemeMatch{SchemeId::K1, {{"A", w.lhs()}, {"B", w.rhs().lhs()}}, {}, {}};
}

inline std::optional<SchemeMatch> match_k2(const Wff& w) {
  // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
  if (!is_imp(w) || !is_imp(w.lhs()) || !is_imp(w.lhs().rhs()) || !is_imp(w.rhs())) return std::nullopt;
  const Wff& a = w.lhs().lhs();
  const Wff& b = w.lhs().rhs().lhs();
  const Wff& c = w.lhs().rhs().rhs();
  const Wff& ab = w.rhs().lhs();
  const Wff& ac = w.rhs().rhs();
  if (!is_imp(ab) || !is_imp(ac)) return std::nullopt;
  if (!(ab.lhs() == a) || !(ab.rhs() == b) || !(ac.lhs() == a) || !(ac.rhs() == c)) return std::nullopt;
  return SchemeMatch{SchemeId::K2, {{"A", a}, {"B", b}, {"C", c}}, {}, {}};
}

inline std::optional<SchemeMatch> match_k3(const Wff& w) {
  // (~A -> ~B) -> (B -> A)
  if (!is_imp(w) || !is_imp(w.lhs()) || !is_imp(w.rhs())) return std::nullopt;
  const Wff& na = w.lhs().lhs();
  const Wff& nb = w.lhs().rhs();
  if (!na.is(Wff::Kind::Not) || !nb.is(Wff::Kind::Not)) return std::nullopt;
  if (!(w.rhs().lhs() == nb.operand()) || !(w.rhs().rhs() == na.operand())) return std::nullopt;
  return SchemeMatch{SchemeId::K3, {{"A", na.operand()}, {"B", nb.operand()}}, {}, {}};
}

inline std::optional<SchemeMatch> match_k4(const Wff& w) {
  // (all x A) -> A, x not free in A
  if (!is_imp(w) || !w.lhs().is(Wff::Kind::ForAll)) return std::nullopt;
  const Wff& body = w.lhs().operand();
  VarIndex x = w.lhs().variable();
  if (!(body == w.rhs()) || occurs_free(x, body)) return std::nullopt;
  return SchemeMatch{SchemeId::K4, {{"A", body}}, {}, x};
}

inline std::optional<SchemeMatch> match_k5(const Wff& w) {
  // (all x A(x)) -> A(t), t free for x in A
  if (!is_imp(w) || !w.lhs().is(Wff::Kind::ForAll)) return std::nullopt;
  const Wff& body = w.lhs().operand();
  VarIndex x = w.lhs().variable();
  MatchResult m = match_substitution_result(body, x, w.rhs());
  if (!m.matched()) return std::nullopt;
  return SchemeMatch{SchemeId::K5, {{"A", body}}, m.witness, x};
}

inline std::optional<SchemeMatch> match_k6(const Wff& w) {
  // (all x (A -> B)) -> (A -> all x B), x not free in A
  if (!is_imp(w) || !w.lhs().is(Wff::Kind::ForAll) || !is_imp(w.rhs())) return std::nullopt;
  VarIndex x = w.lhs().variable();
  const Wff& inner = w.lhs().operand();
  if (!is_imp(inner)) return std::nullopt;
  const Wff& a = inner.lhs();
  const Wff& b = inner.rhs();
  const Wff& gen = w.rhs().rhs();
  if (!(w.rhs().lhs() == a) || !gen.is(Wff::Kind::ForAll) || gen.variable() != x || !(gen.operand() == b))
    return std::nullopt;
  if (occurs_free(x, a)) return std::nullopt;
  return SchemeMatch{SchemeId::K6, {{"A", a}, {"B", b}}, {}, x};
}

inline std::optional<SchemeMatch> match_n7(const Wff& w, bool relaxed) {
  // A(0) -> ((all x (A(x) -> A(S(x)))) -> all x A(x)), x free in A
  if (!is_imp(w) || !is_imp(w.rhs())) return std::nullopt;
  const Wff& base = w.lhs();
  const Wff& step = w.rhs().lhs();
  const Wff& goal = w.rhs().rhs();
  if (!goal.is(Wff::Kind::ForAll) || !step.is(Wff::Kind::ForAll)) return std::nullopt;
  VarIndex x = goal.variable();
  if (step.variable() != x || (!relaxed && x != 1)) return std::nullopt;
  const Wff& a = goal.operand();
  if (!occurs_free(x, a)) return std::nullopt;
  const Wff& step_body = step.operand();
  if (!is_imp(step_body) || !(step_body.lhs() == a)) return std::nullopt;
  MatchResult at_zero = match_substitution_result(a, x, base);
  if (at_zero.kind != MatchResult::Kind::Witness || !(*at_zero.witness == Term::zero())) return std::nullopt;
  MatchResult at_succ = match_substitution_result(a, x, step_body.rhs());
  if (at_succ.kind != MatchResult::Kind::Witness || !(*at_succ.witness == Term::succ(Term::var(x))))
    return std::nullopt;
  return SchemeMatch{SchemeId::N7, {{"A", a}}, {}, x};
}

}  // namespace detail

// Tests w against one scheme, side conditions included. Ignores whether the
// theory enables the scheme, except for the N7 variable policy.
inline std::optional<SchemeMatch> match_scheme(SchemeId s, const Wff& w, bool relaxed_induction = false) {
  switch (s) {
    case SchemeId::K1: return detail::match_k1(w);
    case SchemeId::K2: return detail::match_k2(w);
    case SchemeId::K3: return detail::match_k3(w);
    case SchemeId::K4: return detail::match_k4(w);
    case SchemeId::K5: return detail::match_k5(w);
    case SchemeId::K6: return detail::match_k6(w);
    case SchemeId::N7: return detail::match_n7(w, relaxed_induction);
  }
  return std::nullopt;
}

// First scheme enabled in the theory that w instantiates, in order K1..K6, N7.
inline std::optional<SchemeMatch> recognize_scheme(const Theory& theory, const Wff& w) {
  for (SchemeId s : kAllSchemes) {
    if (!theory.has_scheme(s)) continue;
    if (auto m = match_scheme(s, w, theory.relaxed_induction())) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Proofs

struct ByScheme {
  SchemeId scheme;
  friend bool operator==(const ByScheme&, const ByScheme&) = default;
};
struct ByAxiom {
  std::string name;
  friend bool operator==(const ByAxiom&, const ByAxiom&) = default;
};
// Line `major` must read (line `minor`) -> (this line). 1-based.
struct ByModusPonens {
  std::size_t minor;
  std::size_t major;
  friend bool operator==(const ByModusPonens&, const ByModusPonens&) = default;
};
struct ByGeneralization {
  std::size_t premise;
  VarIndex variable;
  friend bool operator==(const ByGeneralization&, const ByGeneralization&) = default;
};
struct Unjustified {
  friend bool operator==(const Unjustified&, const Unjustified&) = default;
};

using Justification = std::variant<ByScheme, ByAxiom, ByModusPonens, ByGeneralization, Unjustified>;

inline std::string to_string(const Justification& j) {
  struct {
    std::string operator()(const ByScheme& s) const { return std::string(to_string(s.scheme)); }
    std::string operator()(const ByAxiom& a) const { return "AX " + a.name; }
    std::string operator()(const ByModusPonens& m) const {
      return "MP " + std::to_string(m.minor) + ' ' + std::to_string(m.major);
    }
    std::string operator()(const ByGeneralization& g) const {
      return "GEN " + std::to_string(g.premise) + " x" + std::to_string(g.variable);
    }
    std::string operator()(const Unjustified&) const { return "?"; }
  } visitor;
  return std::visit(visitor, j);
}

struct ProofLine {
  Wff wff;
  Justification justification;
};

class Proof {
 public:
  Proof(TheoryPtr theory, std::vector<ProofLine> lines) : theory_(std::move(theory)), lines_(std::move(lines)) {
    if (!theory_) throw std::invalid_argument("proof without a theory");
    if (lines_.empty()) throw std::invalid_argument("a proof has at least one line");
  }

  const TheoryPtr& theory() const noexcept { return theory_; }
  const std::vector<ProofLine>& lines() const noexcept { return lines_; }
  const Wff& conclusion() const noexcept { return lines_.back().wff; }

  // Same lines, checked under another theory.
  Proof under(TheoryPtr theory) const { return Proof(std::move(theory), lines_); }

 private:
  TheoryPtr theory_;
  std::vector<ProofLine> lines_;
};

struct LineVerdict {
  std::size_t line;  // 1-based
  bool ok;
  std::string reason;
};

struct Verdict {
  bool accepted = false;
  std::vector<LineVerdict> lines;

  std::optional<std::size_t> first_failure() const {
    for (const auto& l : lines)
      if (!l.ok) return l.line;
    return std::nullopt;
  }
};

namespace detail {

inline std::string check_line(const Theory& theory, const std::vector<ProofLine>& lines, std::size_t k) {
  const Wff& w = lines[k].wff;
  auto earlier = [k](std::size_t i) { return i >= 1 && i <= k; };
  struct {
    const Theory& theory;
    const std::vector<ProofLine>& lines;
    const Wff& w;
    decltype(earlier)& is_earlier;

    std::string operator()(const ByScheme& s) const {
      if (!theory.has_scheme(s.scheme)) return "scheme " + std::string(to_string(s.scheme)) + " not in theory";
      if (!match_scheme(s.scheme, w, theory.relaxed_induction()))
        return "not an instance of " + std::string(to_string(s.scheme));
      return {};
    }
    std::string operator()(const ByAxiom& a) const {
      const Wff* ax = theory.axiom(a.name);
      if (!ax) return "no axiom named '" + a.name + "' in theory " + theory.name();
      if (!(*ax == w)) return "differs from axiom " + a.name;
      return {};
    }
    std::string operator()(const ByModusPonens& m) const {
      if (!is_earlier(m.minor) || !is_earlier(m.major)) return "premise does not refer to an earlier line";
      const Wff& major = lines[m.major - 1].wff;
      if (!major.is(Wff::Kind::Implies) || !(major.lhs() == lines[m.minor - 1].wff) || !(major.rhs() == w))
        return "major premise shape mismatch";
      return {};
    }
    std::string operator()(const ByGeneralization& g) const {
      if (!is_earlier(g.premise)) return "premise does not refer to an earlier line";
      if (!w.is(Wff::Kind::ForAll) || w.variable() != g.variable || !(w.operand() == lines[g.premise - 1].wff))
        return "generalization shape mismatch";
      return {};
    }
    std::string operator()(const Unjustified&) const { return "unjustified line"; }
  } visitor{theory, lines, w, earlier};
  return std::visit(visitor, lines[k].justification);
}

}  // namespace detail

// Validates every line against its stated justification.
inline Verdict check_proof(const Proof& p) {
  Verdict v;
  v.accepted = true;
  for (std::size_t k = 0; k < p.lines().size(); ++k) {
    std::string reason = detail::check_line(*p.theory(), p.lines(), k);
    bool ok = reason.empty();
    v.accepted = v.accepted && ok;
    v.lines.push_back({k + 1, ok, std::move(reason)});
  }
  return v;
}

struct DiscoveryFailure {
  std::size_t line;  // 1-based
  std::string reason;
};

struct Discovery {
  std::optional<Proof> proof;
  std::vector<DiscoveryFailure> failures;
  // Partially annotated lines, Unjustified where the search failed.
  std::vector<ProofLine> annotated;

  bool ok() const noexcept { return proof.has_value(); }
};

// Searches, in order: proper axioms, schemes K1..K6 and N7, modus ponens
// pairs (minor premise outermost, both ascending), generalization parents.
// The first hit wins. MP search is quadratic in the number of earlier lines.
inline Justification justify(const Theory& theory, const std::vector<ProofLine>& lines, std::size_t k) {
  const Wff& w = lines[k].wff;
  for (const auto& [name, ax] : theory.proper_axioms())
    if (ax == w) return ByAxiom{name};
  if (auto m = recognize_scheme(theory, w)) return ByScheme{m->scheme};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Wff& major = lines[j].wff;
      if (major.is(Wff::Kind::Implies) && major.rhs() == w && major.lhs() == lines[i].wff)
        return ByModusPonens{i + 1, j + 1};
    }
  }
  if (w.is(Wff::Kind::ForAll)) {
    for (std::size_t i = 0; i < k; ++i)
      if (lines[i].wff == w.operand()) return ByGeneralization{i + 1, w.variable()};
  }
  return Unjustified{};
}

// Fills in every Unjustified line; lines that already carry a justification
// are kept as given.
inline Discovery discover(TheoryPtr theory, std::vector<ProofLine> lines) {
  Discovery d;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!std::holds_alternative<Unjustified>(lines[k].justification)) continue;
    lines[k].justification = justify(*theory, lines, k);
    if (std::holds_alternative<Unjustified>(lines[k].justification)) {
      d.failures.push_back({k + 1, k == 0 ? "not an axiom; no earlier lines"
                                          : "not an axiom; no modus ponens or generalization parent"});
    }
  }
  if (lines.empty()) d.failures.push_back({0, "empty proof"});
  if (d.failures.empty()) d.proof.emplace(theory, lines);
  d.annotated = std::move(lines);
  return d;
}

inline Discovery discover(TheoryPtr theory, const std::vector<Wff>& wffs) {
  std::vector<ProofLine> lines;
  lines.reserve(wffs.size());
  for (const auto& w : wffs) lines.push_back({w, Unjustified{}});
  return discover(std::move(theory), std::move(lines));
}

}  // namespace peano

#endif  // PEANO_KERNEL_HPP
