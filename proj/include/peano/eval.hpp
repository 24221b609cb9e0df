// Bounded three-valued evaluation of formulas in arithmetic models.
//
// A universal quantifier is checked at indices 0..B. A counterexample makes
// it False. Otherwise it is Unknown, except in the default (non-strict)
// mode when the model's operations are the transported ones and a guard
// analysis proves every possible counterexample has index <= R <= B: then
// the exhausted range covers all candidates and the verdict is True.
//
// Guards are the equations that must hold for the body to be false, e.g.
// (a * b) = 7 in  all a all b ((a * b) = 7 -> ...). Reading each side as a
// polynomial with natural coefficients in the quantified variable gives a
// bound on its solutions. Verdicts at bound B persist at every larger bound.

#ifndef PEANO_EVAL_HPP
#define PEANO_EVAL_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peano/kernel.hpp"
#include "peano/models.hpp"
#include "peano/syntax.hpp"

namespace peano {

enum class ThreeValued : std::uint8_t { False, True, Unknown };

inline std::string_view to_string(ThreeValued v) {
  switch (v) {
    case ThreeValued::False: return "False";
    case ThreeValued::True: return "True";
    case ThreeValued::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct Binding {
  VarIndex var;
  std::uint64_t index;
  friend bool operator==(const Binding&, const Binding&) = default;
};

// Decisive verdicts carry the quantifier instances that decided them,
// outermost first: witnesses of existentials, counterexamples of universals.
struct EvalResult {
  ThreeValued value = ThreeValued::Unknown;
  std::vector<Binding> witnesses;
  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

struct EvalOptions {
  // Never report True for a universal quantifier; no guard analysis.
  bool strict = false;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Monomial = std::vector<std::pair<VarIndex, unsigned>>;  // sorted by variable
using Poly = std::map<Monomial, std::int64_t>;

inline bool poly_accumulate(Poly& p, const Monomial& m, std::int64_t c) {
  std::int64_t& slot = p[m];
  if (__builtin_add_overflow(slot, c, &slot)) return false;
  if (slot == 0) p.erase(m);
  return true;
}

inline std::optional<Poly> poly_add(const Poly& a, const Poly& b, std::int64_t sign = 1) {
  Poly r = a;
  for (const auto& [m, c] : b)
    if (!poly_accumulate(r, m, sign * c)) return std::nullopt;
  return r;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  std::map<VarIndex, unsigned> e;
  for (auto [v, k] : a) e[v] += k;
  for (auto [v, k] : b) e[v] += k;
  return {e.begin(), e.end()};
}

inline std::optional<Poly> poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::int64_t c;
      if (__builtin_mul_overflow(ca, cb, &c)) return std::nullopt;
      if (!poly_accumulate(r, monomial_product(ma, mb), c)) return std::nullopt;
    }
  }
  return r;
}

inline Poly poly_const(std::int64_t c) {
  Poly p;
  if (c != 0) p[{}] = c;
  return p;
}

// Variables in `symbolic` stay symbolic; the rest come from `lookup`.
template <class Lookup>
std::optional<Poly> to_poly(const Term& t, const std::set<VarIndex>& symbolic, const Lookup& lookup) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (symbolic.contains(t.index())) return Poly{{Monomial{{t.index(), 1}}, 1}};
      std::optional<std::uint64_t> v = lookup(t.index());
      if (!v || *v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return std::nullopt;
      return poly_const(static_cast<std::int64_t>(*v));
    }
    case Term::Kind::Const:
      if (t.index() == 1) return poly_const(0);
      if (t.index() == 2) return poly_const(1);
      return std::nullopt;
    case Term::Kind::Func: break;
  }
  auto args = t.args();
  if (t.is_func(kSuccessorLetter, 1)) {
    auto p = to_poly(args[0], symbolic, lookup);
    if (!p) return std::nullopt;
    return poly_add(*p, poly_const(1));
  }
  if (t.is_func(kSumLetter, 2) || t.is_func(kProductLetter, 2)) {
    auto p = to_poly(args[0], symbolic, lookup);
    auto q = p ? to_poly(args[1], symbolic, lookup) : std::nullopt;
    if (!q) return std::nullopt;
    return t.index() == kSumLetter ? poly_add(*p, *q) : poly_mul(*p, *q);
  }
  return std::nullopt;
}

// For the equation d = 0 over the naturals: an upper bound on the value of
// x in any solution, -1 if there is no solution, nullopt if none is known.
inline std::optional<std::int64_t> solution_bound(const Poly& d, VarIndex x) {
  std::int64_t d0 = 0;
  std::vector<std::pair<const Monomial*, std::int64_t>> rest;
  for (const auto& [m, c] : d) {
    if (m.empty()) d0 = c;
    else rest.emplace_back(&m, c);
  }
  if (rest.empty()) return d0 != 0 ? std::optional<std::int64_t>(-1) : std::nullopt;

  auto pure_x = [x](const Monomial& m) { return m.size() == 1 && m[0].first == x; };
  auto has_x = [x](const Monomial& m) {
    return std::any_of(m.begin(), m.end(), [x](const auto& e) { return e.first == x; });
  };
  bool all_pos = std::all_of(rest.begin(), rest.end(), [](const auto& r) { return r.second > 0; });
  bool all_neg = std::all_of(rest.begin(), rest.end(), [](const auto& r) { return r.second < 0; });

  if (all_pos || all_neg) {
    // P = c with P a polynomial with positive coefficients.
    std::int64_t sign = all_pos ? 1 : -1;
    if (d0 == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    std::int64_t c = -d0 * sign;
    if (c < 0) return -1;
    std::optional<std::int64_t> best;
    bool every_has_x = true;
    for (const auto& [m, coef] : rest) {
      std::int64_t k = coef * sign;
      if (pure_x(*m)) best = std::min(best.value_or(c), c / k);
      every_has_x = every_has_x && has_x(*m);
    }
    if (best) return best;
    if (every_has_x && c > 0) return c;
    return std::nullopt;
  }

  // Mixed signs: only univariate equations, via the positive-root bound
  // x < 1 + max|negative coefficient| / leading coefficient.
  if (!std::all_of(rest.begin(), rest.end(), [&](const auto& r) { return pure_x(*r.first); })) return std::nullopt;
  unsigned degree = 0;
  for (const auto& [m, c] : rest) degree = std::max(degree, (*m)[0].second);
  std::vector<std::int64_t> coef(degree + 1, 0);
  coef[0] = d0;
  for (const auto& [m, c] : rest) coef[(*m)[0].second] = c;
  if (coef[degree] < 0)
    for (auto& c : coef) c = -c;
  std::int64_t worst = 0;
  for (unsigned i = 0; i < degree; ++i) worst = std::max(worst, -coef[i]);
  return 1 + (worst + coef[degree] - 1) / coef[degree];
}

template <class Lookup>
class GuardAnalysis {
 public:
  GuardAnalysis(VarIndex x, const Lookup& lookup) : x_(x), lookup_(lookup) { symbolic_.insert(x); }

  // Smallest bound on the index of any x for which `body` can be false.
  std::optional<std::int64_t> counterexample_bound(const Wff& body) {
    when_false(body);
    return best_;
  }

 private:
  void when_false(const Wff& w) {
    switch (w.kind()) {
      case Wff::Kind::Implies:
        when_true(w.lhs());
        when_false(w.rhs());
        return;
      case Wff::Kind::Not: when_true(w.operand()); return;
      case Wff::Kind::ForAll: {
        if (w.variable() == x_) return;
        bool added = symbolic_.insert(w.variable()).second;
        when_false(w.operand());
        if (added) symbolic_.erase(w.variable());
        return;
      }
      case Wff::Kind::Atom: return;
    }
  }

  void when_true(const Wff& w) {
    if (w.is(Wff::Kind::Not)) return when_false(w.operand());
    if (!w.is_equality()) return;
    auto lhs = to_poly(w.terms()[0], symbolic_, lookup_);
    auto rhs = lhs ? to_poly(w.terms()[1], symbolic_, lookup_) : std::nullopt;
    if (!rhs) return;
    auto d = poly_add(*lhs, *rhs, -1);
    if (!d) return;
    if (auto r = solution_bound(*d, x_)) best_ = std::min(best_.value_or(*r), *r);
  }

  VarIndex x_;
  const Lookup& lookup_;
  std::set<VarIndex> symbolic_;
  std::optional<std::int64_t> best_;
};

template <class Model>
class Evaluator {
 public:
  using Element = typename Model::element;
  using Env = std::map<VarIndex, Element>;

  Evaluator(const Model& model, std::uint64_t bound, EvalOptions options)
      : model_(model), bound_(bound), options_(options) {}

  Element term(const Term& t, const Env& env) const {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto it = env.find(t.index());
        if (it == env.end()) throw EvalError("unbound variable x" + std::to_string(t.index()));
        return it->second;
      }
      case Term::Kind::Const: return model_.constant(t.index());
      case Term::Kind::Func: break;
    }
    auto args = t.args();
    if (t.is_func(kSuccessorLetter, 1)) return model_.succ(term(args[0], env));
    if (t.is_func(kSumLetter, 2)) return model_.add(term(args[0], env), term(args[1], env));
    if (t.is_func(kProductLetter, 2)) return model_.mul(term(args[0], env), term(args[1], env));
    throw EvalError("function letter f{" + std::to_string(t.index()) + "," + std::to_string(t.arity()) +
                    "} has no interpretation");
  }

  EvalResult eval(const Wff& w, Env& env) const {
    switch (w.kind()) {
      case Wff::Kind::Atom: {
        if (!w.is_equality())
          throw EvalError("predicate letter A{" + std::to_string(w.predicate()) + "," +
                          std::to_string(w.terms().size()) + "} has no interpretation");
        bool eq = model_.same(term(w.terms()[0], env), term(w.terms()[1], env));
        return {eq ? ThreeValued::True : ThreeValued::False, {}};
      }
      case Wff::Kind::Not: {
        EvalResult r = eval(w.operand(), env);
        if (r.value == ThreeValued::True) r.value = ThreeValued::False;
        else if (r.value == ThreeValued::False) r.value = ThreeValued::True;
        return r;
      }
      case Wff::Kind::Implies: {
        EvalResult a = eval(w.lhs(), env);
        if (a.value == ThreeValued::False) return {ThreeValued::True, std::move(a.witnesses)};
        EvalResult b = eval(w.rhs(), env);
        if (b.value == ThreeValued::True) return {ThreeValued::True, std::move(b.witnesses)};
        if (a.value == ThreeValued::True && b.value == ThreeValued::False) {
          a.witnesses.insert(a.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
          return {ThreeValued::False, std::move(a.witnesses)};
        }
        return {};
      }
      case Wff::Kind::ForAll: return forall(w, env);
    }
    return {};
  }

 private:
  EvalResult forall(const Wff& w, Env& env) const {
    const VarIndex x = w.variable();
    const Wff& body = w.operand();

    std::optional<Element> saved;
    if (auto it = env.find(x); it != env.end()) saved = it->second;
    auto restore = [&] {
      if (saved) env.insert_or_assign(x, *saved);
      else env.erase(x);
    };

    std::uint64_t limit = bound_;
    bool exhaustive = false;
    if (!options_.strict) {
      if (!occurs_free(x, body)) {
        env.insert_or_assign(x, model_.from_index(0));
        EvalResult r = eval(body, env);
        restore();
        if (r.value == ThreeValued::False) r.witnesses.insert(r.witnesses.begin(), Binding{x, 0});
        return r;
      }
      if (model_.standard_arithmetic()) {
        auto lookup = [&](VarIndex v) -> std::optional<std::uint64_t> {
          auto it = env.find(v);
          if (it == env.end() || v == x) return std::nullopt;
          return model_.index(it->second);
        };
        GuardAnalysis<decltype(lookup)> guards(x, lookup);
        if (auto r = guards.counterexample_bound(body); r && *r <= static_cast<std::int64_t>(std::min<std::uint64_t>(
                                                                   bound_, std::numeric_limits<std::int64_t>::max()))) {
          if (*r < 0) return {ThreeValued::True, {}};
          limit = static_cast<std::uint64_t>(*r);
          exhaustive = true;
        }
      }
    }

    bool unknown = false;
    for (std::uint64_t i = 0; i <= limit; ++i) {
      env.insert_or_assign(x, model_.from_index(i));
      EvalResult r = eval(body, env);
      if (r.value == ThreeValued::False) {
        restore();
        r.witnesses.insert(r.witnesses.begin(), Binding{x, i});
        return r;
      }
      if (r.value == ThreeValued::Unknown) unknown = true;
      if (i == std::numeric_limits<std::uint64_t>::max()) break;
    }
    restore();
    if (exhaustive && !unknown) return {ThreeValued::True, {}};
    return {};
  }

  const Model& model_;
  std::uint64_t bound_;
  EvalOptions options_;
};

}  // namespace detail

// Evaluates w with quantifiers searched over indices 0..bound. env must bind
// every free variable of w.
template <class Model>
EvalResult eval_bounded(const Model& model, const Wff& w, std::map<VarIndex, typename Model::element> env,
                        std::uint64_t bound, EvalOptions options = {}) {
  for (VarIndex v : free_vars(w))
    if (!env.contains(v)) throw EvalError("unbound free variable x" + std::to_string(v));
  return detail::Evaluator<Model>(model, bound, options).eval(w, env);
}

template <class Model>
EvalResult eval_bounded(const Model& model, const Wff& w, std::uint64_t bound, EvalOptions options = {}) {
  return eval_bounded(model, w, {}, bound, options);
}

struct AxiomReport {
  std::string axiom;
  EvalResult result;
};

// N1-N6 under strict evaluation: each entry is False with a counterexample
// or Unknown. A False means the model's operations are not the transported
// ones.
template <class Model>
std::vector<AxiomReport> check_axioms(const Model& model, std::uint64_t bound) {
  std::vector<AxiomReport> out;
  const auto theory = build_theory_N();
  for (const auto& [name, w] : theory->proper_axioms())
    out.push_back({name, eval_bounded(model, w, bound, EvalOptions{.strict = true})});
  return out;
}

}  // namespace peano

#endif  // PEANO_EVAL_HPP
