// Independent reference implementations and random generators for tests.

#ifndef PEANO_TESTS_ORACLES_HPP
#define PEANO_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "peano/peano.hpp"

namespace oracle {

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool frakN(std::uint64_t a) { return a % 2 == 0 && a >= 16 && !prime(a / 2) && !prime(a - 3); }

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> partitions(std::uint64_t a) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 0; p <= a; ++p)
    for (std::uint64_t q = p; q <= a; ++q)
      if (p + q == a && prime(p) && prime(q)) out.emplace_back(p, q);
  return out;
}

// Count of slope-u intervals [i, i+1) below n for the stand-in coding,
// straight from the slope rule.
inline std::uint64_t scaled_below(std::uint64_t alpha, std::uint64_t n) {
  std::uint64_t b = 0;
  for (std::uint64_t i = 2; i < n; ++i)
    if (i + 5 <= alpha && i != alpha / 2) ++b;
  return b;
}

// Plain recursive evaluator over the naturals. Universals never come out
// True: they are False on a counterexample <= bound, else Unknown.
enum class V { F, T, U };

struct Result {
  V v = V::U;
  std::vector<std::pair<peano::VarIndex, std::uint64_t>> w;
};

inline std::uint64_t term(const peano::Term& t, const std::map<peano::VarIndex, std::uint64_t>& env) {
  using K = peano::Term::Kind;
  if (t.kind() == K::Var) return env.at(t.index());
  if (t.kind() == K::Const) return t.index() == 1 ? 0 : 1;
  auto a = t.args();
  if (a.size() == 1) return term(a[0], env) + 1;
  if (t.index() == 1) return term(a[0], env) + term(a[1], env);
  return term(a[0], env) * term(a[1], env);
}

inline Result eval(const peano::Wff& w, std::map<peano::VarIndex, std::uint64_t> env, std::uint64_t bound) {
  using K = peano::Wff::Kind;
  switch (w.kind()) {
    case K::Atom: return {term(w.terms()[0], env) == term(w.terms()[1], env) ? V::T : V::F, {}};
    case K::Not: {
      Result r = eval(w.operand(), env, bound);
      if (r.v == V::T) r.v = V::F;
      else if (r.v == V::F) r.v = V::T;
      return r;
    }
    case K::Implies: {
      Result a = eval(w.lhs(), env, bound);
      if (a.v == V::F) return {V::T, a.w};
      Result b = eval(w.rhs(), env, bound);
      if (b.v == V::T) return {V::T, b.w};
      if (a.v == V::T && b.v == V::F) {
        a.w.insert(a.w.end(), b.w.begin(), b.w.end());
        return {V::F, a.w};
      }
      return {};
    }
    case K::ForAll: {
      for (std::uint64_t i = 0; i <= bound; ++i) {
        env[w.variable()] = i;
        Result r = eval(w.operand(), env, bound);
        if (r.v == V::F) {
          r.w.insert(r.w.begin(), {w.variable(), i});
          return r;
        }
      }
      return {};
    }
  }
  return {};
}

inline peano::ThreeValued lift(V v) {
  return v == V::T ? peano::ThreeValued::True : v == V::F ? peano::ThreeValued::False : peano::ThreeValued::Unknown;
}

inline std::vector<peano::Binding> lift(const std::vector<std::pair<peano::VarIndex, std::uint64_t>>& w) {
  std::vector<peano::Binding> out;
  for (auto [v, i] : w) out.push_back({v, i});
  return out;
}

// Random syntax. Terms stay small so products cannot overflow at the
// bounds used in tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, unsigned vars = 3) : rng_(seed), vars_(vars) {}

  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  peano::Term term(unsigned depth) {
    unsigned k = depth == 0 ? pick(2) : pick(5);
    switch (k) {
      case 0: return peano::Term::var(1 + pick(vars_));
      case 1: return pick(3) == 0 ? peano::Term::zero() : peano::numeral(pick(3));
      case 2: return peano::Term::succ(term(depth - 1));
      case 3: return peano::Term::sum(term(depth - 1), term(depth - 1));
      default: return peano::Term::product(term(depth - 1), term(depth - 1));
    }
  }

  peano::Wff wff(unsigned depth) {
    unsigned k = depth == 0 ? 0 : pick(4);
    switch (k) {
      case 0: return peano::Wff::equals(term(2), term(2));
      case 1: return peano::Wff::negation(wff(depth - 1));
      case 2: return peano::Wff::implies(wff(depth - 1), wff(depth - 1));
      default: return peano::Wff::forall(1 + pick(vars_), wff(depth - 1));
    }
  }

  // Universally closes over the free variables.
  peano::Wff closed_wff(unsigned depth) {
    peano::Wff w = wff(depth);
    for (peano::VarIndex v : peano::free_vars(w)) w = peano::Wff::forall(v, w);
    return w;
  }

  peano::SurfaceWff surface(unsigned depth) {
    using K = peano::SurfaceWff::Kind;
    if (depth == 0) return peano::SurfaceWff::atom(peano::kEqualityPredicate, {term(2), term(2)});
    switch (pick(8)) {
      case 0: return peano::SurfaceWff::atom(peano::kEqualityPredicate, {term(2), term(2)});
      case 1: return peano::SurfaceWff::unary(K::Not, surface(depth - 1));
      case 2: return peano::SurfaceWff::binary(K::Implies, surface(depth - 1), surface(depth - 1));
      case 3: return peano::SurfaceWff::quantified(K::ForAll, 1 + pick(vars_), surface(depth - 1));
      case 4: return peano::SurfaceWff::quantified(K::Exists, 1 + pick(vars_), surface(depth - 1));
      case 5: return peano::SurfaceWff::binary(K::And, surface(depth - 1), surface(depth - 1));
      case 6: return peano::SurfaceWff::binary(K::Or, surface(depth - 1), surface(depth - 1));
      default: return peano::SurfaceWff::binary(K::Iff, surface(depth - 1), surface(depth - 1));
    }
  }

 private:
  std::mt19937_64 rng_;
  unsigned vars_;
};

// Instances of K1..K6 built directly from the scheme shapes.
inline peano::Wff scheme_instance(Generator& g, peano::SchemeId s) {
  using peano::Wff;
  using peano::SchemeId;
  auto A = g.wff(2), B = g.wff(2), C = g.wff(1);
  switch (s) {
    case SchemeId::K1: return Wff::implies(A, Wff::implies(B, A));
    case SchemeId::K2:
      return Wff::implies(Wff::implies(A, Wff::implies(B, C)),
                          Wff::implies(Wff::implies(A, B), Wff::implies(A, C)));
    case SchemeId::K3:
      return Wff::implies(Wff::implies(Wff::negation(A), Wff::negation(B)), Wff::implies(B, A));
    case SchemeId::K4: {
      // Bind a variable that cannot be free in A.
      peano::VarIndex x = 9;
      return Wff::implies(Wff::forall(x, A), A);
    }
    case SchemeId::K5: {
      peano::VarIndex x = 1 + g.pick(3);
      peano::Term t = g.term(1);
      // Replace t by a closed term when it would be captured.
      if (!peano::is_free_for(t, x, A)) t = peano::numeral(g.pick(3));
      return Wff::implies(Wff::forall(x, A), peano::substitute(A, x, t));
    }
    case SchemeId::K6: {
      peano::VarIndex x = 1 + g.pick(3);
      Wff a = peano::occurs_free(x, A) ? Wff::forall(x, A) : A;
      return Wff::implies(Wff::forall(x, Wff::implies(a, B)), Wff::implies(a, Wff::forall(x, B)));
    }
    case SchemeId::N7: break;
  }
  return A;
}

}  // namespace oracle

#endif  // PEANO_TESTS_ORACLES_HPP
