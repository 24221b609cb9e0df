// Numerals and arithmetic formula builders, up to the Goldbach sentence.
//
// Bound variables are always the smallest indices not already in use, so
// every builder emits byte-identical formulas across runs.

#ifndef PEANO_ARITH_HPP
#define PEANO_ARITH_HPP

#include <cstdint>
#include <set>
#include <stdexcept>

#include "peano/syntax.hpp"

namespace peano {

inline Term numeral(std::uint64_t n) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Term::succ(t);
  return t;
}

// Inverse of numeral(); throws std::invalid_argument on anything that is not
// a successor tower over a1.
inline std::uint64_t decode_numeral(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (cur->is_func(kSuccessorLetter, 1)) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->kind() != Term::Kind::Const || cur->index() != kZeroConstant)
    throw std::invalid_argument("not a numeral");
  return n;
}

inline VarIndex fresh_var(const std::set<VarIndex>& used) {
  VarIndex v = 1;
  while (used.contains(v)) ++v;
  return v;
}

namespace detail {

inline Wff eq(Term a, Term b) { return Wff::equals(std::move(a), std::move(b)); }

// v != 0 & v != S0 & all a all b ((a * b) = v -> (a = S0 | a = v))
inline Wff prime_wff(VarIndex v, std::set<VarIndex> used) {
  used.insert(v);
  VarIndex a = fresh_var(used);
  used.insert(a);
  VarIndex b = fresh_var(used);
  Term tv = Term::var(v), ta = Term::var(a), tb = Term::var(b);
  Term one = Term::succ(Term::zero());
  Wff divisors = Wff::forall(
      a, Wff::forall(b, Wff::implies(eq(Term::product(ta, tb), tv), disj(eq(ta, one), eq(ta, tv)))));
  return conj(conj(Wff::negation(eq(tv, Term::zero())), Wff::negation(eq(tv, one))), divisors);
}

inline Wff frakN_wff(VarIndex v, std::set<VarIndex> used) {
  used.insert(v);
  Term tv = Term::var(v);
  VarIndex w = fresh_var(used);
  Term tw = Term::var(w);
  auto with_w = used;
  with_w.insert(w);
  Wff even = exists(w, eq(Term::sum(tw, tw), tv));
  Wff at_least_16 = exists(w, eq(Term::sum(tw, numeral(16)), tv));
  Wff half_composite = exists(w, conj(eq(Term::sum(tw, tw), tv), Wff::negation(prime_wff(w, with_w))));
  Wff minus3_composite = exists(w, conj(eq(Term::sum(tw, numeral(3)), tv), Wff::negation(prime_wff(w, with_w))));
  return conj(conj(conj(even, at_least_16), half_composite), minus3_composite);
}

}  // namespace detail

// Exactly {v} free: "v is prime".
inline Wff prime_wff(VarIndex v) { return detail::prime_wff(v, {}); }

// Exactly {v} free: v even, v >= 16, v/2 not prime, v - 3 not prime.
inline Wff frakN_wff(VarIndex v) { return detail::frakN_wff(v, {}); }

// "p + q = v with p and q prime", existentially closed over p and q.
inline Wff two_prime_sum_wff(VarIndex v, VarIndex p, VarIndex q) {
  std::set<VarIndex> used{v, p, q};
  Wff body = conj(conj(detail::prime_wff(p, used), detail::prime_wff(q, used)),
                  detail::eq(Term::sum(Term::var(p), Term::var(q)), Term::var(v)));
  return exists(p, exists(q, body));
}

// all x1 (frakN(x1) -> ex x2 ex x3 (prime(x2) & prime(x3) & x2 + x3 = x1))
inline Wff goldbach_sentence() {
  return Wff::forall(1, Wff::implies(frakN_wff(1), two_prime_sum_wff(1, 2, 3)));
}

// The unrestricted statement: every even x1 >= 4 is a sum of two primes.
inline Wff classical_goldbach_sentence() {
  Term a = Term::var(1), b = Term::var(2);
  Wff even = exists(2, detail::eq(Term::sum(b, b), a));
  Wff at_least_4 = exists(2, detail::eq(Term::sum(b, numeral(4)), a));
  return Wff::forall(1, Wff::implies(conj(even, at_least_4), two_prime_sum_wff(1, 2, 3)));
}

}  // namespace peano

#endif  // PEANO_ARITH_HPP
