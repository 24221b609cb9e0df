#include <gtest/gtest.h>

#include "oracles.hpp"
#include "peano/arith.hpp"
#include "peano/eval.hpp"
#include "peano/text.hpp"

using namespace peano;

namespace {

constexpr EvalOptions kStrict{.strict = true};

EvalResult std_eval(const char* text, std::uint64_t bound, EvalOptions o = {}) {
  return eval_bounded(StandardModel{}, parse_core(text), bound, o);
}

}  // namespace

TEST(Eval, Atoms) {
  EXPECT_EQ(std_eval("(S(S(0)) = (S(0) + S(0)))", 0).value, ThreeValued::True);
  EXPECT_EQ(std_eval("((S(S(0)) * S(S(0))) = S(S(S(0))))", 0).value, ThreeValued::False);
  EXPECT_EQ(std_eval("(a2 = S(0))", 0).value, ThreeValued::True);
}

TEST(Eval, UniversalCounterexample) {
  EvalResult r = std_eval("(all x1 (x1 = 0))", 1);
  EXPECT_EQ(r.value, ThreeValued::False);
  EXPECT_EQ(r.witnesses, (std::vector<Binding>{{1, 1}}));
}

TEST(Eval, ExistentialWitness) {
  auto m = CodedModel::standard_coded(18, 2.0);
  EvalResult r = eval_bounded(m, lower(parse_wff("(ex x1 (x1 = S(0)))")), 1);
  EXPECT_EQ(r.value, ThreeValued::True);
  EXPECT_EQ(r.witnesses, (std::vector<Binding>{{1, 1}}));
  EXPECT_EQ(eval_bounded(m, lower(parse_wff("(ex x1 (x1 = S(S(0))))")), 1, kStrict).value, ThreeValued::Unknown);
}

TEST(Eval, StrictUniversalsNeverTrue) {
  auto m = CodedModel::standard_coded(18, 2.0);
  Wff n1 = parse_core("(all x1 ~(S(x1) = 0))");
  EXPECT_EQ(eval_bounded(m, n1, 200, kStrict).value, ThreeValued::Unknown);
  EXPECT_EQ(eval_bounded(m, prime_wff(1), {{1, m.encode(7)}}, 20, kStrict).value, ThreeValued::Unknown);
  EXPECT_EQ(eval_bounded(m, prime_wff(1), {{1, m.encode(8)}}, 20, kStrict).value, ThreeValued::False);
}

TEST(Eval, GuardedUniversals) {
  // Every counterexample to the body would satisfy (x1 * x2) = 7, so x1 <= 7.
  const char* divisors = "(all x1 (all x2 (((x1 * x2) = S(S(S(S(S(S(S(0)))))))) -> ((x1 = S(0)) | (x1 = x2)))))";
  EXPECT_EQ(std_eval(divisors, 7).value, ThreeValued::False);
  const char* seven = "(all x1 (all x2 (((x1 * x2) = S(S(S(S(S(S(S(0)))))))) -> ((x1 = S(0)) | (x2 = S(0))))))";
  EXPECT_EQ(std_eval(seven, 7).value, ThreeValued::True);
  EXPECT_EQ(std_eval(seven, 6).value, ThreeValued::Unknown);
  // Both conjuncts of the failure condition bound x1; the tighter one wins.
  EXPECT_EQ(std_eval("(all x1 (all x2 (((x1 * x2) = S(S(S(S(S(S(S(0)))))))) -> ~(x1 = 0))))", 0).value,
            ThreeValued::True);
  // No guard at all.
  EXPECT_EQ(std_eval("(all x1 ((x1 + 0) = x1))", 50).value, ThreeValued::Unknown);
  // S(x1) = 0 has no solution.
  EXPECT_EQ(std_eval("(all x1 ~(S(x1) = 0))", 0).value, ThreeValued::True);
}

TEST(Eval, UnboundVariable) {
  EXPECT_THROW(std_eval("(x1 = 0)", 5), EvalError);
  EXPECT_EQ(eval_bounded(StandardModel{}, parse_core("(x1 = 0)"), {{1, 0}}, 5).value, ThreeValued::True);
}

TEST(Eval, UninterpretedSymbols) {
  EXPECT_THROW(std_eval("A{2,1}(0)", 5), EvalError);
  EXPECT_THROW(std_eval("(f{3,1}(0) = 0)", 5), EvalError);
  EXPECT_THROW(std_eval("(a3 = 0)", 5), ModelError);
}

TEST(Eval, StrictAgreesWithNaiveEvaluator) {
  oracle::Generator g(31);
  for (int i = 0; i < 400; ++i) {
    Wff w = g.closed_wff(4);
    EvalResult r = eval_bounded(StandardModel{}, w, 4, kStrict);
    oracle::Result o = oracle::eval(w, {}, 4);
    ASSERT_EQ(r.value, oracle::lift(o.v)) << print_wff(w);
    ASSERT_EQ(r.witnesses, oracle::lift(o.w)) << print_wff(w);
  }
}

TEST(Eval, GuardedIsSoundAndRefinesStrict) {
  oracle::Generator g(32);
  int decided = 0;
  for (int i = 0; i < 400; ++i) {
    Wff w = g.closed_wff(4);
    EvalResult strict = eval_bounded(StandardModel{}, w, 4, kStrict);
    EvalResult guarded = eval_bounded(StandardModel{}, w, 4);
    if (strict.value != ThreeValued::Unknown) {
      ASSERT_EQ(guarded.value, strict.value) << print_wff(w);
    }
    if (guarded.value != ThreeValued::Unknown) {
      ++decided;
      // A decided verdict persists at larger bounds, and the plain evaluator
      // at a larger bound never contradicts it.
      EXPECT_EQ(eval_bounded(StandardModel{}, w, 7).value, guarded.value) << print_wff(w);
      oracle::Result o = oracle::eval(w, {}, 7);
      EXPECT_NE(oracle::lift(o.v), guarded.value == ThreeValued::True ? ThreeValued::False : ThreeValued::True)
          << print_wff(w);
    }
  }
  EXPECT_GT(decided, 100);
}

TEST(Eval, PersistenceAcrossBounds) {
  oracle::Generator g(33);
  for (int i = 0; i < 200; ++i) {
    Wff w = g.closed_wff(3);
    EvalResult small = eval_bounded(StandardModel{}, w, 3);
    if (small.value == ThreeValued::Unknown) continue;
    for (std::uint64_t b : {4u, 6u, 9u}) EXPECT_EQ(eval_bounded(StandardModel{}, w, b), small) << print_wff(w);
  }
}

TEST(Eval, CodedModelsMatchStandard) {
  oracle::Generator g(34);
  auto id = CodedModel::standard_coded(18, 1.0);
  auto scaled = CodedModel::standard_coded(28, 2.0);
  for (int i = 0; i < 300; ++i) {
    Wff w = g.closed_wff(4);
    for (EvalOptions o : {EvalOptions{}, kStrict}) {
      EvalResult s = eval_bounded(StandardModel{}, w, 4, o);
      EXPECT_EQ(eval_bounded(id, w, 4, o), s) << print_wff(w);
      EXPECT_EQ(eval_bounded(scaled, w, 4, o), s) << print_wff(w);
    }
  }
}

TEST(Axioms, CodedModelsShowNoCounterexample) {
  auto reports = check_axioms(CodedModel::standard_coded(18, 2.0), 200);
  ASSERT_EQ(reports.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(reports[i].axiom, "N" + std::to_string(i + 1));
    EXPECT_EQ(reports[i].result.value, ThreeValued::Unknown);
    EXPECT_TRUE(reports[i].result.witnesses.empty());
  }
  auto limit = check_axioms(CodedModel::standard_coded(18, 1.0), 30);
  auto standard = check_axioms(StandardModel{}, 30);
  ASSERT_EQ(limit.size(), standard.size());
  for (std::size_t i = 0; i < limit.size(); ++i) {
    EXPECT_EQ(limit[i].axiom, standard[i].axiom);
    EXPECT_EQ(limit[i].result, standard[i].result);
  }
}

TEST(Axioms, FaultInjection) {
  auto bad = CodedModel::with_faulty_successor(default_coding(18, 2.0), [](std::uint64_t n) { return n + 2; });
  auto reports = check_axioms(bad, 20);
  bool any_false = false;
  for (const auto& r : reports) {
    if (r.result.value != ThreeValued::False) continue;
    any_false = true;
    EXPECT_FALSE(r.result.witnesses.empty()) << r.axiom;
  }
  EXPECT_TRUE(any_false);
  // n + 2 breaks x1 * S(x2) = (x1 * x2) + x1 first at x1 = 1, x2 = 0.
  EXPECT_EQ(reports[5].result.value, ThreeValued::False);
  EXPECT_EQ(reports[5].result.witnesses, (std::vector<Binding>{{1, 1}, {2, 0}}));

  // A successor that wraps to zero breaks N1.
  auto wrap = CodedModel::with_faulty_successor(default_coding(18, 2.0), [](std::uint64_t n) { return n == 3 ? 0 : n + 1; });
  auto w = check_axioms(wrap, 20);
  EXPECT_EQ(w[0].result.value, ThreeValued::False);
  EXPECT_EQ(w[0].result.witnesses, (std::vector<Binding>{{1, 3}}));
}
