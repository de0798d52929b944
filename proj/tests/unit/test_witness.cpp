#include <gtest/gtest.h>

#include <set>

#include "leaktight/expression.hpp"
#include "leaktight/fixtures.hpp"
#include "leaktight/parser.hpp"
#include "leaktight/monoid.hpp"
#include "leaktight/witness.hpp"
#include "naive_closure.hpp"
#include "random_automata.hpp"

using namespace leaktight;
using lt_test::Matrix;

namespace {

// Naive predicates on 0/1 matrices, written from the definitions.
std::vector<int> naive_recurrent(const Matrix& u) {
  std::size_t n = u.size();
  std::vector<int> rec(n, 1);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (u[s][t] && !u[t][s]) rec[s] = 0;
  return rec;
}

std::set<std::pair<State, State>> naive_leak_pairs(const std::set<lt_test::Pair>& closure) {
  std::set<std::pair<State, State>> out;
  for (const auto& [u, plus] : closure) {
    if (!lt_test::mat_idempotent(u) || !lt_test::mat_idempotent(plus)) continue;
    auto rec = naive_recurrent(u);
    for (State r = 0; r < u.size(); ++r)
      for (State q = 0; q < u.size(); ++q)
        if (rec[r] && rec[q] && !u[r][q] && plus[r][q]) out.insert({r, q});
  }
  return out;
}

bool naive_value1(const std::set<lt_test::Pair>& closure, const ProbAutomaton& aut) {
  for (const auto& [u, plus] : closure) {
    bool ok = true;
    for (State s : aut.initial().support())
      for (State t = 0; t < u.size(); ++t)
        if (u[s][t] && !aut.is_final(t)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool naive_non_simplicity(const std::set<Matrix>& words) {
  for (const auto& v : words) {
    if (!lt_test::mat_idempotent(v)) continue;
    auto vrec = naive_recurrent(v);
    Matrix vs = lt_test::mat_sharp(v);
    for (const auto& u : words) {
      Matrix uv = lt_test::mat_mul(u, v);
      for (const auto& w : words) {
        Matrix z = lt_test::mat_mul(lt_test::mat_mul(u, vs), w);
        if (!lt_test::mat_idempotent(z)) continue;
        auto zrec = naive_recurrent(z);
        for (State r = 0; r < z.size(); ++r)
          for (State t = 0; t < z.size(); ++t)
            if (zrec[r] && uv[r][t] && !vrec[t]) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(Value1Witness, Predicate) {
  ProbAutomaton loop = two_state_loop();
  EXPECT_TRUE(is_value1_witness(LimitWord::from_edges(2, {{0, 1}, {1, 1}}), loop));
  EXPECT_FALSE(is_value1_witness(LimitWord::from_edges(2, {{0, 0}, {0, 1}, {1, 1}}), loop));
  // Only rows of initial states matter.
  EXPECT_TRUE(is_value1_witness(LimitWord::from_edges(2, {{0, 1}, {1, 0}}), loop));
}

TEST(Value1Witness, TwoStateLoopIsIterOfA) {
  ProbAutomaton a = two_state_loop();
  MonoidClosure c = saturate(a);
  auto w = find_value1_witness(c, a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, WitnessKind::Value1);
  EXPECT_EQ(to_expression(w->derivations.at(0), a), "iter(a)");
  EXPECT_TRUE(recheck(*w, a));
}

TEST(Value1Witness, Fig1HasNone) {
  for (Rational x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    ProbAutomaton a = fig1(x);
    MonoidClosure c = saturate(a);
    EXPECT_FALSE(find_value1_witness(c, a));
    for (const auto& u : c.markov_monoid().words) EXPECT_FALSE(is_value1_witness(u, a));
  }
}

TEST(Value1Witness, PrefersLowSharpHeight) {
  ProbAutomaton a = accepting_sink();
  auto w = find_value1_witness(saturate(a), a);
  ASSERT_TRUE(w);
  EXPECT_EQ(to_expression(w->derivations[0], a), "eps");
}

TEST(LeakWitness, Predicate) {
  LimitWord u = LimitWord::from_edges(2, {{0, 0}, {1, 1}});
  ExtendedLimitWord e(u, LimitWord::from_edges(2, {{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(is_leak_witness(e, 0, 1));
  EXPECT_FALSE(is_leak_witness(e, 1, 0));
  EXPECT_FALSE(is_leak_witness(e, 0, 0));
  // r = 0 not recurrent in u.
  ExtendedLimitWord f(LimitWord::from_edges(2, {{0, 0}, {0, 1}, {1, 1}}), LimitWord::full(2));
  EXPECT_FALSE(is_leak_witness(f, 1, 0));
}

TEST(LeakWitness, Fig2LeaksFromL1ToL2) {
  ProbAutomaton a = fig2();
  MonoidClosure c = saturate(a);
  State l1 = *a.find_state("L1");
  State l2 = *a.find_state("L2");
  auto all = all_leak_witnesses(c);
  ASSERT_FALSE(all.empty());
  bool found = false;
  for (const auto& w : all) {
    EXPECT_TRUE(recheck(w, a));
    if (w.states.at(0) == std::pair{l1, l2}) found = true;
  }
  EXPECT_TRUE(found);
  auto first = find_leak_witness(c);
  ASSERT_TRUE(first);
  EXPECT_EQ(first->states, all.front().states);
}

TEST(LeakWitness, Fig1LeakIsReported) {
  ProbAutomaton a = fig1(Rational(3, 4));
  auto w = find_leak_witness(saturate(a));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->states.at(0), (std::pair<State, State>{0, *a.find_state("L2")}));
  EXPECT_EQ(to_expression(w->derivations.at(0), a),
            "concat(concat(concat(b, iter(a)), b), iter(a))");
  EXPECT_TRUE(recheck(*w, a));
}

TEST(LeakWitness, NoneForOneStateOrLoop) {
  EXPECT_FALSE(find_leak_witness(saturate(accepting_sink())));
  EXPECT_FALSE(find_leak_witness(saturate(two_state_loop())));
  EXPECT_TRUE(all_leak_witnesses(saturate(deterministic_chain(4))).empty());
}

TEST(LeakWitness, PairsMatchNaiveOracle) {
  lt_test::Rng rng(41);
  std::vector<ProbAutomaton> corpus{fig2(), fig1(Rational(1, 2)), leaktight_value1_example()};
  for (int i = 0; i < 150; ++i) corpus.push_back(lt_test::random_loopy(rng, 2 + i % 3, 1 + i % 2));
  int leaky = 0;
  for (const auto& a : corpus) {
    MonoidClosure c = saturate(a);
    std::set<std::pair<State, State>> pairs;
    for (const auto& w : all_leak_witnesses(c)) pairs.insert(w.states.at(0));
    auto naive = naive_leak_pairs(lt_test::naive_closure(a));
    EXPECT_EQ(pairs, naive);
    EXPECT_EQ(find_leak_witness(c).has_value(), !naive.empty());
    EXPECT_EQ(find_value1_witness(c, a).has_value(), naive_value1(lt_test::naive_closure(a), a));
    leaky += !naive.empty();
  }
  EXPECT_GT(leaky, 0);
}

TEST(NonSimplicity, Fig1HasWitness) {
  ProbAutomaton a = fig1(Rational(3, 4));
  MonoidClosure c = saturate(a);
  auto w = find_non_simplicity_witness(c);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, WitnessKind::NonSimplicity);
  ASSERT_EQ(w->values.size(), 3u);
  auto [r, t] = w->states.at(0);
  EXPECT_TRUE(is_non_simplicity_witness(w->values[0].u(), w->values[1].u(), w->values[2].u(), r, t));
  EXPECT_TRUE(recheck(*w, a));

  std::set<Matrix> words;
  for (const auto& [u, plus] : lt_test::naive_closure(a)) words.insert(u);
  EXPECT_TRUE(naive_non_simplicity(words));
}

TEST(NonSimplicity, OneStateHasNone) {
  EXPECT_FALSE(find_non_simplicity_witness(saturate(accepting_sink())));
}

TEST(NonSimplicity, AgreesWithExhaustiveSearch) {
  lt_test::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    ProbAutomaton a = lt_test::random_loopy(rng, 2 + i % 2, 1 + i % 2);
    MonoidClosure c = saturate(a);
    if (c.markov_monoid().words.size() > 40) continue;
    std::set<Matrix> words;
    for (const auto& [u, plus] : lt_test::naive_closure(a)) words.insert(u);
    auto w = find_non_simplicity_witness(c);
    EXPECT_EQ(w.has_value(), naive_non_simplicity(words));
    if (w) EXPECT_TRUE(recheck(*w, a));
  }
}

TEST(NonSimplicity, FollowsEveryLeak) {
  lt_test::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    ProbAutomaton a = lt_test::random_loopy(rng, 2 + i % 4, 2);
    MonoidClosure c = saturate(a);
    if (!find_leak_witness(c)) continue;
    auto w = find_non_simplicity_witness(c);
    ASSERT_TRUE(w) << write_automaton(a);
    EXPECT_TRUE(recheck(*w, a));
  }
}

TEST(Recheck, DetectsTampering) {
  ProbAutomaton a = fig2();
  MonoidClosure c = saturate(a);
  auto w = find_leak_witness(c);
  ASSERT_TRUE(w);
  WitnessReport bad = *w;
  std::swap(bad.states[0].first, bad.states[0].second);
  EXPECT_FALSE(recheck(bad, a));
  bad = *w;
  bad.derivations[0] = DerivationTree::letter(0);
  EXPECT_FALSE(recheck(bad, a));
  bad = *w;
  bad.kind = WitnessKind::Value1;
  EXPECT_FALSE(recheck(bad, fig1(Rational(1, 2))));
}

TEST(WitnessKind, Names) {
  EXPECT_EQ(to_string(WitnessKind::Value1), "value1");
  EXPECT_EQ(to_string(WitnessKind::Leak), "leak");
  EXPECT_EQ(to_string(WitnessKind::NonSimplicity), "non_simplicity");
}
