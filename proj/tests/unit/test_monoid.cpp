#include <gtest/gtest.h>

#include <set>

#include "leaktight/error.hpp"
#include "leaktight/expression.hpp"
#include "leaktight/fixtures.hpp"
#include "leaktight/parser.hpp"
#include "leaktight/monoid.hpp"
#include "naive_closure.hpp"
#include "random_automata.hpp"

using namespace leaktight;

namespace {

lt_test::Matrix to_matrix(const LimitWord& u) {
  lt_test::Matrix m(u.size(), std::vector<int>(u.size(), 0));
  for (State s = 0; s < u.size(); ++s)
    for (State t = 0; t < u.size(); ++t) m[s][t] = u.get(s, t);
  return m;
}

std::set<lt_test::Pair> as_pairs(const MonoidClosure& c) {
  std::set<lt_test::Pair> out;
  for (const auto& e : c.elements()) out.insert({to_matrix(e.u()), to_matrix(e.u_plus())});
  return out;
}

std::set<ExtendedLimitWord> as_set(const MonoidClosure& c) {
  return {c.elements().begin(), c.elements().end()};
}

ProbAutomaton small_random(lt_test::Rng& rng, int i) {
  return lt_test::random_automaton(rng, 1 + i % 4, 1 + (i / 4) % 2);
}

}  // namespace

TEST(Saturate, OneStateAutomatonHasOneElement) {
  MonoidClosure c = saturate(accepting_sink());
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.element(0), ExtendedLimitWord::identity(1));
  EXPECT_EQ(c.max_sharp_height(), 0u);
}

TEST(Saturate, FixtureSizes) {
  MonoidClosure loop = saturate(two_state_loop());
  EXPECT_EQ(loop.size(), 3u);
  EXPECT_EQ(loop.markov_monoid().words.size(), 3u);
  MonoidClosure f2 = saturate(fig2());
  EXPECT_EQ(f2.size(), 32u);
  EXPECT_EQ(f2.markov_monoid().words.size(), 18u);
  for (Rational x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    MonoidClosure f1 = saturate(fig1(x));
    EXPECT_EQ(f1.size(), 33u);
    EXPECT_EQ(f1.markov_monoid().words.size(), 19u);
  }
}

TEST(Saturate, MatchesNaiveFixpointOracle) {
  lt_test::Rng rng(31);
  for (int i = 0; i < 120; ++i) {
    ProbAutomaton a = small_random(rng, i);
    EXPECT_EQ(as_pairs(saturate(a)), lt_test::naive_closure(a)) << write_automaton(a);
  }
  for (const auto& a : {fig2(), two_state_loop(), deterministic_chain(3)}) {
    EXPECT_EQ(as_pairs(saturate(a)), lt_test::naive_closure(a));
  }
}

TEST(Saturate, StrategiesAgree) {
  lt_test::Rng rng(32);
  SaturationOptions pairwise;
  pairwise.strategy = SaturationStrategy::Pairwise;
  for (int i = 0; i < 80; ++i) {
    ProbAutomaton a = lt_test::random_automaton(rng, 1 + i % 5, 2);
    MonoidClosure right = saturate(a);
    MonoidClosure pair = saturate(a, pairwise);
    EXPECT_EQ(as_set(right), as_set(pair));
    EXPECT_TRUE(verify_closed(right));
    EXPECT_TRUE(verify_closed(pair));
  }
}

TEST(Saturate, IsDeterministic) {
  lt_test::Rng rng(33);
  ProbAutomaton a = lt_test::random_automaton(rng, 5, 2);
  MonoidClosure x = saturate(a);
  MonoidClosure y = saturate(a);
  EXPECT_EQ(x.elements(), y.elements());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x.derivation(i), y.derivation(i));
}

TEST(Saturate, BudgetExceededThrows) {
  SaturationOptions tiny;
  tiny.max_elements = 10;
  try {
    saturate(fig2(), tiny);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 10u);
    EXPECT_GE(e.partial_size(), 10u);
  }
  tiny.max_elements = 32;
  EXPECT_EQ(saturate(fig2(), tiny).size(), 32u);
}

TEST(Saturate, ExplicitGenerators) {
  std::vector<ExtendedLimitWord> gens{ExtendedLimitWord(LimitWord::from_edges(2, {{0, 1}, {1, 0}}))};
  MonoidClosure c = saturate(gens, 2);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_THROW(saturate(std::vector<ExtendedLimitWord>{ExtendedLimitWord::identity(3)}, 2),
               InvalidArgument);
}

TEST(Saturate, DerivationsEvaluateToTheirElements) {
  lt_test::Rng rng(34);
  std::vector<ProbAutomaton> corpus{fig1(Rational(3, 4)), fig2(), two_state_loop()};
  for (int i = 0; i < 40; ++i) corpus.push_back(lt_test::random_automaton(rng, 2 + i % 4, 2));
  for (const auto& a : corpus) {
    MonoidClosure c = saturate(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      DerivationTree t = c.derivation(i);
      ASSERT_EQ(evaluate(t, a), c.element(i));
      EXPECT_EQ(t.sharp_height(), c.sharp_height(i));
      EXPECT_EQ(t.size(), c.derivation_size(i));
      EXPECT_EQ(c.find(c.element(i)), i);
    }
  }
}

TEST(Saturate, MarkovProjectionIsFirstComponents) {
  MonoidClosure c = saturate(fig1(Rational(1, 2)));
  const auto& proj = c.markov_monoid();
  std::set<LimitWord> firsts;
  for (const auto& e : c.elements()) firsts.insert(e.u());
  EXPECT_EQ(std::set<LimitWord>(proj.words.begin(), proj.words.end()), firsts);
  for (std::size_t k = 0; k < proj.words.size(); ++k) {
    EXPECT_EQ(c.element(proj.source[k]).u(), proj.words[k]);
    EXPECT_EQ(proj.index.at(proj.words[k]), k);
  }
}

TEST(Saturate, SharpHeightBoundedByStates) {
  lt_test::Rng rng(35);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + i % 6;
    ProbAutomaton a = i % 2 ? lt_test::random_automaton(rng, n, 2) : lt_test::random_loopy(rng, n, 2);
    SaturationOptions opts;
    opts.max_elements = 200'000;
    MonoidClosure c = saturate(a, opts);
    EXPECT_LE(c.max_sharp_height(), n);
  }
}

TEST(Saturate, ClosureElementsSatisfyStabilizationAxioms) {
  lt_test::Rng rng(36);
  for (int i = 0; i < 40; ++i) {
    MonoidClosure c = saturate(lt_test::random_automaton(rng, 1 + i % 4, 2));
    for (const auto& e : c.elements()) {
      if (!is_idempotent(e)) continue;
      ExtendedLimitWord s = ext_iterate(e);
      EXPECT_EQ(ext_iterate(s), s);
      EXPECT_EQ(s * e, s);
      EXPECT_TRUE(c.find(s).has_value());
    }
    for (const auto& a : c.elements()) {
      for (const auto& b : c.elements()) {
        ExtendedLimitWord ab = a * b;
        ExtendedLimitWord ba = b * a;
        if (is_idempotent(ab) && is_idempotent(ba)) {
          EXPECT_EQ(ext_iterate(ab) * a, a * ext_iterate(ba));
        }
      }
    }
  }
}

TEST(Saturate, JOrderRespectsClassCount) {
  lt_test::Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    MonoidClosure c = saturate(lt_test::random_automaton(rng, 2 + i % 3, 2));
    const auto& words = c.markov_monoid().words;
    if (words.size() > 60) continue;
    for (const auto& v : words) {
      if (!is_idempotent(v)) continue;
      std::size_t cv = cl_count(v);
      for (const auto& x : words) {
        for (const auto& y : words) {
          LimitWord u = x * v * y;
          if (is_idempotent(u)) EXPECT_LE(cl_count(u), cv);
        }
      }
    }
  }
}
