#include <gtest/gtest.h>

#include "leaktight/constructions.hpp"
#include "leaktight/error.hpp"
#include "leaktight/fixtures.hpp"
#include "leaktight/parser.hpp"
#include "leaktight/limit_word.hpp"
#include "path_oracle.hpp"
#include "random_automata.hpp"

using namespace leaktight;

namespace {

Word random_word(lt_test::Rng& rng, std::size_t k, std::size_t max_len) {
  Word w;
  for (std::size_t i = 0, len = lt_test::uniform(rng, 0, max_len); i < len; ++i) {
    w.push_back(lt_test::uniform(rng, 0, k - 1));
  }
  return w;
}

}  // namespace

TEST(ParallelCompose, AveragesAcceptance) {
  ProbAutomaton c = parallel_compose(accepting_sink(), rejecting_sink());
  EXPECT_EQ(c.num_states(), 2u);
  EXPECT_EQ(c.state_name(0), "A.q");
  EXPECT_EQ(c.state_name(1), "B.q");
  for (const char* w : {"", "a", "abba"}) {
    EXPECT_EQ(acceptance_probability(c, parse_word(c, w)), Rational(1, 2)) << w;
  }
}

TEST(ParallelCompose, IdenticalComponentsKeepAcceptance) {
  lt_test::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    ProbAutomaton a = lt_test::random_automaton(rng, 3, 2);
    ProbAutomaton c = parallel_compose(a, a);
    Word w = random_word(rng, 2, 6);
    EXPECT_EQ(acceptance_probability(c, w), acceptance_probability(a, w));
  }
}

TEST(ParallelCompose, IsConvexCombination) {
  lt_test::Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    ProbAutomaton a = lt_test::random_automaton(rng, 1 + i % 3, 2);
    ProbAutomaton b = lt_test::random_automaton(rng, 1 + i % 4, 2);
    Word w = random_word(rng, 2, 6);
    EXPECT_EQ(lt_test::path_acceptance(parallel_compose(a, b), w),
              (acceptance_probability(a, w) + acceptance_probability(b, w)) / 2);
  }
}

TEST(ParallelCompose, NaryUsesEqualShares) {
  std::vector<ProbAutomaton> parts{accepting_sink(), rejecting_sink(), rejecting_sink()};
  ProbAutomaton c = parallel_compose(parts);
  EXPECT_EQ(c.num_states(), 3u);
  EXPECT_EQ(c.state_name(2), "C.q");
  EXPECT_EQ(acceptance_probability(c, Word{0, 1}), Rational(1, 3));
  EXPECT_EQ(pspace_composition(parts).num_states(), 3u);
}

TEST(ParallelCompose, RejectsAlphabetMismatch) {
  EXPECT_THROW(parallel_compose(accepting_sink({"a"}), accepting_sink({"b"})), InvalidArgument);
  EXPECT_THROW(parallel_compose(std::span<const ProbAutomaton>{}), InvalidArgument);
}

TEST(SynchronizedProduct, MultipliesAcceptance) {
  lt_test::Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    ProbAutomaton a = lt_test::random_automaton(rng, 1 + i % 3, 2);
    ProbAutomaton b = lt_test::random_automaton(rng, 1 + i % 4, 2);
    ProbAutomaton p = synchronized_product(a, b);
    EXPECT_EQ(p.num_states(), a.num_states() * b.num_states());
    Word w = random_word(rng, 2, 5);
    EXPECT_EQ(lt_test::path_acceptance(p, w),
              acceptance_probability(a, w) * acceptance_probability(b, w));
  }
}

TEST(SynchronizedProduct, IsomorphicToSwappedOrder) {
  ProbAutomaton ab = synchronized_product(fig2(), accepting_sink());
  EXPECT_EQ(ab.state_name(0), "(0,q)");
  EXPECT_THROW(synchronized_product(fig2(), two_state_loop()), InvalidArgument);
  lt_test::Rng rng(1);
  ProbAutomaton x = lt_test::random_automaton(rng, 3, 2);
  ProbAutomaton y = lt_test::random_automaton(rng, 2, 2);
  ProbAutomaton xy = synchronized_product(x, y);
  ProbAutomaton yx = synchronized_product(y, x);
  for (Letter l = 0; l < 2; ++l) {
    for (State p = 0; p < 3; ++p)
      for (State q = 0; q < 2; ++q)
        for (State p2 = 0; p2 < 3; ++p2)
          for (State q2 = 0; q2 < 2; ++q2) {
            EXPECT_EQ(xy.matrix(l).at(p * 2 + q, p2 * 2 + q2),
                      yx.matrix(l).at(q * 3 + p, q2 * 3 + p2));
          }
  }
}

TEST(SynchronizedProduct, DeterministicStaysDeterministic) {
  lt_test::Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    ProbAutomaton p = synchronized_product(lt_test::random_deterministic(rng, 3, 2),
                                           lt_test::random_deterministic(rng, 2, 2));
    EXPECT_TRUE(p.is_deterministic());
  }
}

TEST(Transducer, ValidatesTable) {
  EXPECT_THROW(DeterministicTransducer({"p"}, 2, {{0}}), InvalidArgument);
  EXPECT_THROW(DeterministicTransducer({"p"}, 1, {{1}}), InvalidArgument);
  EXPECT_THROW(DeterministicTransducer({"p"}, 1, {{0}}, 1), InvalidArgument);
}

TEST(Transducer, CountsVisitsModuloTwo) {
  // Parity of the number of times state f has been read.
  ProbAutomaton a = two_state_loop();
  State f = *a.find_state("f");
  State s = *a.find_state("s");
  std::vector<std::vector<std::size_t>> next(2, std::vector<std::size_t>(2));
  for (std::size_t p = 0; p < 2; ++p) {
    next[p][s] = p;
    next[p][f] = 1 - p;
  }
  DeterministicTransducer m({"even", "odd"}, 2, next);
  ProbAutomaton c = transducer_compose(a, m);
  EXPECT_EQ(c.num_states(), 4u);
  EXPECT_EQ(c.state_name(s * 2 + 1), "(s,odd)");
  EXPECT_EQ(c.initial()[s * 2 + 0], 1);
  // Finals project onto F_a: acceptance equals the base automaton's.
  for (std::size_t n = 0; n < 6; ++n) {
    Word w(n, 0);
    EXPECT_EQ(acceptance_probability(c, w), acceptance_probability(a, w));
  }
  // After "aa" from s: stay-stay (s,even), stay-f (f,even), f-f (f,odd).
  Distribution d = run(c, c.initial(), Word{0, 0});
  EXPECT_EQ(d[s * 2 + 0], Rational(1, 4));
  EXPECT_EQ(d[f * 2 + 0], Rational(1, 4));
  EXPECT_EQ(d[f * 2 + 1], Rational(1, 2));
}

TEST(Transducer, RejectsWrongInputSize) {
  DeterministicTransducer m({"p"}, 3, {{0, 0, 0}});
  EXPECT_THROW(transducer_compose(two_state_loop(), m), InvalidArgument);
}

TEST(MinPriorityTracker, PriorityOnlyDecreases) {
  for (ProbAutomaton a : {parity_two_state(), parity_all_odd(), parity_all_even()}) {
    DeterministicTransducer m = min_priority_tracker(a);
    EXPECT_EQ(m.input_size(), a.num_states());
    unsigned top = tracker_priority(a, m.initial());
    for (std::size_t p = 0; p < m.num_states(); ++p) {
      EXPECT_LE(tracker_priority(a, p), top);
      for (State q = 0; q < a.num_states(); ++q) {
        unsigned next = tracker_priority(a, m.next(p, q));
        EXPECT_EQ(next, std::min(tracker_priority(a, p), (*a.priority())[q]));
      }
    }
  }
}

TEST(MinPriorityTracker, RequiresPriorities) {
  EXPECT_THROW(min_priority_tracker(two_state_loop()), InvalidArgument);
}

TEST(Compositions, PreserveSupportStructure) {
  // Letter supports of a product are Kronecker products of the supports.
  lt_test::Rng rng(6);
  ProbAutomaton a = lt_test::random_automaton(rng, 3, 2);
  ProbAutomaton b = lt_test::random_automaton(rng, 3, 2);
  ProbAutomaton p = synchronized_product(a, b);
  for (Letter l = 0; l < 2; ++l) {
    LimitWord ua = LimitWord::support_of(a.matrix(l));
    LimitWord ub = LimitWord::support_of(b.matrix(l));
    LimitWord up = LimitWord::support_of(p.matrix(l));
    for (State s = 0; s < 9; ++s)
      for (State t = 0; t < 9; ++t) {
        EXPECT_EQ(up.get(s, t), ua.get(s / 3, t / 3) && ub.get(s % 3, t % 3));
      }
  }
}
