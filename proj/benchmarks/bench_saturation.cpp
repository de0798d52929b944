#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "leaktight/constructions.hpp"
#include "leaktight/decision.hpp"
#include "leaktight/fixtures.hpp"
#include "leaktight/limit_word.hpp"
#include "leaktight/monoid.hpp"
#include "leaktight/witness.hpp"

namespace lt = leaktight;

namespace {

lt::ProbAutomaton composed(int copies) {
  const std::vector<lt::ProbAutomaton> pool{lt::fig1(lt::Rational(3, 4)), lt::deterministic_chain(3),
                                            lt::leaktight_value1_example()};
  std::vector<lt::ProbAutomaton> parts(pool.begin(), pool.begin() + copies);
  return lt::parallel_compose(parts);
}

// Each row moves to one or two uniformly chosen states, fixed seed per size.
lt::ProbAutomaton random_automaton(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i));
  std::vector<lt::TransitionMatrix> mats(2, lt::TransitionMatrix(n));
  for (auto& m : mats) {
    for (lt::State s = 0; s < n; ++s) {
      lt::State t1 = pick(rng);
      lt::State t2 = pick(rng);
      if (t1 == t2) {
        m.at(s, t1) = 1;
      } else {
        m.at(s, t1) = lt::Rational(1, 2);
        m.at(s, t2) = lt::Rational(1, 2);
      }
    }
  }
  std::vector<bool> finals(n, false);
  finals[n - 1] = true;
  return lt::ProbAutomaton("random", states, {"a", "b"}, lt::Distribution::point(n, 0), mats, finals);
}

void BM_Concat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lt::LimitWord u(n);
  lt::LimitWord v(n);
  for (lt::State s = 0; s < n; ++s) {
    u.set(s, (s * 7 + 1) % n);
    u.set(s, (s * 3 + 2) % n);
    v.set(s, (s + 5) % n);
  }
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_Concat)->Arg(8)->Arg(64)->Arg(256);

void BM_SaturateFixture(benchmark::State& state) {
  lt::ProbAutomaton a = composed(static_cast<int>(state.range(0)));
  std::size_t size = 0;
  for (auto _ : state) size = lt::saturate(a).size();
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_SaturateFixture)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SaturateRandom(benchmark::State& state) {
  lt::ProbAutomaton a = random_automaton(static_cast<std::size_t>(state.range(0)), 7);
  std::size_t size = 0;
  for (auto _ : state) size = lt::saturate(a).size();
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_SaturateRandom)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SaturateStrategy(benchmark::State& state) {
  lt::ProbAutomaton a = composed(2);
  lt::SaturationOptions opts;
  opts.strategy = state.range(0) ? lt::SaturationStrategy::Pairwise : lt::SaturationStrategy::RightAtoms;
  for (auto _ : state) benchmark::DoNotOptimize(lt::saturate(a, opts).size());
  state.SetLabel(state.range(0) ? "pairwise" : "right_atoms");
}
BENCHMARK(BM_SaturateStrategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state) {
  lt::ProbAutomaton a = composed(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lt::decide(a).outcome);
}
BENCHMARK(BM_Decide)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_NonSimplicity(benchmark::State& state) {
  lt::MonoidClosure c = lt::saturate(composed(2));
  for (auto _ : state) benchmark::DoNotOptimize(lt::find_non_simplicity_witness(c).has_value());
}
BENCHMARK(BM_NonSimplicity)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
