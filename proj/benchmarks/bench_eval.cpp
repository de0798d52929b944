#include <benchmark/benchmark.h>

#include "leaktight/fixtures.hpp"
#include "leaktight/oracle.hpp"

namespace lt = leaktight;

namespace {

void BM_Fig1Family(benchmark::State& state) {
  lt::ProbAutomaton a = lt::fig1(lt::Rational(3, 4));
  lt::WordFamily family = lt::fig1_family(a);
  lt::WordExpr w = family.generator(static_cast<std::uint64_t>(state.range(0)));
  double p = 0;
  for (auto _ : state) p = lt::eval_word(a, w).acceptance;
  state.counters["letters"] = static_cast<double>(w.length());
  state.counters["acceptance"] = p;
}
BENCHMARK(BM_Fig1Family)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Fig1FamilyFloat(benchmark::State& state) {
  lt::ProbAutomaton a = lt::fig1(lt::Rational(3, 4));
  lt::EvalOptions opts;
  opts.exact_max_letters = 0;
  lt::WordExpr w = lt::fig1_family(a).generator(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lt::eval_word(a, w, opts).acceptance);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.length()));
}
BENCHMARK(BM_Fig1FamilyFloat)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
