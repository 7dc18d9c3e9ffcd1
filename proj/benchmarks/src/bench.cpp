#include <benchmark/benchmark.h>

#include "lpgram/convert.hpp"
#include "lpgram/derive.hpp"
#include "lpgram/parse.hpp"
#include "lpgram/prover.hpp"
#include "lpgram/quadratic.hpp"

using namespace lpgram;

namespace {

void BM_ParseType(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_type("f/(f/r)/(f/p)/q"));
  }
}
BENCHMARK(BM_ParseType);

// A fresh prover per iteration, so the memo does not turn later iterations
// into lookups.
void BM_ProveChain(benchmark::State& state) {
  Sequent s = parse_sequent("p, p, q, q, s/p/q/p/q -> s");
  for (auto _ : state) {
    Prover prover;
    benchmark::DoNotOptimize(prover.provable(s));
  }
}
BENCHMARK(BM_ProveChain);

void BM_ProveMemoized(benchmark::State& state) {
  Sequent s = parse_sequent("p, p, q, q, s/p/q/p/q -> s");
  Prover prover;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prover.provable(s));
  }
}
BENCHMARK(BM_ProveMemoized);

void BM_QuadraticMember(benchmark::State& state) {
  LBvassam g = quadratic_system();
  Vec v{static_cast<std::uint64_t>(state.range(0) * state.range(0)),
        static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_member(g, v));
  }
}
BENCHMARK(BM_QuadraticMember)->Arg(2)->Arg(3)->Arg(4);

void BM_EncodeGrammar(benchmark::State& state) {
  LBvassam g = quadratic_system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpg_of(g));
  }
}
BENCHMARK(BM_EncodeGrammar);

void BM_EncodeSystem(benchmark::State& state) {
  LpGrammar g;
  g.alphabet = {"a", "b"};
  g.lexicon = {{"a", parse_type("p")}, {"b", parse_type("s/p/p")}};
  g.distinguished = parse_type("s");
  for (auto _ : state) {
    benchmark::DoNotOptimize(lbam_of(g));
  }
}
BENCHMARK(BM_EncodeSystem);

void BM_EnumerateGrammar(benchmark::State& state) {
  LpGrammar g;
  g.alphabet = {"a", "b"};
  g.lexicon = {{"a", parse_type("p")}, {"b", parse_type("s/p/p")}};
  g.distinguished = parse_type("s");
  for (auto _ : state) {
    Prover prover;
    benchmark::DoNotOptimize(
        enumerate_language(g, static_cast<std::size_t>(state.range(0)), prover));
  }
}
BENCHMARK(BM_EnumerateGrammar)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
