#include <benchmark/benchmark.h>

#include <vector>

#include "veerlab/burau.hpp"
#include "veerlab/farey.hpp"
#include "veerlab/linkinv.hpp"
#include "veerlab/random.hpp"
#include "veerlab/suites.hpp"
#include "veerlab/torus.hpp"

using namespace veerlab;

namespace {

std::vector<BraidWord> corpus(int strands, std::size_t length, std::size_t n = 64) {
  Rng rng(17);
  std::vector<BraidWord> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_braid(rng, strands, length));
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  Rng rng(1);
  std::vector<PSL2Element> gs;
  for (int i = 0; i < 64; ++i) gs.push_back(random_psl(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(gs[i++ % gs.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(20)->Arg(80)->Arg(320);

void BM_TurnPath(benchmark::State& state) {
  Rng rng(2);
  std::vector<PSL2Element> gs;
  for (int i = 0; i < 64; ++i) gs.push_back(random_psl(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(turn_path(gs[i++ % gs.size()]));
}
BENCHMARK(BM_TurnPath)->Arg(20)->Arg(80)->Arg(320);

void BM_Decompose(benchmark::State& state) {
  const auto words = corpus(3, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(words[i++ % words.size()]));
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(40)->Arg(160);

void BM_QuasipositiveVerdict(benchmark::State& state) {
  const auto words = corpus(3, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(quasipositive_verdict(words[i++ % words.size()]));
}
BENCHMARK(BM_QuasipositiveVerdict)->Arg(10)->Arg(40);

void BM_SeifertSignature(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(seifert_signature(words[i++ % words.size()]));
}
BENCHMARK(BM_SeifertSignature)->Args({3, 12})->Args({5, 12})->Args({5, 40});

void BM_MeyerSignature(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(meyer_signature(words[i++ % words.size()]));
}
BENCHMARK(BM_MeyerSignature)->Args({3, 12})->Args({5, 12})->Args({5, 40});

void BM_LiftMaslov(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lift_maslov(words[i++ % words.size()]));
}
BENCHMARK(BM_LiftMaslov)->Args({3, 12})->Args({5, 12})->Unit(benchmark::kMillisecond);

void BM_Lk2Certificate(benchmark::State& state) {
  Rng rng(5);
  std::vector<TurnWord> ws;
  for (int i = 0; i < 64; ++i) {
    std::string w;
    for (long k = 0; k < state.range(0); ++k) w += rng.coin() ? 'L' : 'R';
    ws.emplace_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lk2_nonqp_certificate(ws[i++ % ws.size()]));
}
BENCHMARK(BM_Lk2Certificate)->Arg(8)->Arg(32)->Arg(128);

void BM_Sweep(benchmark::State& state, const char* suite) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, 200, 1, 1));
}
BENCHMARK_CAPTURE(BM_Sweep, theorem_lk, "theorem-lk")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, sign_maslov, "sign-maslov")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
