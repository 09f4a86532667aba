#include <benchmark/benchmark.h>

#include <random>

#include "plt/church.hpp"
#include "plt/normalize.hpp"
#include "plt/registers.hpp"

using namespace plt;

namespace {

const Signature kSig = make_signature("ab");

std::string word_of(int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += (i % 3 == 0) ? 'a' : 'b';
  return w;
}

LambdaTransducer rev_transducer() {
  LambdaTransducer L;
  L.input = L.output = kSig;
  L.kappa = base_type();
  for (const auto& l : kSig.letters) L.step[l] = lam("x", app(cst(l), var("x")));
  L.d_eps = cst(kEps);
  L.readout = lam("x", var("x"));
  return L;
}

void BM_compose_wires(benchmark::State& state) {
  DiagCat cat{"ab", DiagMode::Planar};
  std::string obj(state.range(0), '+');
  Diagram id = cat.identity(obj);
  for (auto _ : state) benchmark::DoNotOptimize(compose(id, id));
}
BENCHMARK(BM_compose_wires)->Range(8, 512);

void BM_normalize_church(benchmark::State& state) {
  TermPtr t = resolve_constants(
      app(reverse_term(kSig), church_encode(word_of(state.range(0)), kSig)), kSig);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_normalize_church)->Range(4, 64);

void BM_interp_word(benchmark::State& state) {
  Judgement j = typecheck(church_encode_open(word_of(state.range(0)), kSig), base_type(), kSig,
                          Mode::Planar);
  for (auto _ : state) benchmark::DoNotOptimize(interp_term(j));
}
BENCHMARK(BM_interp_word)->Range(4, 64);

void BM_compile_transducer(benchmark::State& state) {
  LambdaTransducer L = rev_transducer();
  for (auto _ : state) benchmark::DoNotOptimize(compile(L));
}
BENCHMARK(BM_compile_transducer);

void BM_run_two_way(benchmark::State& state) {
  TwoWayTransducer T = compile(rev_transducer());
  std::string w = word_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_word(T, w));
}
BENCHMARK(BM_run_two_way)->Range(8, 256);

void BM_pipeline_extract_compile(benchmark::State& state) {
  TypePtr k1 = lin(base_type(), base_type());
  TermPtr rev = reverse_term(kSig);
  TermPtr chain = rev;
  TypePtr kappa = k1;
  for (int i = 1; i < state.range(0); ++i) {
    chain = pipeline_compose(rev, chain);
    kappa = type_subst(kappa, k1);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(compile(extract_lambda_transducer(chain, kSig, kSig, kappa)));
}
BENCHMARK(BM_pipeline_extract_compile)->DenseRange(1, 8);

}  // namespace

BENCHMARK_MAIN();
