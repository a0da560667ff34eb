#include <benchmark/benchmark.h>

#include "fibcat/algebra.hpp"
#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/street.hpp"
#include "fibcat/transport.hpp"

using namespace fibcat;

static void BM_phi_chain(benchmark::State& state) {
    const CatRef c = chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(phi(c).apex->num_morphisms());
    state.counters["morphisms"] = static_cast<double>(phi(c).apex->num_morphisms());
}
BENCHMARK(BM_phi_chain)->DenseRange(2, 5);

static void BM_L_pow(benchmark::State& state) {
    const Bundle& p = standard_corpus().bundle("cod");
    for (auto _ : state) benchmark::DoNotOptimize(L_pow(p, static_cast<int>(state.range(0))).total()->num_objects());
}
BENCHMARK(BM_L_pow)->DenseRange(1, 3);

static void BM_chevalley_corpus(benchmark::State& state) {
    const Corpus& c = standard_corpus();
    for (auto _ : state)
        for (const auto& nb : c.bundles) benchmark::DoNotOptimize(is_opfibration(nb.bundle).holds);
}
BENCHMARK(BM_chevalley_corpus);

static void BM_lift_oracle_corpus(benchmark::State& state) {
    const Corpus& c = standard_corpus();
    for (auto _ : state)
        for (const auto& nb : c.bundles) benchmark::DoNotOptimize(direct_supine_oracle(nb.bundle).holds);
}
BENCHMARK(BM_lift_oracle_corpus);

static void BM_monad_laws(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_L_monad(standard_corpus()).ok());
}
BENCHMARK(BM_monad_laws)->Unit(benchmark::kMillisecond);

static void BM_transition_fiber_power(benchmark::State& state) {
    const auto t = fiber_power(2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_transition(t, standard_corpus()).ok());
}
BENCHMARK(BM_transition_fiber_power)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
