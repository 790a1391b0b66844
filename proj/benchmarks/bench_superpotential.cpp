#include <benchmark/benchmark.h>

#include "mcq/superpotential.hpp"

using namespace mcq;

namespace {

const McKayQuiver& qg21() {
    static McKayQuiver data = mckay_metacyclic(rep_system_with(
        MetacyclicParams::create(21, 4, 3, 0), {0, 4, 7, 8, 9, 12, 13, 14, 17}));
    return data;
}

void BM_Coefficient(benchmark::State& state) {
    const McKayQuiver& data = qg21();
    Path p = parse_path(data.quiver, "x^{(0)7}_{2,0} x^{8(0)}_{0,0} x^12_{0,1}");
    for (auto _ : state) benchmark::DoNotOptimize(coefficient(data, p));
}
BENCHMARK(BM_Coefficient);

void BM_SuperpotentialM21(benchmark::State& state) {
    const McKayQuiver& data = qg21();
    for (auto _ : state) benchmark::DoNotOptimize(superpotential(data));
}
BENCHMARK(BM_SuperpotentialM21);

void BM_SuperpotentialMhat32(benchmark::State& state) {
    RepSystem reps = choose_representatives(family_Mhat(3, 2));
    McKayQuiver data = mckay_metacyclic(reps, true);
    for (auto _ : state) benchmark::DoNotOptimize(superpotential(data));
}
BENCHMARK(BM_SuperpotentialMhat32)->Unit(benchmark::kMillisecond);

void BM_CharacterInnerProduct(benchmark::State& state) {
    RepSystem reps = choose_representatives(family_Mhat(3, 2));
    std::vector<Irrep> irr = irreps(reps, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            character_inner_product(reps, irr[0], irr[1], TensorFactor::Natural, true));
}
BENCHMARK(BM_CharacterInnerProduct);

}  // namespace

BENCHMARK_MAIN();
