#include <benchmark/benchmark.h>

#include <random>

#include "mcq/cyclotomic.hpp"

using mcq::CycNum;
using mcq::Rational;

namespace {

CycNum random_cyc(std::mt19937& rng, unsigned M) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::vector<Rational> poly(mcq::euler_phi(M), Rational(0));
    for (auto& c : poly) c = mcq::rational(num(rng), den(rng));
    return CycNum::from_polynomial(M, poly);
}

void BM_CycMul(benchmark::State& state) {
    unsigned M = static_cast<unsigned>(state.range(0));
    std::mt19937 rng(42);
    CycNum a = random_cyc(rng, M), b = random_cyc(rng, M);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(63)->Arg(342);

void BM_CycInverse(benchmark::State& state) {
    unsigned M = static_cast<unsigned>(state.range(0));
    std::mt19937 rng(7);
    CycNum a = random_cyc(rng, M);
    if (a.is_zero()) a = CycNum::one(M);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(63)->Arg(342);

void BM_Monomial(benchmark::State& state) {
    unsigned M = static_cast<unsigned>(state.range(0));
    mcq::CycField::get(M);  // warm the reduction rows
    long e = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(CycNum::monomial(M, Rational(1, 3), e));
        e = (e + 11) % M;
    }
}
BENCHMARK(BM_Monomial)->Arg(63)->Arg(342);

}  // namespace

BENCHMARK_MAIN();
