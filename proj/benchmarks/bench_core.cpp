#include <benchmark/benchmark.h>

#include "nilcommute/algebra.hpp"
#include "nilcommute/jordan.hpp"
#include "nilcommute/rng.hpp"
#include "nilcommute/witnesses.hpp"

using namespace nilcommute;

namespace {

Matrix random_square(Rng& rng, const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.scalar(f);
    return m;
}

void BM_RankQ(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(mix_seed(1, n));
    Matrix m = random_square(rng, FieldSpec::rationals(), n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankFp(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(mix_seed(2, n));
    Matrix m = random_square(rng, FieldSpec::prime_field(101), n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_CentralizerBasis(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    // the most unbalanced type of n dominates the kernel solve
    std::vector<std::size_t> parts;
    for (std::size_t r = n; r > 0; r = r / 2) parts.push_back(r - r / 2);
    Matrix j = jordan_matrix(Partition(parts), FieldSpec::prime_field(101));
    for (auto _ : state) benchmark::DoNotOptimize(centralizer_basis(j));
}

void BM_AlgebraDimClosure(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    NilTuple t = gerstenhaber_quadruple(n, FieldSpec::prime_field(101));
    for (auto _ : state) benchmark::DoNotOptimize(algebra_dim_closure(t));
}

BENCHMARK(BM_RankQ)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_RankFp)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_CentralizerBasis)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_AlgebraDimClosure)->Arg(6)->Arg(9)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
