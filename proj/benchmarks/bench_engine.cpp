#include <benchmark/benchmark.h>

#include <memory>

#include "hvs/bfs_set.hpp"
#include "hvs/constructions.hpp"
#include "hvs/hypervector_space.hpp"
#include "hvs/oracle.hpp"

namespace {

using namespace hvs;

std::shared_ptr<const HyperVectorSpace> z4() {
    static auto space = [] {
        std::vector<std::vector<Elem>> add(4, std::vector<Elem>(4));
        for (Elem i = 0; i < 4; ++i) {
            for (Elem j = 0; j < 4; ++j) add[i][j] = (i + j) % 4;
        }
        std::vector<std::vector<std::vector<Elem>>> hop = {
            {{0, 2}, {0, 2}, {0, 2}, {0, 2}},
            {{0, 2}, {1, 2, 3}, {0, 2}, {1, 2, 3}},
        };
        return std::make_shared<const HyperVectorSpace>(HyperVectorSpace::make(
            {"0", "1", "2", "3"}, std::move(add), 0, prime_field(2), std::move(hop)));
    }();
    return space;
}

std::shared_ptr<const HyperVectorSpace> z5() {
    static auto space = std::make_shared<const HyperVectorSpace>(
        classical_hvs_from_field(prime_field(5)));
    return space;
}

oracle::GradeGrid grid() {
    return oracle::GradeGrid::make({Rational(0), Rational(1, 2), Rational(1)},
                                   {Rational(-1), Rational(-1, 2), Rational(0)});
}

BipolarFuzzySoftSet sample(std::uint64_t seed) {
    return oracle::random_bfs(z4(), {"p", "q"}, grid(), seed);
}

void BM_CheckAxioms(benchmark::State& state) {
    auto v = z4();
    for (auto _ : state) benchmark::DoNotOptimize(check_axioms(*v));
}
BENCHMARK(BM_CheckAxioms);

void BM_DirectChecker(benchmark::State& state) {
    auto g = sample(1);
    for (auto _ : state) benchmark::DoNotOptimize(is_bfs_hvs_direct(g));
}
BENCHMARK(BM_DirectChecker);

void BM_LevelsChecker(benchmark::State& state) {
    auto g = sample(1);
    for (auto _ : state) benchmark::DoNotOptimize(is_bfs_hvs_levels(g));
}
BENCHMARK(BM_LevelsChecker);

void BM_BfsSum(benchmark::State& state) {
    auto g = sample(1);
    auto h = sample(2);
    for (auto _ : state) benchmark::DoNotOptimize(bfs_sum(g, h));
}
BENCHMARK(BM_BfsSum);

void BM_Span(benchmark::State& state) {
    auto v = z4();
    for (auto _ : state) benchmark::DoNotOptimize(span(*v, {1}));
}
BENCHMARK(BM_Span);

BipolarFuzzySoftSet spike() {
    BipolarFuzzySet g;
    g.pos = {Rational(1, 10), Rational(1, 10), Rational(4, 5), Rational(1, 10)};
    g.neg = {Rational(-1, 10), Rational(-1, 10), Rational(-9, 10), Rational(-1, 10)};
    return BipolarFuzzySoftSet::make(z4(), {"p"}, {g});
}

void BM_Generate(benchmark::State& state) {
    auto f = spike();
    for (auto _ : state) benchmark::DoNotOptimize(generate_bfs_hvs(f));
}
BENCHMARK(BM_Generate);

void BM_BruteForceMinimum(benchmark::State& state) {
    auto f = spike();
    auto levels = oracle::GradeGrid::make({Rational(1, 10), Rational(4, 5)},
                                          {Rational(-9, 10), Rational(-1, 10)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::brute_force_min_bfs_hvs(f, levels));
    }
}
BENCHMARK(BM_BruteForceMinimum);

void BM_SuiteInstanceZ5(benchmark::State& state) {
    auto v = z5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::equivalence_suite(v, 1, 42, grid()));
    }
}
BENCHMARK(BM_SuiteInstanceZ5);

}  // namespace

BENCHMARK_MAIN();
