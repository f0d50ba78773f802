// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <primediv/class_group.hpp>
#include <primediv/conductor.hpp>
#include <primediv/irreducible.hpp>

using namespace primediv;

namespace
{

void BM_IrreduciblesParallel(benchmark::State &state)
{
    const auto field = Field::of_order(2);
    const CoefficientPrefix one(field, {1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(irreducibles_with_prefix(field, static_cast<unsigned>(state.range(0)), one));
    }
}

void BM_IrreduciblesSerial(benchmark::State &state)
{
    const auto field = Field::of_order(2);
    const CoefficientPrefix one(field, {1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(irreducibles_with_prefix_serial(field, static_cast<unsigned>(state.range(0)), one));
    }
}

AffineMonoid kainrath_monoid()
{
    return AffineMonoid::create(2, Split{2, 0}, {{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}});
}

void BM_ConductorScanParallel(benchmark::State &state)
{
    const auto s = kainrath_monoid();
    const auto cert = std::get<CicCertificate>(cic_verify(s));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conductor_points(s, cert, state.range(0)));
    }
}

void BM_ConductorFixedPointSerial(benchmark::State &state)
{
    const auto s = kainrath_monoid();
    const auto cert = std::get<CicCertificate>(cic_verify(s));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conductor_points_fixed_point(s, cert, state.range(0)));
    }
}

void BM_CensusParallel(benchmark::State &state)
{
    const ClassGroup g(NumericalMonoid::ordinary(static_cast<unsigned>(state.range(0))), Field::of_order(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(order_census(g));
    }
}

void BM_CensusSerial(benchmark::State &state)
{
    const ClassGroup g(NumericalMonoid::ordinary(static_cast<unsigned>(state.range(0))), Field::of_order(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(order_census_serial(g));
    }
}

} // namespace

BENCHMARK(BM_IrreduciblesParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IrreduciblesSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConductorScanParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConductorFixedPointSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
