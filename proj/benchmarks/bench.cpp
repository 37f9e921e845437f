#include "fermat_torus/farey.hpp"
#include "fermat_torus/geodesic.hpp"
#include "fermat_torus/kinematics.hpp"
#include "fermat_torus/rational.hpp"
#include "fermat_torus/search.hpp"
#include "fermat_torus/winding.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_FareyEnumerate(benchmark::State& state) {
    auto d = state.range(0);
    for (auto _ : state) {
        fermat::FareySequence seq(d);
        std::int64_t count = 1;
        while (seq.advance()) {
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_FareyEnumerate)->Arg(100)->Arg(1000);

void BM_NthRootExact(benchmark::State& state) {
    fermat::Rational r(59049, 1048576);  // (3/16)^5 * 16 ... a non-power mix
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::nth_root_exact(r, 5));
    }
}
BENCHMARK(BM_NthRootExact);

void BM_RationalPoints(benchmark::State& state) {
    auto d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::rational_points_on_curve(2, d));
    }
}
BENCHMARK(BM_RationalPoints)->Arg(50)->Arg(200);

void BM_DiophantineTriples(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::diophantine_triples(3, state.range(0)));
    }
}
BENCHMARK(BM_DiophantineTriples)->Arg(100);

void BM_IntegrateGeodesic(benchmark::State& state) {
    fermat::Torus torus(2.0, 1.0);
    fermat::GeodesicState s0{0.0, 0.7, 0.9, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::integrate_geodesic(torus, s0, 10.0, 1e-3));
    }
}
BENCHMARK(BM_IntegrateGeodesic);

void BM_Acceleration(benchmark::State& state) {
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::acceleration(x, 2.1));
    }
}
BENCHMARK(BM_Acceleration);

void BM_DensityCoverage(benchmark::State& state) {
    fermat::WindingLine line{1.0, 1.4142135623730951};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermat::density_coverage(line, 200.0, 100));
    }
}
BENCHMARK(BM_DensityCoverage);

}  // namespace

BENCHMARK_MAIN();
