#include <benchmark/benchmark.h>

#include "minf/oracle.hpp"
#include "minf/parse.hpp"

namespace {

minf::NewtonAtInfinity fixture() {
    return minf::build_gamma_infinity(
        minf::parse_polynomial("x^3+y^3+x^2*y^2"));
}

minf::NewtonAtInfinity fixture3d() {
    return minf::build_gamma_infinity(
        minf::parse_polynomial("x^4+y^4+z^4+x*y*z"));
}

void BM_LatticePoints(benchmark::State& state) {
    const auto newton = fixture3d();
    for (auto _ : state) {
        for (const auto& g : newton.faces_at_infinity)
            benchmark::DoNotOptimize(g.delta.lattice_points(3, false).size());
    }
}
BENCHMARK(BM_LatticePoints);

void BM_ZetaAtInfinity(benchmark::State& state) {
    const auto newton = fixture3d();
    for (auto _ : state) benchmark::DoNotOptimize(minf::zeta_at_infinity(newton));
}
BENCHMARK(BM_ZetaAtInfinity);

void BM_SpectrumViaHodge(benchmark::State& state) {
    const auto newton = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(minf::spectrum_via_hodge(newton));
}
BENCHMARK(BM_SpectrumViaHodge);

void BM_SpectrumViaCones(benchmark::State& state) {
    const auto newton = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(minf::spectrum_via_cones(newton));
}
BENCHMARK(BM_SpectrumViaCones);

void BM_JordanTable(benchmark::State& state) {
    const auto newton = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(minf::assemble_jordan_table(newton));
}
BENCHMARK(BM_JordanTable);

}  // namespace
