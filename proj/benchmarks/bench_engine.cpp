#include "eigenpert/covariance.hpp"
#include "eigenpert/instance_gen.hpp"
#include "eigenpert/oracles.hpp"
#include "eigenpert/series.hpp"

#include <benchmark/benchmark.h>

using namespace eigenpert;

namespace {

RandomInstance fixed_instance(Index d) {
    SplitMix64 rng(2024);
    return make_random_instance(rng, d, 0.2, 0.05, DeltaTargetKind::delta_prime, d / 2);
}

void BM_decompose(benchmark::State& state) {
    SplitMix64 rng(7);
    const Matrix a = random_symmetric(rng, state.range(0));
    const SymmetricMatrix m(a);
    for (auto _ : state) {
        SpectralModel model = decompose_symmetric(m);
        benchmark::DoNotOptimize(model.eigenvalues.sum());
    }
}
BENCHMARK(BM_decompose)->Arg(15)->Arg(40)->Arg(100);

void BM_delta(benchmark::State& state) {
    const RandomInstance ri = fixed_instance(state.range(0));
    for (auto _ : state) {
        DeltaReport rep = delta(ri.instance, ri.j);
        benchmark::DoNotOptimize(rep.delta);
    }
}
BENCHMARK(BM_delta)->Arg(15)->Arg(40);

void BM_series_enumerative(benchmark::State& state) {
    const RandomInstance ri = fixed_instance(15);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Matrix c = series_coefficient_projection(ri.instance, ri.j, n, SeriesPath::enumerative);
        benchmark::DoNotOptimize(c.norm());
    }
}
BENCHMARK(BM_series_enumerative)->DenseRange(3, 7);

void BM_series_generating(benchmark::State& state) {
    const RandomInstance ri = fixed_instance(15);
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesExpansion se = partial_sums(ri.instance, ri.j, p);
        benchmark::DoNotOptimize(se.eval_partial_sum);
    }
}
BENCHMARK(BM_series_generating)->Arg(8)->Arg(16)->Arg(30);

void BM_contour_projector(benchmark::State& state) {
    const RandomInstance ri = fixed_instance(15);
    const SymmetricMatrix sigma(reconstruct(ri.instance.base));
    const ContourSpec spec = default_contour(ri.instance.base, ri.j, state.range(0));
    for (auto _ : state) {
        ContourResult r = contour_projector(sigma, spec);
        benchmark::DoNotOptimize(r.imag_residual);
    }
}
BENCHMARK(BM_contour_projector)->Arg(64)->Arg(256);

void BM_covariance_replicate(benchmark::State& state) {
    DecayModel dm = build_decay_model(1.0, 40);
    const SpectralModel s = dm.spectral();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Matrix data = sample_data(s, SamplerSpec{Dist::gaussian, 500, seed++});
        SymmetricMatrix cov = empirical_covariance(data);
        SpectralModel hat = decompose_symmetric(cov);
        benchmark::DoNotOptimize(hat.eigenvalue(1));
    }
}
BENCHMARK(BM_covariance_replicate);

} // namespace

BENCHMARK_MAIN();
