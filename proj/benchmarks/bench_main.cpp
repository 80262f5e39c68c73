#include <benchmark/benchmark.h>

#include <sstream>

#include "fatou/holonomy.hpp"
#include "fatou/scenario.hpp"
#include "fatou/transverse_forms.hpp"

using namespace fatou;

namespace {

const Complex I{0.0, 1.0};

void BM_LoopMultiplier(benchmark::State& state) {
    const double tol = std::pow(10.0, -state.range(0));
    const LinearFoliation F = affine_foliation(I);
    holonomy::LeafPath lp;
    lp.path = holonomy::BasePath::circle(1.0);
    lp.start_fiber = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(holonomy::integrate_leaf(F, lp, tol));
    }
}
BENCHMARK(BM_LoopMultiplier)->Arg(6)->Arg(9)->Arg(12);

void BM_Eq215Grid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                acc += std::abs(compact::eq215_indicator(
                    I, 1.0, {2.0 * i / n, 2.0 * j / n, ChartId::XY}));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Eq215Grid)->Arg(200)->Arg(400);

void BM_LowerBoundEstimate(benchmark::State& state) {
    const LinearFoliation F = affine_foliation(0.5);
    const forms::TransverseForm phi = forms::make_eta(0.5);
    const forms::PointSampler sampler = [](SampleStream& s) -> std::optional<AffinePoint2> {
        const AffinePoint2 q{s.disc(0.0, 2.0), s.disc(0.0, 2.0), ChartId::XY};
        const double n2 = std::norm(q.c1) + std::norm(q.c2);
        if (n2 < 0.25 || n2 > 4.0) return std::nullopt;
        return q;
    };
    for (auto _ : state) {
        SampleStream s(7);
        benchmark::DoNotOptimize(forms::lower_bound_estimate(
            phi, F, sampler, ReferenceMetricId::Euclidean2, static_cast<int>(state.range(0)), s));
    }
}
BENCHMARK(BM_LowerBoundEstimate)->Arg(4000)->Arg(16000);

void BM_GridExportCsv(benchmark::State& state) {
    scenario::GridSpec spec;
    spec.quantity = scenario::GridQuantity::FValue;
    spec.resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::ostringstream os;
        scenario::grid_export(os, spec);
        benchmark::DoNotOptimize(os.str().size());
    }
}
BENCHMARK(BM_GridExportCsv)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
