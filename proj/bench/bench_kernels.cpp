// SPDX-License-Identifier: Apache-2.0
//
// Serial reference versus OpenMP trace kernel on the default scenario
// (128 x 4 array pair, 100 scatterers, 200 steps), plus a Monte Carlo sweep.

#include <benchmark/benchmark.h>

#include "axisbeam/kernels.hpp"
#include "axisbeam/scenario_io.hpp"
#include "axisbeam/sim.hpp"

namespace {

struct Fixture {
    axisbeam::Scenario scenario = axisbeam::default_scenario_file().scenario;
    axisbeam::ScattererField field = axisbeam::resolve_scatterers(scenario);
    axisbeam::CMatrix h2 = axisbeam::build_h2(scenario.bs_array, field, scenario.radio);
    axisbeam::BeamSpec spec = axisbeam::BeamSpec::travel_axis();
    axisbeam::CVector w_ue = axisbeam::ue_weights(spec, scenario.trajectory, scenario.ue_array.num_elements);
    axisbeam::CVector w_bs;

    Fixture()
    {
        const auto mask = axisbeam::gain_mask_for(spec, scenario.ue_array, field);
        const auto snap =
            axisbeam::assemble_channel(h2, field, scenario.ue_array, scenario.bs_array, scenario.radio, mask);
        w_bs = axisbeam::mrc_combiner(snap.h * w_ue).w_bs;
    }

    axisbeam::kernels::TraceProblem problem() const
    {
        return {&field, &scenario.ue_array, &scenario.bs_array, &scenario.radio, &scenario.trajectory,
                &spec,  &h2,                &w_ue,              &w_bs};
    }
};

const Fixture& fixture()
{
    static const Fixture f;
    return f;
}

void BM_TraceSerial(benchmark::State& state)
{
    const auto p = fixture().problem();
    for (auto _ : state) {
        benchmark::DoNotOptimize(axisbeam::kernels::snr_trace_serial(p));
    }
}
BENCHMARK(BM_TraceSerial)->Unit(benchmark::kMillisecond);

void BM_TraceParallel(benchmark::State& state)
{
    const auto p = fixture().problem();
    for (auto _ : state) {
        benchmark::DoNotOptimize(axisbeam::kernels::snr_trace_parallel(p));
    }
}
BENCHMARK(BM_TraceParallel)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state)
{
    const auto execution = state.range(0) == 0 ? axisbeam::Execution::Serial : axisbeam::Execution::Parallel;
    const auto& scenario = fixture().scenario;
    for (auto _ : state) {
        benchmark::DoNotOptimize(axisbeam::monte_carlo(scenario, 8, 1, execution));
    }
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
