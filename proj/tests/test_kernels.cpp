// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "axisbeam/errors.hpp"
#include "axisbeam/kernels.hpp"
#include "axisbeam/sim.hpp"
#include "sim_fixtures.hpp"
#include "test_support.hpp"

using namespace axisbeam;

TEST_CASE("parallel trace kernel matches the serial reference")
{
    testing::Rng rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        Scenario sc = testing::small_scenario(rng.integer(1, 8), rng.integer(1, 64), ScattererField{}, 150);
        sc.ue_array.broadside_angle = rng.uniform(0.2, 1.4);
        sc.trajectory.theta_mov = rng.uniform(-kHalfPi, kHalfPi);
        sc.scatterers = testing::random_field(rng.integer(1, 60), sc);
        sc.seed = trial;
        sc.strategies.push_back(BeamSpec::steered_at(rng.uniform(-1.5, 1.5)));
        BeamSpec unmasked = BeamSpec::travel_axis();
        unmasked.backlobe_suppressed = false;
        sc.strategies.push_back(unmasked);

        const auto serial = run_trajectory(sc, Execution::Serial);
        const auto parallel = run_trajectory(sc, Execution::Parallel);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t s = 0; s < serial.size(); ++s) {
            REQUIRE(serial[s].snr_db.size() == parallel[s].snr_db.size());
            for (std::size_t k = 0; k < serial[s].snr_db.size(); ++k) {
                const double a = serial[s].snr_db[k];
                const double b = parallel[s].snr_db[k];
                if (std::isinf(a) || std::isinf(b)) {
                    CHECK(a == b);
                } else {
                    CHECK(std::abs(a - b) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("kernels agree on a hand-built problem")
{
    Scenario sc = testing::small_scenario(4, 8, ScattererField::with_shared_rcs({{2, 5}, {6, 1}, {-1, 3}}, 0.5), 64);
    const ScattererField field = resolve_scatterers(sc);
    const CMatrix h2 = build_h2(sc.bs_array, field, sc.radio);
    const BeamSpec spec = BeamSpec::steered_at(0.25);
    const CVector w_ue = ue_weights(spec, sc.trajectory, 4);
    const CVector w_bs = testing::Rng(52).unit_complex_vector(8); // any combiner works for the kernels
    const kernels::TraceProblem p{&field, &sc.ue_array, &sc.bs_array, &sc.radio, &sc.trajectory, &spec, &h2, &w_ue, &w_bs};
    const auto a = kernels::snr_trace_serial(p);
    const auto b = kernels::snr_trace_parallel(p);
    REQUIRE(a.size() == 64);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(std::abs(a[k] - b[k]) < 1e-9);
    }
}

TEST_CASE("parallel kernel surfaces geometry failures")
{
    // The UE walks straight through a scatterer two wavelengths ahead.
    Scenario sc = testing::small_scenario(1, 4, ScattererField{}, 80);
    const double lambda = sc.radio.wavelength;
    const ScattererField field = ScattererField::with_shared_rcs({{0.0, 2 * lambda}}, 0.5);
    const CMatrix h2 = build_h2(sc.bs_array, field, sc.radio);
    const BeamSpec spec = BeamSpec::omnidirectional();
    const CVector w_ue = CVector::Ones(1);
    const CVector w_bs = CVector::Ones(4) / 2.0;
    const kernels::TraceProblem p{&field, &sc.ue_array, &sc.bs_array, &sc.radio, &sc.trajectory, &spec, &h2, &w_ue, &w_bs};
    CHECK_THROWS_AS(kernels::snr_trace_serial(p), GeometryError);
    CHECK_THROWS_AS(kernels::snr_trace_parallel(p), GeometryError);
}
