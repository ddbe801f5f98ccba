// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "axisbeam/beamforming.hpp"
#include "axisbeam/channel.hpp"
#include "axisbeam/geometry.hpp"

namespace axisbeam::kernels {

/// Everything a trace kernel needs once the beam and combiner are frozen.
struct TraceProblem {
    const ScattererField* scatterers{nullptr};
    const UlaGeometry* ue_array{nullptr}; // at step 0
    const UlaGeometry* bs_array{nullptr};
    const RadioConfig* radio{nullptr};
    const Trajectory* trajectory{nullptr};
    const BeamSpec* spec{nullptr};
    const CMatrix* h2{nullptr};
    const CVector* w_ue{nullptr};
    const CVector* w_bs{nullptr};
};

// Reference: assembles H at every step and evaluates post_snr_db.
std::vector<double> snr_trace_serial(const TraceProblem& problem);

// Combiner projected onto h2 once; steps distributed with OpenMP. Falls back
// to a single thread when already inside a parallel region.
std::vector<double> snr_trace_parallel(const TraceProblem& problem);

} // namespace axisbeam::kernels
