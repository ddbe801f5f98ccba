// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/kernels.hpp"

namespace axisbeam::kernels {

std::vector<double> snr_trace_serial(const TraceProblem& p)
{
    const std::size_t steps = p.trajectory->num_steps;
    std::vector<double> snr(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const UlaGeometry ue = ue_position_at(*p.trajectory, *p.ue_array, k);
        const RVector mask = gain_mask_for(*p.spec, ue, *p.scatterers);
        const ChannelSnapshot snap = assemble_channel(*p.h2, *p.scatterers, ue, *p.bs_array, *p.radio, mask,
                                                      p.trajectory->displacement(k));
        snr[k] = post_snr_db(*p.w_bs, snap.h, *p.w_ue, *p.radio);
    }
    return snr;
}

} // namespace axisbeam::kernels
