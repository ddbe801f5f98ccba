// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/kernels.hpp"

#include <exception>

#include <omp.h>

namespace axisbeam::kernels {

namespace {

// z(k) = sum_m b_m * alpha_m(k) * g_m(k) * (H1(k) w_ue)_m with b = h2^T w_bs.
cdouble projected_amplitude(const TraceProblem& p, const CVector& projected, std::size_t step)
{
    const UlaGeometry ue = ue_position_at(*p.trajectory, *p.ue_array, step);
    const auto elements = element_positions(ue);
    const RVector mask = gain_mask_for(*p.spec, ue, *p.scatterers);
    const ScattererField& field = *p.scatterers;
    const double lambda = p.radio->wavelength;

    cdouble z{0.0, 0.0};
    for (std::size_t m = 0; m < field.size(); ++m) {
        const double g = mask(static_cast<Eigen::Index>(m));
        if (g == 0.0) {
            continue;
        }
        cdouble radiated{0.0, 0.0};
        for (std::size_t n = 0; n < elements.size(); ++n) {
            radiated += nusw_gain(field.positions[m], elements[n], lambda) * (*p.w_ue)(static_cast<Eigen::Index>(n));
        }
        const double alpha =
            bistatic_alpha(field.positions[m], ue.center, p.bs_array->center, field.monostatic_rcs[m]);
        z += projected(static_cast<Eigen::Index>(m)) * (alpha * g) * radiated;
    }
    return z;
}

} // namespace

std::vector<double> snr_trace_parallel(const TraceProblem& p)
{
    const CVector projected = p.h2->transpose() * (*p.w_bs);
    const auto steps = static_cast<std::ptrdiff_t>(p.trajectory->num_steps);
    std::vector<double> snr(static_cast<std::size_t>(steps));

    std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
    for (std::ptrdiff_t k = 0; k < steps; ++k) {
        try {
            snr[static_cast<std::size_t>(k)] =
                snr_db_from_amplitude(projected_amplitude(p, projected, static_cast<std::size_t>(k)), *p.radio);
        } catch (...) {
#pragma omp critical(axisbeam_trace_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return snr;
}

} // namespace axisbeam::kernels
