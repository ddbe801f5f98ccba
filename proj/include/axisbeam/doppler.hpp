// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "axisbeam/channel.hpp"
#include "axisbeam/geometry.hpp"

namespace axisbeam {

/// Inputs to the worst-case Doppler spread model of a beam with main-lobe
/// half-width `gamma`, pointed at an offset theta from the travel axis.
struct DopplerParams {
    double ue_speed{30.0};
    double carrier_frequency_hz{10e9};
    double light_speed{kLightSpeed};
    double gamma{kPi / 6.0};
    double theta_mov{0.0};

    void validate() const;
    // Maximum Doppler shift v*f_c/c.
    double max_shift_hz() const { return ue_speed / light_speed * carrier_frequency_hz; }
};

enum class LobeBranch { InsideLobe, OutsideLobe };

const char* branch_keyword(LobeBranch b);

struct SpreadResult {
    double theta{0.0};
    double spread_hz{0.0};
    LobeBranch branch{LobeBranch::InsideLobe};
};

// Doppler shift of a path leaving at angle theta from the travel axis.
double doppler_shift(double theta, const DopplerParams& params);

// Spread between the two lobe edges when the travel axis lies outside the
// main lobe. Requires |theta| >= gamma.
double spread_outside(double theta, const DopplerParams& params);

// Spread between the travel axis and the farther lobe edge. Requires
// |theta| <= gamma (the seam itself is accepted so both branches can be
// compared there).
double spread_inside(double theta, const DopplerParams& params);

/// Piecewise worst-case spread over the steerable range |theta| <= pi/2.
/// With gamma = pi/2 the whole sector is inside the lobe.
SpreadResult worst_case_spread(double theta, const DopplerParams& params);

/// d(spread^2)/d(theta), analytic per branch. At theta = 0 the inside branch
/// returns the right derivative. Throws ValidationError at |theta| = gamma.
double squared_spread_gradient(double theta, const DopplerParams& params);

// Closed-form minimizer of the worst-case spread: the travel axis itself.
double optimal_pointing(const DopplerParams& params);

/// Half of the null-to-null beamwidth of an n-element half-wavelength ULA
/// at broadside, asin(2/n).
double ula_halfwidth(std::size_t n);

struct GridOptimum {
    double theta{0.0};
    double spread_hz{0.0};
    double grid_step{0.0};
};

// Exhaustive search over `grid_size` evenly spaced offsets in [-pi/2, pi/2].
GridOptimum grid_argmin(const DopplerParams& params, std::size_t grid_size);

} // namespace axisbeam
