// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/doppler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "axisbeam/errors.hpp"

namespace axisbeam {

namespace {

constexpr double kSectorSlack = 1e-12;

void require_steerable(double theta)
{
    if (!(std::abs(theta) <= kHalfPi + kSectorSlack)) {
        throw ValidationError("pointing offset " + std::to_string(theta) + " rad outside [-pi/2, pi/2]");
    }
}

// Whole steerable range is inside the lobe.
bool full_width(const DopplerParams& p) { return p.gamma >= kHalfPi; }

double inside_formula(double theta, const DopplerParams& p)
{
    return p.max_shift_hz() * (1.0 - std::cos(std::abs(theta) + p.gamma));
}

} // namespace

const char* branch_keyword(LobeBranch b)
{
    return b == LobeBranch::InsideLobe ? "inside" : "outside";
}

void DopplerParams::validate() const
{
    if (!(gamma > 0.0) || gamma > kHalfPi + kSectorSlack) {
        throw ValidationError("main-lobe half-width must lie in (0, pi/2]");
    }
    if (!(ue_speed > 0.0) || !(carrier_frequency_hz > 0.0) || !(light_speed > 0.0)) {
        throw ValidationError("speeds and carrier frequency must be positive");
    }
    if (!std::isfinite(theta_mov)) {
        throw ValidationError("theta_mov must be finite");
    }
}

double doppler_shift(double theta, const DopplerParams& params)
{
    return params.max_shift_hz() * std::cos(theta);
}

double spread_outside(double theta, const DopplerParams& params)
{
    params.validate();
    if (std::abs(theta) < params.gamma) {
        throw ValidationError("travel axis inside the main lobe: |theta| < gamma");
    }
    return 2.0 * params.max_shift_hz() * std::abs(std::sin(theta) * std::sin(params.gamma));
}

double spread_inside(double theta, const DopplerParams& params)
{
    params.validate();
    if (std::abs(theta) > params.gamma && !(full_width(params) && std::abs(theta) <= kHalfPi + kSectorSlack)) {
        throw ValidationError("travel axis outside the main lobe: |theta| > gamma");
    }
    return inside_formula(theta, params);
}

SpreadResult worst_case_spread(double theta, const DopplerParams& params)
{
    params.validate();
    require_steerable(theta);
    if (std::abs(theta) < params.gamma || full_width(params)) {
        return {theta, inside_formula(theta, params), LobeBranch::InsideLobe};
    }
    return {theta, spread_outside(theta, params), LobeBranch::OutsideLobe};
}

double squared_spread_gradient(double theta, const DopplerParams& params)
{
    params.validate();
    require_steerable(theta);
    const double a = std::abs(theta);
    if (a == params.gamma) {
        throw ValidationError("spread gradient undefined on the branch seam |theta| = gamma");
    }
    const double k = params.max_shift_hz();
    if (a > params.gamma) {
        const double s = std::sin(params.gamma);
        return 4.0 * k * k * s * s * std::sin(2.0 * theta);
    }
    // Farther edge is at |theta| + gamma; mirror the theta >= 0 form for negative offsets.
    const double edge = a + params.gamma;
    const double h = std::sin(0.5 * edge);
    const double g = 4.0 * k * k * h * h * std::sin(edge);
    return theta < 0.0 ? -g : g;
}

double optimal_pointing(const DopplerParams& params)
{
    params.validate();
    return params.theta_mov;
}

double ula_halfwidth(std::size_t n)
{
    if (n < 2) {
        throw ValidationError("beam half-width needs at least two elements");
    }
    return std::asin(2.0 / static_cast<double>(n));
}

GridOptimum grid_argmin(const DopplerParams& params, std::size_t grid_size)
{
    params.validate();
    if (grid_size < 2) {
        throw ValidationError("grid needs at least two points");
    }
    const double step = kPi / static_cast<double>(grid_size - 1);
    GridOptimum best{0.0, std::numeric_limits<double>::infinity(), step};
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double theta = std::min(kHalfPi, -kHalfPi + step * static_cast<double>(i));
        const double spread = worst_case_spread(theta, params).spread_hz;
        if (spread < best.spread_hz) {
            best.theta = theta;
            best.spread_hz = spread;
        }
    }
    return best;
}

} // namespace axisbeam
