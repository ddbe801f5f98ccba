// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "axisbeam/doppler.hpp"
#include "axisbeam/sim.hpp"

namespace axisbeam {

// Locale-independent shortest round-trip text for a double ("inf", "-inf", "nan" for non-finite).
std::string format_number(double value);

// Header: step,displacement_m,snr_db_<name>[,...]
void write_trace_csv(std::ostream& out, const std::vector<SnrTrace>& traces);

struct DopplerRow {
    double theta{0.0};
    double spread_hz{0.0};
    LobeBranch branch{LobeBranch::InsideLobe};
    bool seam{false};
};

/// `grid_size` evenly spaced offsets over [-pi/2, pi/2], plus, when
/// gamma < pi/2, one row per branch at each seam +-gamma. Sorted by theta.
std::vector<DopplerRow> doppler_rows(const DopplerParams& params, std::size_t grid_size);

// Header: theta_rad,spread_hz,branch,seam
void write_doppler_csv(std::ostream& out, const std::vector<DopplerRow>& rows);

// Header: strategy,evaluated,not_reached,failed,median_m,q25_m,q75_m
void write_montecarlo_csv(std::ostream& out, const MonteCarloReport& report);

// Header: trial,seed,failed,<name>_coherence_m,...
void write_montecarlo_trials_csv(std::ostream& out, const MonteCarloReport& report,
                                 const std::vector<std::string>& names);

// Static line plot of SNR versus displacement, one polyline per strategy.
void write_snr_svg(std::ostream& out, const std::vector<SnrTrace>& traces);

} // namespace axisbeam
