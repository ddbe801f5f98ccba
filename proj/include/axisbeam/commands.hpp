// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axisbeam/doppler.hpp"
#include "axisbeam/scenario_io.hpp"
#include "axisbeam/sim.hpp"

namespace axisbeam {

inline constexpr const char* kToolVersion = AXISBEAM_VERSION;

struct CoherenceEntry {
    std::string strategy;
    double snr0_db{0.0};
    std::optional<double> coherence_distance_m;
};

struct RunReport {
    nlohmann::json scenario;
    std::vector<CoherenceEntry> coherence;
    std::vector<std::string> files;
    std::string tool_version{kToolVersion};
    std::uint64_t seed{0};

    nlohmann::json to_json() const;
};

std::vector<CoherenceEntry> coherence_entries(const std::vector<SnrTrace>& traces, double threshold_db);

/// Runs one trajectory and writes the trace CSV, the JSON report, and the
/// optional SVG plot into out_dir.
RunReport cmd_run(const ScenarioFile& file, const std::filesystem::path& out_dir);

struct DopplerReport {
    DopplerParams params;
    std::size_t grid_size{0};
    double closed_form_theta_ue{0.0};
    GridOptimum brute_force{};
    std::size_t outside_rows{0};

    nlohmann::json to_json() const;
};

// Doppler parameters implied by a scenario (UE speed, carrier, half-width, travel angle).
DopplerParams doppler_params_for(const Scenario& scenario);

DopplerReport cmd_doppler(const DopplerParams& params, std::size_t grid_size, const std::filesystem::path& out_dir,
                          const OutputOptions& output = {});

/// Monte Carlo sweep over random fields; writes the per-strategy
/// distribution CSV, the per-trial CSV, and a JSON report.
MonteCarloReport cmd_montecarlo(const ScenarioFile& file, std::size_t trials, const std::filesystem::path& out_dir);

} // namespace axisbeam
