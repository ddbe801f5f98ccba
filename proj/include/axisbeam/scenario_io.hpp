// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "axisbeam/sim.hpp"

namespace axisbeam {

inline constexpr int kSchemaVersion = 1;

struct OutputOptions {
    std::string trace_csv{"trace.csv"};
    std::string report{"report.json"};
    std::string montecarlo_csv{"montecarlo.csv"};
    std::string doppler_csv{"doppler.csv"};
    bool plot{false};
    std::string plot_svg{"snr.svg"};
};

/// A scenario document: the physical scenario plus where results go.
struct ScenarioFile {
    Scenario scenario;
    OutputOptions output;
};

/// Scenario with every default materialized: 10 GHz carrier, 4-element UE
/// ULA facing +y at the origin, 128-element BS ULA at (10, 0) facing the UE,
/// 30 dB Es/N0, 100 random scatterers, omnidirectional / travel-axis /
/// dominant-eigenmode strategies, 200 steps of lambda/20.
ScenarioFile default_scenario_file();

/// Parses a JSON scenario document. Unknown keys, wrong types, and out of
/// range values throw ValidationError naming the offending key path.
ScenarioFile parse_scenario(const nlohmann::json& doc);
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Fully resolved document; parse_scenario(echo_scenario(f)) reproduces f.
nlohmann::json echo_scenario(const ScenarioFile& file);

} // namespace axisbeam
