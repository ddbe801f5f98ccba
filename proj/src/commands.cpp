// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/commands.hpp"

#include <fstream>
#include <sstream>

#include "axisbeam/errors.hpp"
#include "axisbeam/report.hpp"

namespace axisbeam {

using nlohmann::json;

namespace {

void ensure_directory(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("write to " + path.string() + " failed");
    }
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

json RunReport::to_json() const
{
    json strategies = json::array();
    for (const CoherenceEntry& c : coherence) {
        strategies.push_back({{"name", c.strategy},
                              {"snr0_db", finite_or_null(c.snr0_db)},
                              {"coherence_distance_m", c.coherence_distance_m ? json(*c.coherence_distance_m) : json(nullptr)},
                              {"reached", c.coherence_distance_m.has_value()}});
    }
    return {{"tool_version", tool_version}, {"seed", seed},       {"scenario", scenario},
            {"coherence", strategies},      {"files", files}};
}

std::vector<CoherenceEntry> coherence_entries(const std::vector<SnrTrace>& traces, double threshold_db)
{
    std::vector<CoherenceEntry> out;
    for (const SnrTrace& t : traces) {
        out.push_back({t.strategy.name(), t.snr0_db, coherence_distance(t, threshold_db)});
    }
    return out;
}

RunReport cmd_run(const ScenarioFile& file, const std::filesystem::path& out_dir)
{
    const Scenario& s = file.scenario;
    const auto traces = run_trajectory(s);
    ensure_directory(out_dir);

    RunReport report;
    report.scenario = echo_scenario(file);
    report.seed = s.seed;
    report.coherence = coherence_entries(traces, s.drop_threshold_db);

    std::ostringstream csv;
    write_trace_csv(csv, traces);
    write_file(out_dir / file.output.trace_csv, csv.str());
    report.files.push_back(file.output.trace_csv);

    if (file.output.plot) {
        std::ostringstream svg;
        write_snr_svg(svg, traces);
        write_file(out_dir / file.output.plot_svg, svg.str());
        report.files.push_back(file.output.plot_svg);
    }
    report.files.push_back(file.output.report);
    write_file(out_dir / file.output.report, report.to_json().dump(2) + "\n");
    return report;
}

json DopplerReport::to_json() const
{
    return {{"tool_version", kToolVersion},
            {"params",
             {{"ue_speed_mps", params.ue_speed},
              {"carrier_frequency_hz", params.carrier_frequency_hz},
              {"light_speed_mps", params.light_speed},
              {"gamma_rad", params.gamma},
              {"theta_mov_rad", params.theta_mov}}},
            {"grid_size", grid_size},
            {"closed_form",
             {{"theta_ue_rad", closed_form_theta_ue},
              {"offset_rad", 0.0},
              {"spread_hz", worst_case_spread(0.0, params).spread_hz}}},
            {"brute_force",
             {{"offset_rad", brute_force.theta},
              {"theta_ue_rad", params.theta_mov + brute_force.theta},
              {"spread_hz", brute_force.spread_hz},
              {"grid_step_rad", brute_force.grid_step}}},
            {"outside_rows", outside_rows}};
}

DopplerParams doppler_params_for(const Scenario& scenario)
{
    DopplerParams p;
    p.ue_speed = scenario.radio.ue_speed;
    p.carrier_frequency_hz = scenario.radio.carrier_frequency_hz;
    p.light_speed = scenario.radio.light_speed;
    p.gamma = scenario.main_lobe_halfwidth;
    p.theta_mov = scenario.trajectory.theta_mov;
    return p;
}

DopplerReport cmd_doppler(const DopplerParams& params, std::size_t grid_size, const std::filesystem::path& out_dir,
                          const OutputOptions& output)
{
    const auto rows = doppler_rows(params, grid_size);
    DopplerReport report;
    report.params = params;
    report.grid_size = grid_size;
    report.closed_form_theta_ue = optimal_pointing(params);
    report.brute_force = grid_argmin(params, grid_size);
    for (const DopplerRow& r : rows) {
        report.outside_rows += (!r.seam && r.branch == LobeBranch::OutsideLobe) ? 1 : 0;
    }

    ensure_directory(out_dir);
    std::ostringstream csv;
    write_doppler_csv(csv, rows);
    write_file(out_dir / output.doppler_csv, csv.str());
    write_file(out_dir / "doppler_report.json", report.to_json().dump(2) + "\n");
    return report;
}

MonteCarloReport cmd_montecarlo(const ScenarioFile& file, std::size_t trials, const std::filesystem::path& out_dir)
{
    const Scenario& s = file.scenario;
    const MonteCarloReport report = monte_carlo(s, trials, s.seed);
    ensure_directory(out_dir);

    std::vector<std::string> names;
    for (const BeamSpec& spec : s.strategies) {
        names.push_back(spec.name());
    }
    std::ostringstream summary;
    write_montecarlo_csv(summary, report);
    write_file(out_dir / file.output.montecarlo_csv, summary.str());

    std::ostringstream per_trial;
    write_montecarlo_trials_csv(per_trial, report, names);
    write_file(out_dir / "montecarlo_trials.csv", per_trial.str());

    json strategies = json::array();
    for (const StrategySummary& st : report.summary) {
        strategies.push_back({{"name", st.name},
                              {"evaluated", st.evaluated},
                              {"not_reached", st.not_reached},
                              {"median_m", finite_or_null(st.median)},
                              {"q25_m", finite_or_null(st.q25)},
                              {"q75_m", finite_or_null(st.q75)}});
    }
    json doc{{"tool_version", kToolVersion},
             {"master_seed", report.master_seed},
             {"trials", report.trials},
             {"failed", report.failed},
             {"seed_derivation", "splitmix64(master_seed + (trial + 1) * 0x9E3779B97F4A7C15)"},
             {"scenario", echo_scenario(file)},
             {"summary", strategies},
             {"files", {file.output.montecarlo_csv, "montecarlo_trials.csv", "montecarlo_report.json"}}};
    write_file(out_dir / "montecarlo_report.json", doc.dump(2) + "\n");
    return report;
}

} // namespace axisbeam
