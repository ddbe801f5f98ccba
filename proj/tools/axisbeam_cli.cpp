// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "axisbeam/commands.hpp"
#include "axisbeam/errors.hpp"
#include "axisbeam/report.hpp"
#include "axisbeam/scenario_io.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 2, kRuntime = 3, kIo = 4 };

struct Options {
    std::string scenario;
    std::string out{"out"};
    std::size_t trials{100};
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold_db;
    std::size_t grid{10001};
};

axisbeam::ScenarioFile resolve(const Options& opt)
{
    axisbeam::ScenarioFile file =
        opt.scenario.empty() ? axisbeam::default_scenario_file() : axisbeam::load_scenario(opt.scenario);
    if (opt.seed) {
        file.scenario.seed = *opt.seed;
    }
    if (opt.threshold_db) {
        file.scenario.drop_threshold_db = *opt.threshold_db;
    }
    file.scenario.validate();
    return file;
}

void print_run(const axisbeam::RunReport& report, const std::filesystem::path& out)
{
    for (const auto& c : report.coherence) {
        std::cout << c.strategy << ": snr0 " << axisbeam::format_number(c.snr0_db) << " dB, coherence distance ";
        if (c.coherence_distance_m) {
            std::cout << axisbeam::format_number(*c.coherence_distance_m * 1e3) << " mm\n";
        } else {
            std::cout << "not reached\n";
        }
    }
    std::cout << "wrote " << (out / report.files.front()).string() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Travel-axis UE beamforming link simulator"};
    app.set_version_flag("--version", std::string(axisbeam::kToolVersion));
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool scenario_required) {
        auto* s = cmd->add_option("--scenario", opt.scenario, "Scenario JSON file");
        if (scenario_required) {
            s->required();
        }
        s->check(CLI::ExistingFile);
    };

    CLI::App* run = app.add_subcommand("run", "Simulate one trajectory and write the SNR trace");
    add_common(run, false);
    run->add_option("--out", opt.out, "Output directory");
    run->add_option("--seed", opt.seed, "Random-field seed override");
    run->add_option("--threshold-db", opt.threshold_db, "SNR drop defining the coherence distance");

    CLI::App* doppler = app.add_subcommand("doppler", "Export worst-case Doppler spread versus pointing offset");
    add_common(doppler, false);
    doppler->add_option("--out", opt.out, "Output directory");
    doppler->add_option("--grid", opt.grid, "Number of offsets over [-pi/2, pi/2]")->check(CLI::Range(2, 100000000));

    CLI::App* mc = app.add_subcommand("montecarlo", "Coherence-distance distribution over random scatterer fields");
    add_common(mc, false);
    mc->add_option("--out", opt.out, "Output directory");
    mc->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
    mc->add_option("--seed", opt.seed, "Master seed override");
    mc->add_option("--threshold-db", opt.threshold_db, "SNR drop defining the coherence distance");

    CLI::App* validate = app.add_subcommand("validate", "Check a scenario file and print it with defaults filled in");
    add_common(validate, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (*run) {
            const auto file = resolve(opt);
            print_run(axisbeam::cmd_run(file, opt.out), opt.out);
        } else if (*doppler) {
            const auto file = resolve(opt);
            const auto report = axisbeam::cmd_doppler(axisbeam::doppler_params_for(file.scenario), opt.grid,
                                                      opt.out, file.output);
            std::cout << "closed-form optimum theta_ue " << axisbeam::format_number(report.closed_form_theta_ue)
                      << " rad; grid argmin offset " << axisbeam::format_number(report.brute_force.theta)
                      << " rad (step " << axisbeam::format_number(report.brute_force.grid_step) << ")\n";
        } else if (*mc) {
            const auto file = resolve(opt);
            const auto report = axisbeam::cmd_montecarlo(file, opt.trials, opt.out);
            for (const auto& s : report.summary) {
                std::cout << s.name << ": median " << axisbeam::format_number(s.median * 1e3) << " mm (q25 "
                          << axisbeam::format_number(s.q25 * 1e3) << ", q75 " << axisbeam::format_number(s.q75 * 1e3)
                          << "), not reached " << s.not_reached << '/' << s.evaluated << '\n';
            }
            if (report.failed) {
                std::cout << report.failed << " trial(s) failed on degenerate geometry\n";
            }
        } else if (*validate) {
            const auto file = resolve(opt);
            std::cout << axisbeam::echo_scenario(file).dump(2) << '\n';
        }
    } catch (const axisbeam::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const axisbeam::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
