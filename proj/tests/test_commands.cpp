// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "axisbeam/commands.hpp"
#include "axisbeam/errors.hpp"
#include "axisbeam/report.hpp"
#include "sim_fixtures.hpp"

using namespace axisbeam;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("axisbeam_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ScenarioFile small_file()
{
    ScenarioFile f = parse_scenario_text(R"({"seed": 3, "bs_array": {"num_elements": 16},
        "trajectory": {"num_steps": 50}, "scatterers": {"count": 20}, "output": {"plot": true}})");
    return f;
}

} // namespace

TEST_CASE("format_number")
{
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-2.5e-7) == "-2.5e-07");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_number(std::nan("")) == "nan");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("trace CSV layout")
{
    SnrTrace a;
    a.strategy = BeamSpec::omnidirectional();
    a.displacements = {0.0};
    a.snr_db = {12.5};
    SnrTrace b = a;
    b.strategy = BeamSpec::steered_at(-kPi / 4);
    b.snr_db = {-std::numeric_limits<double>::infinity()};
    std::ostringstream out;
    write_trace_csv(out, {a, b});
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "step,displacement_m,snr_db_omnidirectional,snr_db_steered_m45deg");
    CHECK(lines[1] == "0,0,12.5,-inf");
}

TEST_CASE("doppler rows")
{
    SUBCASE("full-width lobe has no outside rows and no seam")
    {
        DopplerParams p;
        p.gamma = kHalfPi;
        const auto rows = doppler_rows(p, 101);
        CHECK(rows.size() == 101);
        for (const auto& r : rows) {
            CHECK(r.branch == LobeBranch::InsideLobe);
            CHECK_FALSE(r.seam);
        }
    }
    SUBCASE("seam rows come in equal pairs")
    {
        const DopplerParams p;
        const auto rows = doppler_rows(p, 11);
        CHECK(rows.size() == 15);
        std::vector<DopplerRow> seams;
        for (const auto& r : rows) {
            if (r.seam) {
                seams.push_back(r);
            }
        }
        REQUIRE(seams.size() == 4);
        CHECK(seams[0].theta == doctest::Approx(-p.gamma));
        CHECK(seams[0].spread_hz == doctest::Approx(seams[1].spread_hz).epsilon(1e-12));
        CHECK(seams[0].branch != seams[1].branch);
        CHECK(seams[3].theta == doctest::Approx(p.gamma));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i - 1].theta <= rows[i].theta);
        }
        std::ostringstream out;
        write_doppler_csv(out, rows);
        const auto lines = lines_of(out.str());
        CHECK(lines.size() == 16);
        CHECK(lines[0] == "theta_rad,spread_hz,branch,seam");
    }
}

TEST_CASE("cmd_doppler writes the sweep and finds the travel axis")
{
    const fs::path dir = scratch("doppler");
    DopplerParams p;
    p.theta_mov = 0.2;
    const auto report = cmd_doppler(p, 1001, dir);
    CHECK(std::abs(report.brute_force.theta) <= report.brute_force.grid_step);
    CHECK(report.closed_form_theta_ue == 0.2);
    CHECK(report.outside_rows > 0);
    CHECK(lines_of(slurp(dir / "doppler.csv")).size() == 1 + 1001 + 4);
    const json doc = json::parse(slurp(dir / "doppler_report.json"));
    CHECK(doc["grid_size"] == 1001);
    fs::remove_all(dir);
}

TEST_CASE("cmd_run writes files and reruns byte for byte")
{
    const fs::path a = scratch("run_a");
    const fs::path b = scratch("run_b");
    const ScenarioFile f = small_file();
    const RunReport report = cmd_run(f, a);
    cmd_run(f, b);
    for (const char* name : {"trace.csv", "report.json", "snr.svg"}) {
        REQUIRE(fs::exists(a / name));
        CHECK(slurp(a / name) == slurp(b / name));
    }
    const auto lines = lines_of(slurp(a / "trace.csv"));
    CHECK(lines.size() == 51);
    CHECK(lines[0] == "step,displacement_m,snr_db_omnidirectional,snr_db_travel_axis,snr_db_dominant_eigenmode");
    const json doc = json::parse(slurp(a / "report.json"));
    CHECK(doc["seed"] == 3);
    CHECK(doc["coherence"].size() == 3);
    CHECK(doc["scenario"] == echo_scenario(f));
    CHECK(report.files.size() == 3);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("cmd_run reports an unusable output directory")
{
    const fs::path dir = scratch("blocked");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    CHECK_THROWS_AS(cmd_run(small_file(), dir / "file" / "sub"), IoError);
    fs::remove_all(dir);
}

TEST_CASE("cmd_montecarlo writes the distribution")
{
    const fs::path dir = scratch("mc");
    const ScenarioFile f = small_file();
    const auto report = cmd_montecarlo(f, 4, dir);
    CHECK(report.master_seed == 3);
    const auto summary = lines_of(slurp(dir / "montecarlo.csv"));
    REQUIRE(summary.size() == 4);
    CHECK(summary[0] == "strategy,evaluated,not_reached,failed,median_m,q25_m,q75_m");
    CHECK(summary[1].rfind("omnidirectional,4,", 0) == 0);
    const auto trials = lines_of(slurp(dir / "montecarlo_trials.csv"));
    CHECK(trials.size() == 5);
    CHECK(trials[0] == "trial,seed,failed,omnidirectional_coherence_m,travel_axis_coherence_m,dominant_eigenmode_coherence_m");
    const json doc = json::parse(slurp(dir / "montecarlo_report.json"));
    CHECK(doc["trials"] == 4);
    fs::remove_all(dir);
}
