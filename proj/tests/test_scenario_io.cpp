// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "axisbeam/errors.hpp"
#include "axisbeam/scenario_io.hpp"

using namespace axisbeam;
using nlohmann::json;

namespace {

std::string message_of(const std::string& text)
{
    try {
        parse_scenario_text(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("an empty document takes every default")
{
    const ScenarioFile f = parse_scenario_text("{}");
    const Scenario& s = f.scenario;
    CHECK(s.radio.carrier_frequency_hz == 10e9);
    CHECK(s.radio.ue_speed == 30);
    CHECK(s.radio.es_over_n0_db == 30);
    CHECK(s.ue_array.num_elements == 4);
    CHECK(s.ue_array.spacing == doctest::Approx(s.radio.wavelength / 2));
    CHECK(s.ue_array.broadside_angle == doctest::Approx(kHalfPi));
    CHECK(s.bs_array.num_elements == 128);
    CHECK(s.bs_array.center == Point2{10, 0});
    CHECK(s.trajectory.num_steps == 200);
    CHECK(s.trajectory.step_length == doctest::Approx(s.radio.wavelength / 20));
    CHECK(s.drop_threshold_db == 3);
    REQUIRE(s.strategies.size() == 3);
    CHECK(s.strategies[1].strategy == Strategy::TravelAxis);
    const auto* field = std::get_if<RandomField>(&s.scatterers);
    REQUIRE(field != nullptr);
    CHECK(field->count == 100);
    CHECK(f.output.trace_csv == "trace.csv");
    CHECK_FALSE(f.output.plot);
    CHECK(echo_scenario(f) == echo_scenario(default_scenario_file()));
}

TEST_CASE("unit alternatives")
{
    const auto f = parse_scenario_text(R"({"ue_array": {"broadside_deg": 45, "spacing_wavelengths": 0.25},
                                           "trajectory": {"theta_mov_rad": 0.1, "step_length_m": 0.001}})");
    CHECK(f.scenario.ue_array.broadside_angle == doctest::Approx(kPi / 4));
    CHECK(f.scenario.ue_array.spacing == doctest::Approx(f.scenario.radio.wavelength / 4));
    CHECK(f.scenario.trajectory.theta_mov == 0.1);
    CHECK(f.scenario.trajectory.step_length == 0.001);
    CHECK(contains(message_of(R"({"ue_array": {"broadside_deg": 45, "broadside_rad": 0.7}})"), "not both"));
}

TEST_CASE("echo round-trips")
{
    for (const char* text :
         {"{}",
          R"({"seed": 11, "ue_array": {"broadside_deg": 45},
              "scatterers": {"kind": "explicit", "positions": [{"x_m": 3, "y_m": 4}, {"x_m": 5, "y_m": 1}], "monostatic_rcs": [0.2, 0.7]},
              "strategies": [{"type": "steered", "theta_ue_deg": -20, "backlobe_suppressed": false}, {"type": "omnidirectional", "label": "omni"}],
              "output": {"plot": true}})"}) {
        const ScenarioFile f = parse_scenario_text(text);
        const json echoed = echo_scenario(f);
        const ScenarioFile again = parse_scenario(echoed);
        CHECK(echo_scenario(again) == echoed);
        CHECK(again.scenario.seed == f.scenario.seed);
        CHECK(again.scenario.strategies.size() == f.scenario.strategies.size());
    }
}

TEST_CASE("explicit scatterers")
{
    const auto f = parse_scenario_text(
        R"({"scatterers": {"kind": "explicit", "positions": [{"x_m": 3, "y_m": 4}], "monostatic_rcs": 0.9}})");
    const auto& field = std::get<ScattererField>(f.scenario.scatterers);
    CHECK(field.positions == std::vector<Point2>{{3, 4}});
    CHECK(field.monostatic_rcs == std::vector<double>{0.9});
    CHECK(contains(message_of(R"({"scatterers": {"kind": "explicit", "positions": [{"x_m": 3}]}})"), "positions[0]"));
    CHECK(contains(message_of(R"({"scatterers": {"kind": "explicit", "positions": [{"x_m": 3, "y_m": 1}], "monostatic_rcs": [1, 2]}})"),
                   "monostatic_rcs"));
    CHECK(contains(message_of(R"({"scatterers": {"kind": "cloud"}})"), "kind"));
}

TEST_CASE("rejections name the offending key")
{
    CHECK(contains(message_of(R"({"radio": {"carrier_ghz": 10}})"), "scenario.radio.carrier_ghz"));
    CHECK(contains(message_of(R"({"colour": 1})"), "unknown key 'scenario.colour'"));
    CHECK(contains(message_of(R"({"ue_array": {"num_elements": "four"}})"), "scenario.ue_array.num_elements"));
    CHECK(contains(message_of(R"({"ue_array": {"num_elements": 0}})"), "at least 1"));
    CHECK(contains(message_of(R"({"trajectory": {"num_steps": -3}})"), "non-negative integer"));
    CHECK(contains(message_of(R"({"strategies": []})"), "must not be empty"));
    CHECK(contains(message_of(R"({"strategies": [{"type": "laser"}]})"), "unknown strategy"));
    CHECK(contains(message_of(R"({"strategies": [{"type": "steered"}]})"), "required"));
    CHECK(contains(message_of(R"({"strategies": [{"type": "steered", "theta_ue_deg": 120}]})"), "forward sector"));
    CHECK(contains(message_of(R"({"strategies": [{"type": "travel_axis"}, {"type": "travel_axis"}]})"), "duplicate"));
    CHECK(contains(message_of(R"({"schema_version": 2})"), "schema_version"));
    CHECK(contains(message_of(R"({"seed": 1,})"), "parse error"));
    CHECK(contains(message_of(R"([1, 2])"), "object"));
}

TEST_CASE("load_scenario separates I/O failures from content errors")
{
    CHECK_THROWS_AS(load_scenario("/nonexistent/dir/scenario.json"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "axisbeam_bad_scenario.json";
    {
        std::ofstream out(path);
        out << R"({"radio": {"es_over_n0_db": "high"}})";
    }
    try {
        load_scenario(path);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(contains(e.what(), path.string()));
        CHECK(contains(e.what(), "scenario.radio.es_over_n0_db"));
    }
    std::filesystem::remove(path);
}
