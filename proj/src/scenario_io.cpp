// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "axisbeam/doppler.hpp"
#include "axisbeam/errors.hpp"

namespace axisbeam {

using nlohmann::json;

namespace {

constexpr double kDegToRad = kPi / 180.0;

// Reads keys from one JSON object and remembers which were consumed so that
// anything left over can be rejected as unknown.
class ObjectReader {
public:
    ObjectReader(const json& object, std::string path) : object_(object), path_(std::move(path))
    {
        if (!object_.is_object()) {
            throw ValidationError(where() + " must be an object");
        }
    }

    bool has(const std::string& key) const { return object_.contains(key); }

    const json& raw(const std::string& key)
    {
        used_.insert(key);
        return object_.at(key);
    }

    double number(const std::string& key, double fallback)
    {
        if (!has(key)) {
            return fallback;
        }
        const json& v = raw(key);
        if (!v.is_number()) {
            throw ValidationError(where(key) + " must be a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ValidationError(where(key) + " must be finite");
        }
        return d;
    }

    std::uint64_t count(const std::string& key, std::uint64_t fallback)
    {
        if (!has(key)) {
            return fallback;
        }
        const json& v = raw(key);
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
            throw ValidationError(where(key) + " must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    bool flag(const std::string& key, bool fallback)
    {
        if (!has(key)) {
            return fallback;
        }
        const json& v = raw(key);
        if (!v.is_boolean()) {
            throw ValidationError(where(key) + " must be true or false");
        }
        return v.get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback)
    {
        if (!has(key)) {
            return fallback;
        }
        const json& v = raw(key);
        if (!v.is_string()) {
            throw ValidationError(where(key) + " must be a string");
        }
        return v.get<std::string>();
    }

    // Angle given as <stem>_rad or <stem>_deg (not both); returns radians.
    double angle(const std::string& stem, double fallback_rad)
    {
        const bool rad = has(stem + "_rad");
        const bool deg = has(stem + "_deg");
        if (rad && deg) {
            throw ValidationError(where(stem) + ": give either _rad or _deg, not both");
        }
        if (rad) {
            return number(stem + "_rad", 0.0);
        }
        if (deg) {
            return number(stem + "_deg", 0.0) * kDegToRad;
        }
        return fallback_rad;
    }

    // Length given as <stem>_m or <stem>_wavelengths; returns meters.
    double length(const std::string& stem, double wavelength, double fallback_m)
    {
        const bool m = has(stem + "_m");
        const bool wl = has(stem + "_wavelengths");
        if (m && wl) {
            throw ValidationError(where(stem) + ": give either _m or _wavelengths, not both");
        }
        if (m) {
            return number(stem + "_m", 0.0);
        }
        if (wl) {
            return number(stem + "_wavelengths", 0.0) * wavelength;
        }
        return fallback_m;
    }

    std::string where(const std::string& key = {}) const
    {
        return "'" + (key.empty() ? path_ : path_ + "." + key) + "'";
    }

    void finish() const
    {
        for (const auto& [key, value] : object_.items()) {
            if (!used_.contains(key)) {
                throw ValidationError("unknown key " + where(key));
            }
        }
    }

private:
    const json& object_;
    std::string path_;
    std::set<std::string> used_;
};

const json& empty_object()
{
    static const json empty = json::object();
    return empty;
}

const json& section(ObjectReader& parent, const std::string& key)
{
    return parent.has(key) ? parent.raw(key) : empty_object();
}

BeamSpec parse_strategy(const json& entry, const std::string& path, double halfwidth)
{
    ObjectReader r(entry, path);
    if (!r.has("type")) {
        throw ValidationError(r.where("type") + " is required");
    }
    const std::string type = r.text("type", "");
    const auto strategy = parse_strategy_keyword(type);
    if (!strategy) {
        throw ValidationError(r.where("type") + ": unknown strategy '" + type +
                              "' (omnidirectional, travel_axis, steered, dominant_eigenmode)");
    }
    BeamSpec spec;
    switch (*strategy) {
    case Strategy::Omnidirectional: spec = BeamSpec::omnidirectional(); break;
    case Strategy::TravelAxis: spec = BeamSpec::travel_axis(); break;
    case Strategy::SteeredAt:
        if (!r.has("theta_ue_rad") && !r.has("theta_ue_deg")) {
            throw ValidationError(r.where("theta_ue") + " is required for steered beams");
        }
        spec = BeamSpec::steered_at(r.angle("theta_ue", 0.0));
        if (std::abs(spec.theta_ue) > kHalfPi) {
            throw ValidationError(r.where("theta_ue") + " outside the forward sector [-pi/2, pi/2]");
        }
        break;
    case Strategy::DominantEigenmode: spec = BeamSpec::dominant_eigenmode(); break;
    }
    if (spec.is_directional()) {
        spec.backlobe_suppressed = r.flag("backlobe_suppressed", true);
    }
    spec.gamma = halfwidth;
    spec.label = r.text("label", "");
    r.finish();
    return spec;
}

UlaGeometry parse_array(const json& object, const std::string& path, double wavelength, UlaGeometry fallback,
                        bool has_center)
{
    ObjectReader r(object, path);
    UlaGeometry a = fallback;
    a.num_elements = r.count("num_elements", fallback.num_elements);
    a.spacing = r.length("spacing", wavelength, wavelength / 2.0);
    if (has_center) {
        a.center.x = r.number("center_x_m", fallback.center.x);
        a.center.y = r.number("center_y_m", fallback.center.y);
    }
    a.broadside_angle = r.angle("broadside", fallback.broadside_angle);
    r.finish();
    if (a.num_elements < 1) {
        throw ValidationError(r.where("num_elements") + " must be at least 1");
    }
    if (!(a.spacing > 0.0)) {
        throw ValidationError(r.where("spacing") + " must be positive");
    }
    return a;
}

json point_json(Point2 p) { return json{{"x_m", p.x}, {"y_m", p.y}}; }

} // namespace

ScenarioFile default_scenario_file() { return parse_scenario(json::object()); }

ScenarioFile parse_scenario(const json& doc)
{
    ObjectReader top(doc, "scenario");
    const auto version = top.count("schema_version", kSchemaVersion);
    if (version != static_cast<std::uint64_t>(kSchemaVersion)) {
        throw ValidationError("unsupported schema_version " + std::to_string(version) + " (expected " +
                              std::to_string(kSchemaVersion) + ")");
    }

    ScenarioFile file;
    Scenario& s = file.scenario;
    s.seed = top.count("seed", 0);

    {
        ObjectReader r(section(top, "radio"), "scenario.radio");
        const double ghz = r.number("carrier_frequency_ghz", 10.0);
        const double speed = r.number("ue_speed_mps", 30.0);
        const double snr = r.number("es_over_n0_db", 30.0);
        r.finish();
        if (!(ghz > 0.0)) {
            throw ValidationError(r.where("carrier_frequency_ghz") + " must be positive");
        }
        if (!(speed > 0.0)) {
            throw ValidationError(r.where("ue_speed_mps") + " must be positive");
        }
        s.radio = RadioConfig::from_carrier(ghz * 1e9, speed, snr);
    }
    const double lambda = s.radio.wavelength;

    {
        ObjectReader r(section(top, "trajectory"), "scenario.trajectory");
        s.trajectory.origin = {r.number("origin_x_m", 0.0), r.number("origin_y_m", 0.0)};
        s.trajectory.theta_mov = r.angle("theta_mov", 0.0);
        s.trajectory.step_length = r.length("step_length", lambda, lambda / 20.0);
        s.trajectory.num_steps = r.count("num_steps", 200);
        s.trajectory.ue_speed = s.radio.ue_speed;
        r.finish();
        if (!(s.trajectory.step_length > 0.0)) {
            throw ValidationError(r.where("step_length") + " must be positive");
        }
        if (s.trajectory.num_steps < 1) {
            throw ValidationError(r.where("num_steps") + " must be at least 1");
        }
    }

    UlaGeometry ue_default{4, lambda / 2.0, s.trajectory.origin, kHalfPi};
    s.ue_array = parse_array(section(top, "ue_array"), "scenario.ue_array", lambda, ue_default, false);
    s.ue_array.center = s.trajectory.origin;
    UlaGeometry bs_default{128, lambda / 2.0, {10.0, 0.0}, kPi};
    s.bs_array = parse_array(section(top, "bs_array"), "scenario.bs_array", lambda, bs_default, true);

    const double default_halfwidth = s.ue_array.num_elements >= 2 ? ula_halfwidth(s.ue_array.num_elements) : kHalfPi;
    s.main_lobe_halfwidth = top.angle("main_lobe_halfwidth", default_halfwidth);
    if (!(s.main_lobe_halfwidth > 0.0) || s.main_lobe_halfwidth > kHalfPi) {
        throw ValidationError(top.where("main_lobe_halfwidth") + " must lie in (0, pi/2]");
    }

    {
        ObjectReader r(section(top, "scatterers"), "scenario.scatterers");
        const std::string kind = r.text("kind", "random");
        if (kind == "random") {
            RandomField f;
            f.count = r.count("count", 100);
            const Rect fallback = default_region(s.ue_array, s.bs_array);
            ObjectReader region(section(r, "region"), "scenario.scatterers.region");
            f.region.x_min = region.number("x_min_m", fallback.x_min);
            f.region.x_max = region.number("x_max_m", fallback.x_max);
            f.region.y_min = region.number("y_min_m", fallback.y_min);
            f.region.y_max = region.number("y_max_m", fallback.y_max);
            region.finish();
            f.exclusion_radius_m = r.number("exclusion_radius_m", 0.5);
            f.monostatic_rcs = r.number("monostatic_rcs", 0.5);
            s.scatterers = f;
        } else if (kind == "explicit") {
            if (!r.has("positions") || !r.raw("positions").is_array()) {
                throw ValidationError(r.where("positions") + " must be a list of points");
            }
            std::vector<Point2> positions;
            const json& list = r.raw("positions");
            for (std::size_t i = 0; i < list.size(); ++i) {
                ObjectReader p(list[i], "scenario.scatterers.positions[" + std::to_string(i) + "]");
                if (!p.has("x_m") || !p.has("y_m")) {
                    throw ValidationError(p.where() + " needs x_m and y_m");
                }
                positions.push_back({p.number("x_m", 0.0), p.number("y_m", 0.0)});
                p.finish();
            }
            ScattererField field = ScattererField::with_shared_rcs(positions, 0.5);
            if (r.has("monostatic_rcs")) {
                const json& rcs = r.raw("monostatic_rcs");
                if (rcs.is_number()) {
                    field.monostatic_rcs.assign(positions.size(), rcs.get<double>());
                } else if (rcs.is_array() && rcs.size() == positions.size()) {
                    for (std::size_t i = 0; i < rcs.size(); ++i) {
                        if (!rcs[i].is_number()) {
                            throw ValidationError(r.where("monostatic_rcs") + " entries must be numbers");
                        }
                        field.monostatic_rcs[i] = rcs[i].get<double>();
                    }
                } else {
                    throw ValidationError(r.where("monostatic_rcs") +
                                          " must be a number or one number per scatterer");
                }
            }
            s.scatterers = field;
        } else {
            throw ValidationError(r.where("kind") + ": expected 'random' or 'explicit', got '" + kind + "'");
        }
        r.finish();
    }

    if (top.has("strategies")) {
        const json& list = top.raw("strategies");
        if (!list.is_array()) {
            throw ValidationError(top.where("strategies") + " must be a list");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            s.strategies.push_back(
                parse_strategy(list[i], "scenario.strategies[" + std::to_string(i) + "]", s.main_lobe_halfwidth));
        }
        if (s.strategies.empty()) {
            throw ValidationError(top.where("strategies") + " must not be empty");
        }
    } else {
        for (BeamSpec spec :
             {BeamSpec::omnidirectional(), BeamSpec::travel_axis(), BeamSpec::dominant_eigenmode()}) {
            spec.gamma = s.main_lobe_halfwidth;
            s.strategies.push_back(spec);
        }
    }
    {
        std::set<std::string> names;
        for (const BeamSpec& spec : s.strategies) {
            if (!names.insert(spec.name()).second) {
                throw ValidationError("duplicate strategy name '" + spec.name() + "'; set distinct labels");
            }
        }
    }

    s.drop_threshold_db = top.number("drop_threshold_db", 3.0);

    {
        ObjectReader r(section(top, "output"), "scenario.output");
        OutputOptions& o = file.output;
        o.trace_csv = r.text("trace_csv", o.trace_csv);
        o.report = r.text("report", o.report);
        o.montecarlo_csv = r.text("montecarlo_csv", o.montecarlo_csv);
        o.doppler_csv = r.text("doppler_csv", o.doppler_csv);
        o.plot = r.flag("plot", o.plot);
        o.plot_svg = r.text("plot_svg", o.plot_svg);
        r.finish();
    }
    top.finish();

    s.validate();
    return file;
}

ScenarioFile parse_scenario_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario parse error: ") + e.what());
    }
    return parse_scenario(doc);
}

ScenarioFile load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario_text(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

json echo_scenario(const ScenarioFile& file)
{
    const Scenario& s = file.scenario;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["seed"] = s.seed;
    doc["radio"] = {{"carrier_frequency_ghz", s.radio.carrier_frequency_hz / 1e9},
                    {"ue_speed_mps", s.radio.ue_speed},
                    {"es_over_n0_db", s.radio.es_over_n0_db}};
    doc["ue_array"] = {{"num_elements", s.ue_array.num_elements},
                       {"spacing_m", s.ue_array.spacing},
                       {"broadside_rad", s.ue_array.broadside_angle}};
    doc["bs_array"] = {{"num_elements", s.bs_array.num_elements},
                       {"spacing_m", s.bs_array.spacing},
                       {"center_x_m", s.bs_array.center.x},
                       {"center_y_m", s.bs_array.center.y},
                       {"broadside_rad", s.bs_array.broadside_angle}};
    doc["trajectory"] = {{"origin_x_m", s.trajectory.origin.x},
                         {"origin_y_m", s.trajectory.origin.y},
                         {"theta_mov_rad", s.trajectory.theta_mov},
                         {"step_length_m", s.trajectory.step_length},
                         {"num_steps", s.trajectory.num_steps}};
    if (const auto* f = std::get_if<RandomField>(&s.scatterers)) {
        doc["scatterers"] = {{"kind", "random"},
                             {"count", f->count},
                             {"region",
                              {{"x_min_m", f->region.x_min},
                               {"x_max_m", f->region.x_max},
                               {"y_min_m", f->region.y_min},
                               {"y_max_m", f->region.y_max}}},
                             {"exclusion_radius_m", f->exclusion_radius_m},
                             {"monostatic_rcs", f->monostatic_rcs}};
    } else {
        const auto& field = std::get<ScattererField>(s.scatterers);
        json positions = json::array();
        for (const Point2& p : field.positions) {
            positions.push_back(point_json(p));
        }
        doc["scatterers"] = {{"kind", "explicit"}, {"positions", positions}, {"monostatic_rcs", field.monostatic_rcs}};
    }
    doc["main_lobe_halfwidth_rad"] = s.main_lobe_halfwidth;
    json strategies = json::array();
    for (const BeamSpec& spec : s.strategies) {
        json entry{{"type", strategy_keyword(spec.strategy)}};
        if (spec.strategy == Strategy::SteeredAt) {
            entry["theta_ue_rad"] = spec.theta_ue;
        }
        if (spec.is_directional()) {
            entry["backlobe_suppressed"] = spec.backlobe_suppressed;
        }
        if (!spec.label.empty()) {
            entry["label"] = spec.label;
        }
        strategies.push_back(entry);
    }
    doc["strategies"] = strategies;
    doc["drop_threshold_db"] = s.drop_threshold_db;
    const OutputOptions& o = file.output;
    doc["output"] = {{"trace_csv", o.trace_csv},       {"report", o.report}, {"montecarlo_csv", o.montecarlo_csv},
                     {"doppler_csv", o.doppler_csv},   {"plot", o.plot},     {"plot_svg", o.plot_svg}};
    return doc;
}

} // namespace axisbeam
