// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>

#include <omp.h>

#include "axisbeam/errors.hpp"
#include "axisbeam/kernels.hpp"

namespace axisbeam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 53 random mantissa bits; avoids implementation-defined distribution objects.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double min_distance(Point2 p, const std::vector<Point2>& points)
{
    double best = kInf;
    for (const Point2& q : points) {
        best = std::min(best, distance(p, q));
    }
    return best;
}

void validate_random_field(const RandomField& f)
{
    if (f.count < 1) {
        throw ValidationError("random field needs at least one scatterer");
    }
    const Rect& r = f.region;
    if (!(r.x_min < r.x_max) || !(r.y_min < r.y_max) || !std::isfinite(r.x_min + r.x_max + r.y_min + r.y_max)) {
        throw ValidationError("random field region must be a finite non-empty rectangle");
    }
    if (!(f.exclusion_radius_m >= 0.0) || !(f.monostatic_rcs >= 0.0)) {
        throw ValidationError("exclusion radius and RCS must be non-negative");
    }
}

} // namespace

void Scenario::validate() const
{
    radio.validate();
    ue_array.validate();
    bs_array.validate();
    trajectory.validate();
    if (strategies.empty()) {
        throw ValidationError("scenario needs at least one strategy");
    }
    if (!(drop_threshold_db > 0.0) || !std::isfinite(drop_threshold_db)) {
        throw ValidationError("drop threshold must be a positive number of dB");
    }
    if (!(main_lobe_halfwidth > 0.0) || main_lobe_halfwidth > kHalfPi) {
        throw ValidationError("main-lobe half-width must lie in (0, pi/2]");
    }
    if (!(trajectory.origin == ue_array.center)) {
        throw ValidationError("trajectory origin must coincide with the UE array center");
    }
    if (trajectory.ue_speed != radio.ue_speed) {
        throw ValidationError("trajectory and radio UE speeds disagree");
    }
    if (const auto* explicit_field = std::get_if<ScattererField>(&scatterers)) {
        explicit_field->validate();
        const auto bs = element_positions(bs_array);
        const auto ue = element_positions(ue_array);
        for (const Point2& p : explicit_field->positions) {
            if (min_distance(p, bs) == 0.0 || min_distance(p, ue) == 0.0) {
                throw ValidationError("scatterer coincides with an array element");
            }
        }
    } else {
        validate_random_field(std::get<RandomField>(scatterers));
    }
}

Rect default_region(const UlaGeometry& ue_array, const UlaGeometry& bs_array)
{
    const double reach = distance(ue_array.center, bs_array.center);
    return {std::min(ue_array.center.x, bs_array.center.x), std::max(ue_array.center.x, bs_array.center.x),
            ue_array.center.y - reach, ue_array.center.y + reach};
}

ScattererField realize_field(const RandomField& field, const UlaGeometry& ue_array, const UlaGeometry& bs_array,
                             std::uint64_t seed)
{
    validate_random_field(field);
    std::mt19937_64 rng(seed);
    const auto ue = element_positions(ue_array);
    const auto bs = element_positions(bs_array);
    const Point2 forward = ue_array.broadside_direction();
    const Rect& r = field.region;

    std::vector<Point2> positions;
    positions.reserve(field.count);
    const std::size_t max_attempts = 10000 * field.count;
    for (std::size_t attempt = 0; positions.size() < field.count; ++attempt) {
        if (attempt == max_attempts) {
            throw GeometryError("could not place " + std::to_string(field.count) +
                                " scatterers in the forward region; region too constrained");
        }
        const double x = r.x_min + (r.x_max - r.x_min) * unit_uniform(rng);
        const double y = r.y_min + (r.y_max - r.y_min) * unit_uniform(rng);
        const Point2 p{x, y};
        if (dot(p - ue_array.center, forward) <= 0.0) {
            continue;
        }
        if (min_distance(p, ue) < field.exclusion_radius_m || min_distance(p, bs) < field.exclusion_radius_m) {
            continue;
        }
        positions.push_back(p);
    }
    return ScattererField::with_shared_rcs(std::move(positions), field.monostatic_rcs);
}

ScattererField resolve_scatterers(const Scenario& scenario)
{
    if (const auto* explicit_field = std::get_if<ScattererField>(&scenario.scatterers)) {
        return *explicit_field;
    }
    return realize_field(std::get<RandomField>(scenario.scatterers), scenario.ue_array, scenario.bs_array,
                         scenario.seed);
}

std::vector<SnrTrace> run_trajectory(const Scenario& scenario, Execution execution)
{
    scenario.validate();
    return run_trajectory(scenario, resolve_scatterers(scenario), execution);
}

std::vector<SnrTrace> run_trajectory(const Scenario& scenario, const ScattererField& field, Execution execution)
{
    scenario.validate();
    field.validate();
    const CMatrix h2 = build_h2(scenario.bs_array, field, scenario.radio);
    const auto n_ue = scenario.ue_array.num_elements;
    const Trajectory& traj = scenario.trajectory;

    std::vector<SnrTrace> traces;
    traces.reserve(scenario.strategies.size());
    for (const BeamSpec& spec : scenario.strategies) {
        SnrTrace trace;
        trace.strategy = spec;

        if (spec.strategy == Strategy::DominantEigenmode) {
            const RVector ones = RVector::Ones(static_cast<Eigen::Index>(field.size()));
            const ChannelSnapshot full = assemble_channel(h2, field, scenario.ue_array, scenario.bs_array,
                                                          scenario.radio, ones);
            trace.w_ue = ue_weights(spec, traj, n_ue, &full.h);
        } else {
            trace.w_ue = ue_weights(spec, traj, n_ue);
        }

        const RVector mask0 = gain_mask_for(spec, scenario.ue_array, field);
        const ChannelSnapshot snap0 =
            assemble_channel(h2, field, scenario.ue_array, scenario.bs_array, scenario.radio, mask0);
        trace.w_bs = mrc_combiner(snap0.h * trace.w_ue).w_bs;

        const kernels::TraceProblem problem{&field,          &scenario.ue_array, &scenario.bs_array,
                                            &scenario.radio, &traj,              &spec,
                                            &h2,             &trace.w_ue,        &trace.w_bs};
        trace.snr_db = execution == Execution::Serial ? kernels::snr_trace_serial(problem)
                                                      : kernels::snr_trace_parallel(problem);
        trace.displacements.resize(traj.num_steps);
        for (std::size_t k = 0; k < traj.num_steps; ++k) {
            trace.displacements[k] = traj.displacement(k);
        }
        trace.snr0_db = trace.snr_db.front();
        traces.push_back(std::move(trace));
    }
    return traces;
}

std::optional<double> coherence_distance(const SnrTrace& trace, double threshold_db)
{
    if (trace.snr_db.empty() || trace.snr_db.size() != trace.displacements.size()) {
        throw ValidationError("coherence distance needs a non-empty trace with matching displacements");
    }
    const double target = trace.snr0_db - threshold_db;
    for (std::size_t k = 1; k < trace.snr_db.size(); ++k) {
        const double hi = trace.snr_db[k - 1];
        const double lo = trace.snr_db[k];
        if (lo <= target) {
            const double t = std::isinf(lo) ? 0.0 : (hi - target) / (hi - lo);
            return trace.displacements[k - 1] + t * (trace.displacements[k] - trace.displacements[k - 1]);
        }
    }
    return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial)
{
    std::uint64_t z = master_seed + (static_cast<std::uint64_t>(trial) + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double quantile(std::vector<double> values, double q)
{
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0 || lo + 1 >= values.size()) {
        return values[lo];
    }
    const double a = values[lo];
    const double b = values[lo + 1];
    if (std::isinf(a) || std::isinf(b)) {
        return b;
    }
    return a + frac * (b - a);
}

MonteCarloReport monte_carlo(const Scenario& scenario_template, std::size_t trials, std::uint64_t master_seed,
                             Execution execution)
{
    scenario_template.validate();
    if (!std::holds_alternative<RandomField>(scenario_template.scatterers)) {
        throw ValidationError("Monte Carlo needs a random scatterer field");
    }
    if (trials < 1) {
        throw ValidationError("Monte Carlo needs at least one trial");
    }
    const std::size_t n_strategies = scenario_template.strategies.size();

    MonteCarloReport report;
    report.master_seed = master_seed;
    report.trials = trials;
    report.outcomes.resize(trials);

    std::exception_ptr fatal;
    const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic) if (execution == Execution::Parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        TrialOutcome& outcome = report.outcomes[static_cast<std::size_t>(i)];
        outcome.seed = trial_seed(master_seed, static_cast<std::size_t>(i));
        try {
            Scenario scenario = scenario_template;
            scenario.seed = outcome.seed;
            const auto traces = run_trajectory(scenario, execution);
            for (const SnrTrace& t : traces) {
                outcome.coherence.push_back(coherence_distance(t, scenario.drop_threshold_db));
                outcome.snr0_db.push_back(t.snr0_db);
            }
        } catch (const GeometryError& e) {
            outcome.failed = true;
            outcome.error = e.what();
            outcome.coherence.assign(n_strategies, std::nullopt);
            outcome.snr0_db.assign(n_strategies, std::numeric_limits<double>::quiet_NaN());
        } catch (...) {
#pragma omp critical(axisbeam_mc_failure)
            if (!fatal) {
                fatal = std::current_exception();
            }
        }
    }
    if (fatal) {
        std::rethrow_exception(fatal);
    }

    for (const TrialOutcome& o : report.outcomes) {
        report.failed += o.failed ? 1 : 0;
    }
    for (std::size_t s = 0; s < n_strategies; ++s) {
        StrategySummary summary;
        summary.name = scenario_template.strategies[s].name();
        std::vector<double> values;
        for (const TrialOutcome& o : report.outcomes) {
            if (o.failed) {
                continue;
            }
            const auto& c = o.coherence[s];
            summary.not_reached += c ? 0 : 1;
            values.push_back(c.value_or(kInf));
        }
        summary.evaluated = values.size();
        summary.median = quantile(values, 0.5);
        summary.q25 = quantile(values, 0.25);
        summary.q75 = quantile(values, 0.75);
        report.summary.push_back(std::move(summary));
    }
    return report;
}

} // namespace axisbeam
