// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "axisbeam/beamforming.hpp"
#include "axisbeam/channel.hpp"
#include "axisbeam/geometry.hpp"

namespace axisbeam {

struct Rect {
    double x_min{0.0};
    double x_max{0.0};
    double y_min{0.0};
    double y_max{0.0};
};

/// Scatterers drawn uniformly from `region`, keeping only points in the open
/// forward half-plane of the UE array at step 0 and at least
/// `exclusion_radius_m` away from every UE and BS element.
struct RandomField {
    std::size_t count{100};
    Rect region{};
    double exclusion_radius_m{0.5};
    double monostatic_rcs{0.5};
};

using ScattererSource = std::variant<ScattererField, RandomField>;

enum class Execution { Serial, Parallel };

struct Scenario {
    RadioConfig radio{};
    UlaGeometry ue_array{};
    UlaGeometry bs_array{};
    ScattererSource scatterers{RandomField{}};
    std::uint64_t seed{0};
    Trajectory trajectory{};
    std::vector<BeamSpec> strategies;
    double main_lobe_halfwidth{kPi / 6.0};
    double drop_threshold_db{3.0};

    void validate() const;
};

// Forward-region rectangle between UE and BS: x spans the two centers, y
// spans +-(UE-BS distance) around the UE.
Rect default_region(const UlaGeometry& ue_array, const UlaGeometry& bs_array);

ScattererField realize_field(const RandomField& field, const UlaGeometry& ue_array,
                             const UlaGeometry& bs_array, std::uint64_t seed);

// Explicit field, or the random field realized with scenario.seed.
ScattererField resolve_scatterers(const Scenario& scenario);

struct SnrTrace {
    BeamSpec strategy;
    std::vector<double> displacements;
    std::vector<double> snr_db;
    double snr0_db{0.0};
    // Frozen for the whole coherence block.
    CVector w_ue;
    CVector w_bs;
};

/// One SNR trace per strategy. Weights and combiner are set at step 0 and
/// held; gain masks and bistatic amplitudes follow the UE.
///
/// Serial evaluates the full channel matrix at every step (reference route).
/// Parallel projects the frozen combiner onto the BS side once and spreads
/// steps over OpenMP threads.
std::vector<SnrTrace> run_trajectory(const Scenario& scenario, Execution execution = Execution::Parallel);
std::vector<SnrTrace> run_trajectory(const Scenario& scenario, const ScattererField& field,
                                     Execution execution = Execution::Parallel);

/// Displacement of the first drop of `threshold_db` below snr0, linearly
/// interpolated between the straddling samples. nullopt when never reached.
std::optional<double> coherence_distance(const SnrTrace& trace, double threshold_db);

// splitmix64 finalizer of master_seed + (trial + 1) * 0x9E3779B97F4A7C15.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

struct TrialOutcome {
    std::uint64_t seed{0};
    bool failed{false};
    std::string error;
    std::vector<std::optional<double>> coherence; // per strategy
    std::vector<double> snr0_db;                  // per strategy
};

/// Distribution of coherence distances for one strategy. Not-reached trials
/// count as +inf in the order statistics, so a quartile can be +inf.
struct StrategySummary {
    std::string name;
    std::size_t evaluated{0};
    std::size_t not_reached{0};
    double median{0.0};
    double q25{0.0};
    double q75{0.0};
};

struct MonteCarloReport {
    std::uint64_t master_seed{0};
    std::size_t trials{0};
    std::size_t failed{0};
    std::vector<TrialOutcome> outcomes;
    std::vector<StrategySummary> summary;
};

/// Runs `trials` independent RandomField realizations of `scenario_template`.
/// Trial i uses seed trial_seed(master_seed, i); geometry failures are
/// recorded per trial.
MonteCarloReport monte_carlo(const Scenario& scenario_template, std::size_t trials,
                             std::uint64_t master_seed, Execution execution = Execution::Parallel);

// Type-7 (linear) sample quantile; +inf entries propagate.
double quantile(std::vector<double> values, double q);

} // namespace axisbeam
