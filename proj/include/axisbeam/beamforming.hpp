// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "axisbeam/channel.hpp"
#include "axisbeam/geometry.hpp"

namespace axisbeam {

enum class Strategy { Omnidirectional, TravelAxis, SteeredAt, DominantEigenmode };

/// UE beam choice. `theta_ue` is only meaningful for SteeredAt; TravelAxis
/// derives its pointing angle from the trajectory.
struct BeamSpec {
    Strategy strategy{Strategy::TravelAxis};
    double theta_ue{0.0};
    bool backlobe_suppressed{true};
    double gamma{kPi / 6.0};
    std::string label; // empty: derived from strategy

    static BeamSpec omnidirectional();
    static BeamSpec travel_axis();
    static BeamSpec steered_at(double theta_ue);
    static BeamSpec dominant_eigenmode();

    bool is_directional() const
    {
        return strategy == Strategy::TravelAxis || strategy == Strategy::SteeredAt;
    }
    // Stable identifier used for CSV columns and report keys.
    std::string name() const;
};

std::string strategy_keyword(Strategy s);
std::optional<Strategy> parse_strategy_keyword(const std::string& keyword);

/// Far-field steering vector, entry k = exp(j*pi*k*sin(theta)).
CVector steering_vector(double theta, std::size_t n);

/// Pointing angle inside the forward sector [-pi/2, pi/2] for the travel
/// axis. A travel direction into the back half-plane is replaced by its
/// opposite, which lies on the same axis.
double travel_axis_pointing(double theta_mov);

/// Unit-norm UE weights.
///
/// `h0` is H(0) synthesized with all-ones gain masks; it is required for
/// DominantEigenmode and ignored otherwise (pass nullptr).
CVector ue_weights(const BeamSpec& spec, const Trajectory& trajectory, std::size_t num_ue_elements,
                   const CMatrix* h0 = nullptr);

/// Per-scatterer UE gain: sqrt(2) inside the open forward half-plane and 0
/// elsewhere for back-lobe suppressed directional beams, all ones otherwise.
RVector gain_mask_for(const BeamSpec& spec, const UlaGeometry& ue_array, const ScattererField& scatterers);

struct CombinerState {
    CVector h_est;
    CVector w_bs;
};

/// Maximum-ratio combiner conj(h_est) / ||h_est||.
CombinerState mrc_combiner(const CVector& h_est);

// 10*log10((Es/N0) * |z|^2) for the post-combining amplitude z; -inf when z == 0.
double snr_db_from_amplitude(cdouble z, const RadioConfig& radio);

/// Post-combining SNR |w_bs^T H w_ue|^2 * Es/N0 in dB.
double post_snr_db(const CVector& w_bs, const CMatrix& h, const CVector& w_ue, const RadioConfig& radio);

} // namespace axisbeam
