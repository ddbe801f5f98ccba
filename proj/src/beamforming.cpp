// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/beamforming.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "axisbeam/errors.hpp"

namespace axisbeam {

namespace {

constexpr double kSectorSlack = 1e-12;

void require_in_sector(double theta)
{
    if (!(std::abs(theta) <= kHalfPi + kSectorSlack)) {
        throw ValidationError("UE pointing angle " + std::to_string(theta) +
                              " rad outside the forward sector [-pi/2, pi/2]");
    }
}

std::string degrees_token(double theta)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(theta) * 180.0 / kPi);
    return std::string(theta < 0.0 ? "m" : "") + buf + "deg";
}

} // namespace

BeamSpec BeamSpec::omnidirectional()
{
    BeamSpec s;
    s.strategy = Strategy::Omnidirectional;
    s.backlobe_suppressed = false;
    return s;
}

BeamSpec BeamSpec::travel_axis()
{
    BeamSpec s;
    s.strategy = Strategy::TravelAxis;
    return s;
}

BeamSpec BeamSpec::steered_at(double theta_ue)
{
    BeamSpec s;
    s.strategy = Strategy::SteeredAt;
    s.theta_ue = theta_ue;
    return s;
}

BeamSpec BeamSpec::dominant_eigenmode()
{
    BeamSpec s;
    s.strategy = Strategy::DominantEigenmode;
    s.backlobe_suppressed = false;
    return s;
}

std::string BeamSpec::name() const
{
    if (!label.empty()) {
        return label;
    }
    std::string base = strategy_keyword(strategy);
    if (strategy == Strategy::SteeredAt) {
        base += "_" + degrees_token(theta_ue);
    }
    if (is_directional() && !backlobe_suppressed) {
        base += "_nomask";
    }
    return base;
}

std::string strategy_keyword(Strategy s)
{
    switch (s) {
    case Strategy::Omnidirectional: return "omnidirectional";
    case Strategy::TravelAxis: return "travel_axis";
    case Strategy::SteeredAt: return "steered";
    case Strategy::DominantEigenmode: return "dominant_eigenmode";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy_keyword(const std::string& keyword)
{
    for (Strategy s : {Strategy::Omnidirectional, Strategy::TravelAxis, Strategy::SteeredAt,
                       Strategy::DominantEigenmode}) {
        if (strategy_keyword(s) == keyword) {
            return s;
        }
    }
    return std::nullopt;
}

CVector steering_vector(double theta, std::size_t n)
{
    if (n < 1) {
        throw ValidationError("steering vector needs at least one element");
    }
    const double increment = kPi * std::sin(theta);
    CVector a(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        a(static_cast<Eigen::Index>(k)) = std::polar(1.0, increment * static_cast<double>(k));
    }
    return a;
}

double travel_axis_pointing(double theta_mov)
{
    const double wrapped = wrap_angle(theta_mov);
    if (std::abs(wrapped) <= kHalfPi) {
        return wrapped;
    }
    return wrap_angle(wrapped + kPi);
}

CVector ue_weights(const BeamSpec& spec, const Trajectory& trajectory, std::size_t num_ue_elements,
                   const CMatrix* h0)
{
    if (num_ue_elements < 1) {
        throw ValidationError("UE array needs at least one element");
    }
    const auto n = static_cast<Eigen::Index>(num_ue_elements);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(num_ue_elements));

    switch (spec.strategy) {
    case Strategy::Omnidirectional: {
        CVector w = CVector::Zero(n);
        w(0) = 1.0;
        return w;
    }
    case Strategy::TravelAxis:
        return steering_vector(travel_axis_pointing(trajectory.theta_mov), num_ue_elements).conjugate() *
               inv_sqrt_n;
    case Strategy::SteeredAt:
        require_in_sector(spec.theta_ue);
        return steering_vector(spec.theta_ue, num_ue_elements).conjugate() * inv_sqrt_n;
    case Strategy::DominantEigenmode: {
        if (h0 == nullptr || h0->size() == 0) {
            throw ValidationError("dominant eigenmode weights need the t=0 channel");
        }
        if (h0->cols() != n) {
            throw ValidationError("H(0) column count does not match UE array size");
        }
        Eigen::JacobiSVD<CMatrix> svd(*h0, Eigen::ComputeThinV);
        CVector v = svd.matrixV().col(0);
        // Fix the global phase: first non-negligible entry real and positive.
        for (Eigen::Index k = 0; k < v.size(); ++k) {
            if (std::abs(v(k)) > 1e-12) {
                v *= std::conj(v(k)) / std::abs(v(k));
                v(k) = std::abs(v(k));
                break;
            }
        }
        return v / v.norm();
    }
    }
    throw ValidationError("unknown strategy");
}

RVector gain_mask_for(const BeamSpec& spec, const UlaGeometry& ue_array, const ScattererField& scatterers)
{
    const auto n_sc = static_cast<Eigen::Index>(scatterers.size());
    if (!spec.is_directional() || !spec.backlobe_suppressed) {
        return RVector::Ones(n_sc);
    }
    const Point2 forward = ue_array.broadside_direction();
    const double forward_gain = std::sqrt(2.0);
    RVector mask(n_sc);
    for (Eigen::Index m = 0; m < n_sc; ++m) {
        // |departure angle| < pi/2 exactly when the projection on broadside is positive.
        const double along = dot(scatterers.positions[static_cast<std::size_t>(m)] - ue_array.center, forward);
        mask(m) = along > 0.0 ? forward_gain : 0.0;
    }
    return mask;
}

CombinerState mrc_combiner(const CVector& h_est)
{
    const double magnitude = h_est.norm();
    if (!(magnitude > 0.0)) {
        throw GeometryError("zero effective channel at the estimation instant");
    }
    return {h_est, h_est.conjugate() / magnitude};
}

double snr_db_from_amplitude(cdouble z, const RadioConfig& radio)
{
    const double power = std::norm(z);
    if (power == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return radio.es_over_n0_db + 10.0 * std::log10(power);
}

double post_snr_db(const CVector& w_bs, const CMatrix& h, const CVector& w_ue, const RadioConfig& radio)
{
    if (w_bs.size() != h.rows() || w_ue.size() != h.cols()) {
        throw ValidationError("combiner/channel/weight dimensions disagree");
    }
    const cdouble z = w_bs.transpose() * (h * w_ue);
    return snr_db_from_amplitude(z, radio);
}

} // namespace axisbeam
