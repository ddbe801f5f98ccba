// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/channel.hpp"

#include <cmath>
#include <string>

#include "axisbeam/errors.hpp"

namespace axisbeam {

namespace {

// Below this separation (meters) the 1/d amplitude is treated as singular.
constexpr double kMinSeparation = 1e-12;

} // namespace

RadioConfig RadioConfig::from_carrier(double carrier_frequency_hz, double ue_speed, double es_over_n0_db)
{
    RadioConfig r;
    r.carrier_frequency_hz = carrier_frequency_hz;
    r.light_speed = kLightSpeed;
    r.wavelength = kLightSpeed / carrier_frequency_hz;
    r.ue_speed = ue_speed;
    r.es_over_n0_db = es_over_n0_db;
    r.validate();
    return r;
}

void RadioConfig::validate() const
{
    if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz)) {
        throw ValidationError("carrier frequency must be positive");
    }
    if (!(wavelength > 0.0) || !(light_speed > 0.0)) {
        throw ValidationError("wavelength and light speed must be positive");
    }
    if (std::abs(wavelength * carrier_frequency_hz - light_speed) > 1e-9 * light_speed) {
        throw ValidationError("wavelength inconsistent with carrier frequency");
    }
    if (!(ue_speed > 0.0) || !std::isfinite(ue_speed)) {
        throw ValidationError("UE speed must be positive");
    }
    if (!std::isfinite(es_over_n0_db)) {
        throw ValidationError("Es/N0 must be finite");
    }
}

ScattererField ScattererField::with_shared_rcs(std::vector<Point2> positions, double rcs)
{
    ScattererField f;
    f.monostatic_rcs.assign(positions.size(), rcs);
    f.positions = std::move(positions);
    return f;
}

void ScattererField::validate() const
{
    if (positions.empty()) {
        throw ValidationError("scatterer field is empty");
    }
    if (monostatic_rcs.size() != positions.size()) {
        throw ValidationError("one monostatic RCS per scatterer required");
    }
    for (std::size_t m = 0; m < positions.size(); ++m) {
        if (!std::isfinite(positions[m].x) || !std::isfinite(positions[m].y)) {
            throw ValidationError("scatterer " + std::to_string(m) + " has non-finite position");
        }
        if (!(monostatic_rcs[m] >= 0.0) || !std::isfinite(monostatic_rcs[m])) {
            throw ValidationError("scatterer " + std::to_string(m) + " has negative RCS");
        }
    }
}

cdouble nusw_gain(Point2 p1, Point2 p2, double wavelength)
{
    if (!(wavelength > 0.0)) {
        throw ValidationError("wavelength must be positive");
    }
    const double d = distance(p1, p2);
    if (d < kMinSeparation) {
        throw GeometryError("NUSW gain singular: coincident points");
    }
    const double amplitude = 1.0 / (std::sqrt(4.0 * kPi) * d);
    // Reduce cycles before scaling so integer-wavelength paths land on phase 0.
    const double cycles = std::remainder(d / wavelength, 1.0);
    return std::polar(amplitude, -2.0 * kPi * cycles);
}

double bistatic_angle(Point2 scatterer, Point2 ue_center, Point2 bs_center)
{
    const Point2 to_ue = ue_center - scatterer;
    const Point2 to_bs = bs_center - scatterer;
    if (norm(to_ue) < kMinSeparation || norm(to_bs) < kMinSeparation) {
        throw GeometryError("bistatic angle undefined: scatterer coincides with an array center");
    }
    return std::atan2(std::abs(cross(to_ue, to_bs)), dot(to_ue, to_bs));
}

double bistatic_alpha(Point2 scatterer, Point2 ue_center, Point2 bs_center, double monostatic_rcs)
{
    return monostatic_rcs * std::cos(0.5 * bistatic_angle(scatterer, ue_center, bs_center));
}

RVector scatterer_alphas(const ScattererField& scatterers, Point2 ue_center, Point2 bs_center)
{
    RVector alpha(static_cast<Eigen::Index>(scatterers.size()));
    for (std::size_t m = 0; m < scatterers.size(); ++m) {
        alpha(static_cast<Eigen::Index>(m)) =
            bistatic_alpha(scatterers.positions[m], ue_center, bs_center, scatterers.monostatic_rcs[m]);
    }
    return alpha;
}

CMatrix build_h1(const ScattererField& scatterers, const UlaGeometry& ue_array, const RadioConfig& radio)
{
    const auto ue = element_positions(ue_array);
    CMatrix h1(static_cast<Eigen::Index>(scatterers.size()), static_cast<Eigen::Index>(ue.size()));
    for (std::size_t m = 0; m < scatterers.size(); ++m) {
        for (std::size_t n = 0; n < ue.size(); ++n) {
            h1(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
                nusw_gain(scatterers.positions[m], ue[n], radio.wavelength);
        }
    }
    return h1;
}

CMatrix build_h2(const UlaGeometry& bs_array, const ScattererField& scatterers, const RadioConfig& radio)
{
    const auto bs = element_positions(bs_array);
    CMatrix h2(static_cast<Eigen::Index>(bs.size()), static_cast<Eigen::Index>(scatterers.size()));
    for (std::size_t m = 0; m < scatterers.size(); ++m) {
        for (std::size_t l = 0; l < bs.size(); ++l) {
            h2(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) =
                nusw_gain(bs[l], scatterers.positions[m], radio.wavelength);
        }
    }
    return h2;
}

ChannelSnapshot assemble_channel(const ScattererField& scatterers, const UlaGeometry& ue_array,
                                 const UlaGeometry& bs_array, const RadioConfig& radio,
                                 const RVector& gain_mask, double displacement)
{
    return assemble_channel(build_h2(bs_array, scatterers, radio), scatterers, ue_array, bs_array, radio,
                            gain_mask, displacement);
}

ChannelSnapshot assemble_channel(const CMatrix& h2, const ScattererField& scatterers,
                                 const UlaGeometry& ue_array, const UlaGeometry& bs_array,
                                 const RadioConfig& radio, const RVector& gain_mask, double displacement)
{
    const auto n_sc = static_cast<Eigen::Index>(scatterers.size());
    if (gain_mask.size() != n_sc) {
        throw ValidationError("gain mask length " + std::to_string(gain_mask.size()) +
                              " does not match " + std::to_string(n_sc) + " scatterers");
    }
    if (h2.cols() != n_sc || h2.rows() != static_cast<Eigen::Index>(bs_array.num_elements)) {
        throw ValidationError("h2 dimensions do not match BS array and scatterer field");
    }
    ChannelSnapshot snap;
    snap.h1 = build_h1(scatterers, ue_array, radio);
    snap.h2 = h2;
    snap.alpha = scatterer_alphas(scatterers, ue_array.center, bs_array.center);
    snap.gain_mask = gain_mask;
    snap.h = snap.h2 * (snap.alpha.cwiseProduct(gain_mask)).cast<cdouble>().asDiagonal() * snap.h1;
    snap.displacement = displacement;
    return snap;
}

} // namespace axisbeam
