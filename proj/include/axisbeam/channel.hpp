// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "axisbeam/geometry.hpp"

namespace axisbeam {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kLightSpeed = 299792458.0;

struct RadioConfig {
    double carrier_frequency_hz{10e9};
    double wavelength{kLightSpeed / 10e9};
    double light_speed{kLightSpeed};
    double ue_speed{30.0};
    double es_over_n0_db{30.0};

    // Wavelength derived from the carrier; the only sanctioned constructor path.
    static RadioConfig from_carrier(double carrier_frequency_hz, double ue_speed, double es_over_n0_db);

    void validate() const;
    double es_over_n0_linear() const { return std::pow(10.0, es_over_n0_db / 10.0); }
};

/// Point scatterers with a real monostatic RCS amplitude each.
struct ScattererField {
    std::vector<Point2> positions;
    std::vector<double> monostatic_rcs;

    static ScattererField with_shared_rcs(std::vector<Point2> positions, double rcs);

    std::size_t size() const { return positions.size(); }
    void validate() const;
};

/// H = h2 * diag(alpha .* gain_mask) * h1 at one UE position, with its factors.
struct ChannelSnapshot {
    CMatrix h1;        // N_sc x N_UE
    CMatrix h2;        // N_BS x N_sc
    RVector alpha;     // N_sc, bistatic RCS amplitudes
    RVector gain_mask; // N_sc, UE-side forward gain per path
    CMatrix h;         // N_BS x N_UE
    double displacement{0.0};
};

// Near-field point-to-point response exp(-j*2*pi*d/lambda) / sqrt(4*pi*d^2).
cdouble nusw_gain(Point2 p1, Point2 p2, double wavelength);

// Angle in [0, pi] at the scatterer between the rays toward ue_center and bs_center.
double bistatic_angle(Point2 scatterer, Point2 ue_center, Point2 bs_center);

// monostatic_rcs * cos(beta / 2).
double bistatic_alpha(Point2 scatterer, Point2 ue_center, Point2 bs_center, double monostatic_rcs);

RVector scatterer_alphas(const ScattererField& scatterers, Point2 ue_center, Point2 bs_center);

CMatrix build_h1(const ScattererField& scatterers, const UlaGeometry& ue_array, const RadioConfig& radio);
CMatrix build_h2(const UlaGeometry& bs_array, const ScattererField& scatterers, const RadioConfig& radio);

ChannelSnapshot assemble_channel(const ScattererField& scatterers, const UlaGeometry& ue_array,
                                 const UlaGeometry& bs_array, const RadioConfig& radio,
                                 const RVector& gain_mask, double displacement = 0.0);

// Same as above with a precomputed h2; the BS side does not move.
ChannelSnapshot assemble_channel(const CMatrix& h2, const ScattererField& scatterers,
                                 const UlaGeometry& ue_array, const UlaGeometry& bs_array,
                                 const RadioConfig& radio, const RVector& gain_mask,
                                 double displacement = 0.0);

} // namespace axisbeam
