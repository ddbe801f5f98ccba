// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace axisbeam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return p * s; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3D cross product; positive when b is counterclockwise of a.
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Wraps to (-pi, pi].
double wrap_angle(double angle);

/// Uniform linear array in the plane.
///
/// `broadside_angle` is the global direction (counterclockwise from +x) the
/// array faces. Elements lie along the axis obtained by rotating the broadside
/// direction by +90 degrees, ordered from negative to positive axis offset, so
/// that a far-field source at broadside-relative angle theta sees a phase
/// progression of exp(j*2*pi*spacing/lambda*k*sin(theta)) across elements.
struct UlaGeometry {
    std::size_t num_elements{1};
    double spacing{0.0};
    Point2 center{};
    double broadside_angle{0.0};

    void validate() const;
    Point2 broadside_direction() const { return unit_vector(broadside_angle); }
    Point2 axis_direction() const { return unit_vector(broadside_angle + kHalfPi); }
    double aperture() const { return spacing * static_cast<double>(num_elements - 1); }
};

std::vector<Point2> element_positions(const UlaGeometry& array);

/// Straight-line UE motion sampled by displacement.
///
/// `theta_mov` is the travel direction relative to the UE array broadside,
/// counterclockwise positive. `origin` is the UE array center at step 0.
/// Samples are taken at steps 0..num_steps-1.
struct Trajectory {
    Point2 origin{};
    double theta_mov{0.0};
    double step_length{0.0};
    std::size_t num_steps{1};
    double ue_speed{0.0};

    void validate() const;
    double displacement(std::size_t step) const { return static_cast<double>(step) * step_length; }
    double total_length() const { return displacement(num_steps - 1); }
    // Unit vector of motion in the global frame for a UE array with the given broadside.
    Point2 direction(const UlaGeometry& ue_array) const
    {
        return unit_vector(ue_array.broadside_angle + theta_mov);
    }
};

/// Rigid translation of `array` by step*step_length along the travel axis.
/// Orientation is unchanged. Throws ValidationError when step > num_steps.
UlaGeometry ue_position_at(const Trajectory& trajectory, const UlaGeometry& array, std::size_t step);

/// Signed angle in (-pi, pi] from the array broadside to the ray from the
/// array center toward `to_point`. Throws GeometryError for coincident points.
double departure_angle(const UlaGeometry& from_array, Point2 to_point);

} // namespace axisbeam
