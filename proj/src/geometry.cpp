// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/geometry.hpp"

#include <string>

#include "axisbeam/errors.hpp"

namespace axisbeam {

namespace {

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

} // namespace

double wrap_angle(double angle)
{
    double wrapped = std::remainder(angle, 2.0 * kPi); // [-pi, pi]
    if (wrapped <= -kPi) {
        wrapped += 2.0 * kPi;
    }
    return wrapped;
}

void UlaGeometry::validate() const
{
    if (num_elements < 1) {
        throw ValidationError("ULA needs at least one element");
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw ValidationError("ULA spacing must be positive, got " + std::to_string(spacing));
    }
    if (!finite(center) || !std::isfinite(broadside_angle)) {
        throw ValidationError("ULA center and broadside must be finite");
    }
}

std::vector<Point2> element_positions(const UlaGeometry& array)
{
    array.validate();
    const Point2 axis = array.axis_direction();
    const double mid = 0.5 * static_cast<double>(array.num_elements - 1);
    std::vector<Point2> out;
    out.reserve(array.num_elements);
    for (std::size_t k = 0; k < array.num_elements; ++k) {
        const double offset = (static_cast<double>(k) - mid) * array.spacing;
        out.push_back(array.center + axis * offset);
    }
    return out;
}

void Trajectory::validate() const
{
    if (!(step_length > 0.0) || !std::isfinite(step_length)) {
        throw ValidationError("trajectory step_length must be positive");
    }
    if (num_steps < 1) {
        throw ValidationError("trajectory needs at least one step");
    }
    if (!std::isfinite(theta_mov) || !finite(origin)) {
        throw ValidationError("trajectory origin and theta_mov must be finite");
    }
    if (!(ue_speed > 0.0) || !std::isfinite(ue_speed)) {
        throw ValidationError("UE speed must be positive");
    }
}

UlaGeometry ue_position_at(const Trajectory& trajectory, const UlaGeometry& array, std::size_t step)
{
    if (step > trajectory.num_steps) {
        throw ValidationError("step " + std::to_string(step) + " beyond trajectory of " +
                              std::to_string(trajectory.num_steps) + " steps");
    }
    UlaGeometry moved = array;
    moved.center = array.center + trajectory.direction(array) * trajectory.displacement(step);
    return moved;
}

double departure_angle(const UlaGeometry& from_array, Point2 to_point)
{
    const Point2 v = to_point - from_array.center;
    if (v.x == 0.0 && v.y == 0.0) {
        throw GeometryError("departure angle undefined for a point at the array center");
    }
    const Point2 b = from_array.broadside_direction();
    double angle = std::atan2(cross(b, v), dot(b, v));
    if (angle <= -kPi) {
        angle = kPi;
    }
    return angle;
}

} // namespace axisbeam
