// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include <doctest.h>

#include "axisbeam/doppler.hpp"
#include "axisbeam/errors.hpp"
#include "test_support.hpp"

using namespace axisbeam;

namespace {

DopplerParams params_with(double gamma)
{
    DopplerParams p;
    p.gamma = gamma;
    return p;
}

// Spread of shifts k*cos(phi) over every direction phi of the lobe
// [theta - gamma, theta + gamma], by sampling (endpoints and 0 included).
double swept_spread(double theta, const DopplerParams& p)
{
    const double k = p.ue_speed * p.carrier_frequency_hz / p.light_speed;
    const double lo = theta - p.gamma;
    const double hi = theta + p.gamma;
    double mx = std::max(std::cos(lo), std::cos(hi));
    double mn = std::min(std::cos(lo), std::cos(hi));
    if (lo <= 0.0 && hi >= 0.0) {
        mx = 1.0;
    }
    constexpr int samples = 20000;
    for (int i = 0; i <= samples; ++i) {
        const double c = std::cos(lo + (hi - lo) * i / samples);
        mx = std::max(mx, c);
        mn = std::min(mn, c);
    }
    return k * (mx - mn);
}

double squared(double theta, const DopplerParams& p)
{
    const double s = worst_case_spread(theta, p).spread_hz;
    return s * s;
}

} // namespace

TEST_CASE("doppler_shift")
{
    const DopplerParams p;
    CHECK(doppler_shift(0.0, p) == doctest::Approx(1000.6922855944562).epsilon(1e-14));
    CHECK(p.max_shift_hz() == doctest::Approx(1000.6922855944562).epsilon(1e-14));
    CHECK(std::abs(doppler_shift(kHalfPi, p)) < 1e-10);
    CHECK(doppler_shift(kPi, p) == doctest::Approx(-1000.6922855944562));
    CHECK(doppler_shift(kPi / 3, p) == doctest::Approx(500.3461427972281));
}

TEST_CASE("spread branch examples")
{
    const DopplerParams p = params_with(kPi / 6);
    const double k = p.max_shift_hz();
    CHECK(spread_inside(0.0, p) == doctest::Approx(k * (1 - std::cos(kPi / 6))));
    CHECK(spread_outside(kHalfPi, p) == doctest::Approx(k));
    CHECK(spread_outside(-kHalfPi, p) == doctest::Approx(k));
    CHECK(worst_case_spread(0.0, p).branch == LobeBranch::InsideLobe);
    CHECK(worst_case_spread(1.0, p).branch == LobeBranch::OutsideLobe);
    CHECK_THROWS_AS(spread_outside(0.1, p), ValidationError);
    CHECK_THROWS_AS(spread_inside(0.6, p), ValidationError);
    CHECK(std::string(branch_keyword(LobeBranch::InsideLobe)) == "inside");
    CHECK(std::string(branch_keyword(LobeBranch::OutsideLobe)) == "outside");
}

TEST_CASE("branches meet at the seam")
{
    for (double gamma : {0.01, 0.2, kPi / 6, 0.9, 1.4, 1.57}) {
        const DopplerParams p = params_with(gamma);
        for (double seam : {gamma, -gamma}) {
            const double inside = spread_inside(seam, p);
            const double outside = spread_outside(seam, p);
            CHECK(inside == doctest::Approx(outside).epsilon(1e-12));
            CHECK(inside == doctest::Approx(2 * p.max_shift_hz() * std::sin(gamma) * std::sin(gamma)).epsilon(1e-12));
            CHECK_THROWS_AS(squared_spread_gradient(seam, p), ValidationError);
        }
    }
}

TEST_CASE("worst_case_spread matches the swept lobe")
{
    testing::Rng rng(41);
    for (int i = 0; i < 400; ++i) {
        const DopplerParams p = params_with(rng.uniform(0.01, kHalfPi));
        const double theta = rng.uniform(-kHalfPi, kHalfPi);
        CHECK(worst_case_spread(theta, p).spread_hz == doctest::Approx(swept_spread(theta, p)).epsilon(1e-7));
    }
}

TEST_CASE("full-width lobe is inside everywhere")
{
    const DopplerParams p = params_with(kHalfPi);
    for (double theta : {-kHalfPi, -1.0, 0.0, 0.7, kHalfPi}) {
        const auto r = worst_case_spread(theta, p);
        CHECK(r.branch == LobeBranch::InsideLobe);
        CHECK(r.spread_hz == doctest::Approx(spread_inside(theta, p)));
        CHECK(r.spread_hz == doctest::Approx(swept_spread(theta, p)).epsilon(1e-7));
    }
    CHECK(worst_case_spread(0.0, p).spread_hz == doctest::Approx(p.max_shift_hz()));
    CHECK(worst_case_spread(kHalfPi, p).spread_hz == doctest::Approx(2 * p.max_shift_hz()));
}

TEST_CASE("squared_spread_gradient agrees with central differences")
{
    testing::Rng rng(42);
    int checked = 0;
    while (checked < 300) {
        const DopplerParams p = params_with(rng.uniform(0.05, 1.5));
        const double theta = rng.uniform(-kHalfPi, kHalfPi);
        constexpr double h = 1e-6;
        // stay clear of the kinks at 0 and +-gamma and the sector ends
        if (std::abs(theta) < 1e-3 || std::abs(std::abs(theta) - p.gamma) < 1e-3 || kHalfPi - std::abs(theta) < 1e-3) {
            continue;
        }
        const double fd = (squared(theta + h, p) - squared(theta - h, p)) / (2 * h);
        const double g = squared_spread_gradient(theta, p);
        CHECK(g == doctest::Approx(fd).epsilon(1e-6).scale(p.max_shift_hz() * p.max_shift_hz() * 1e-6));
        ++checked;
    }
}

TEST_CASE("gradient at the travel axis is the right derivative")
{
    const DopplerParams p = params_with(kPi / 6);
    constexpr double h = 1e-7;
    const double right = (squared(h, p) - squared(0.0, p)) / h;
    CHECK(squared_spread_gradient(0.0, p) == doctest::Approx(right).epsilon(1e-5));
    CHECK(squared_spread_gradient(0.0, p) > 0.0);
}

TEST_CASE("spread grows with the offset from the travel axis")
{
    for (double gamma : {0.05, kPi / 6, 1.2, kHalfPi}) {
        const DopplerParams p = params_with(gamma);
        double previous = worst_case_spread(0.0, p).spread_hz;
        for (int i = 1; i <= 2000; ++i) {
            const double theta = kHalfPi * i / 2000.0;
            const double s = worst_case_spread(theta, p).spread_hz;
            CHECK(s >= previous - 1e-9);
            CHECK(worst_case_spread(-theta, p).spread_hz == doctest::Approx(s).epsilon(1e-12));
            previous = s;
        }
    }
}

TEST_CASE("grid search lands on the closed-form optimum")
{
    for (double gamma : {0.02, kPi / 6, 1.0, kHalfPi}) {
        DopplerParams p = params_with(gamma);
        p.theta_mov = 0.3;
        const auto best = grid_argmin(p, 10001);
        CHECK(std::abs(best.theta) <= best.grid_step);
        CHECK(best.spread_hz == doctest::Approx(worst_case_spread(0.0, p).spread_hz));
        CHECK(optimal_pointing(p) == 0.3);
    }
    CHECK_THROWS_AS(grid_argmin(DopplerParams{}, 1), ValidationError);
}

TEST_CASE("ula_halfwidth")
{
    CHECK(ula_halfwidth(64) == doctest::Approx(0.031255088499495154).epsilon(1e-14));
    CHECK(ula_halfwidth(2) == doctest::Approx(kHalfPi));
    CHECK(ula_halfwidth(4) == doctest::Approx(kPi / 6));
    CHECK_THROWS_AS(ula_halfwidth(1), ValidationError);
}

TEST_CASE("Doppler parameter validation")
{
    CHECK_THROWS_AS(worst_case_spread(0.0, params_with(0.0)), ValidationError);
    CHECK_THROWS_AS(worst_case_spread(0.0, params_with(1.7)), ValidationError);
    CHECK_THROWS_AS(worst_case_spread(1.6, params_with(0.3)), ValidationError);
    DopplerParams p;
    p.ue_speed = -1;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
