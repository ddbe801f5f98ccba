// SPDX-License-Identifier: Apache-2.0
#include "axisbeam/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "axisbeam/errors.hpp"

namespace axisbeam {

std::string format_number(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

void write_trace_csv(std::ostream& out, const std::vector<SnrTrace>& traces)
{
    if (traces.empty()) {
        throw ValidationError("no traces to write");
    }
    out << "step,displacement_m";
    for (const SnrTrace& t : traces) {
        out << ",snr_db_" << t.strategy.name();
    }
    out << '\n';
    const std::size_t steps = traces.front().displacements.size();
    for (std::size_t k = 0; k < steps; ++k) {
        out << k << ',' << format_number(traces.front().displacements[k]);
        for (const SnrTrace& t : traces) {
            out << ',' << format_number(t.snr_db[k]);
        }
        out << '\n';
    }
}

std::vector<DopplerRow> doppler_rows(const DopplerParams& params, std::size_t grid_size)
{
    params.validate();
    if (grid_size < 2) {
        throw ValidationError("Doppler grid needs at least two points");
    }
    std::vector<DopplerRow> rows;
    rows.reserve(grid_size + 4);
    const double step = kPi / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double theta = std::min(kHalfPi, -kHalfPi + step * static_cast<double>(i));
        const SpreadResult r = worst_case_spread(theta, params);
        rows.push_back({theta, r.spread_hz, r.branch, false});
    }
    if (params.gamma < kHalfPi) {
        for (const double seam : {-params.gamma, params.gamma}) {
            rows.push_back({seam, spread_inside(seam, params), LobeBranch::InsideLobe, true});
            rows.push_back({seam, spread_outside(seam, params), LobeBranch::OutsideLobe, true});
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const DopplerRow& a, const DopplerRow& b) { return a.theta < b.theta; });
    return rows;
}

void write_doppler_csv(std::ostream& out, const std::vector<DopplerRow>& rows)
{
    out << "theta_rad,spread_hz,branch,seam\n";
    for (const DopplerRow& r : rows) {
        out << format_number(r.theta) << ',' << format_number(r.spread_hz) << ',' << branch_keyword(r.branch) << ','
            << (r.seam ? 1 : 0) << '\n';
    }
}

void write_montecarlo_csv(std::ostream& out, const MonteCarloReport& report)
{
    out << "strategy,evaluated,not_reached,failed,median_m,q25_m,q75_m\n";
    for (const StrategySummary& s : report.summary) {
        out << s.name << ',' << s.evaluated << ',' << s.not_reached << ',' << report.failed << ','
            << format_number(s.median) << ',' << format_number(s.q25) << ',' << format_number(s.q75) << '\n';
    }
}

void write_montecarlo_trials_csv(std::ostream& out, const MonteCarloReport& report,
                                 const std::vector<std::string>& names)
{
    out << "trial,seed,failed";
    for (const std::string& n : names) {
        out << ',' << n << "_coherence_m";
    }
    out << '\n';
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        const TrialOutcome& o = report.outcomes[i];
        out << i << ',' << o.seed << ',' << (o.failed ? 1 : 0);
        for (const auto& c : o.coherence) {
            out << ',' << (o.failed ? std::string("nan") : format_number(c.value_or(INFINITY)));
        }
        out << '\n';
    }
}

void write_snr_svg(std::ostream& out, const std::vector<SnrTrace>& traces)
{
    constexpr double width = 720.0;
    constexpr double height = 420.0;
    constexpr double left = 60.0;
    constexpr double right = 170.0;
    constexpr double top = 20.0;
    constexpr double bottom = 50.0;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

    double x_max = 0.0;
    double y_min = INFINITY;
    double y_max = -INFINITY;
    for (const SnrTrace& t : traces) {
        x_max = std::max(x_max, t.displacements.back());
        for (double v : t.snr_db) {
            if (std::isfinite(v)) {
                y_min = std::min(y_min, v);
                y_max = std::max(y_max, v);
            }
        }
    }
    if (!(x_max > 0.0)) {
        x_max = 1.0;
    }
    if (!std::isfinite(y_min)) {
        y_min = -1.0;
        y_max = 1.0;
    }
    y_min = std::floor(y_min / 5.0) * 5.0;
    y_max = std::ceil(y_max / 5.0) * 5.0 + (y_max == y_min ? 5.0 : 0.0);
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto sx = [&](double x) { return left + pw * x / x_max; };
    auto sy = [&](double y) { return top + ph * (1.0 - (y - y_min) / (y_max - y_min)); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_max * i / 5.0;
        const double yv = y_min + (y_max - y_min) * i / 5.0;
        out << "<text x=\"" << format_number(sx(xv)) << "\" y=\"" << height - bottom + 16
            << "\" text-anchor=\"middle\">" << format_number(std::round(xv * 1e4) / 10.0) << "</text>\n";
        out << "<text x=\"" << left - 6 << "\" y=\"" << format_number(sy(yv) + 4)
            << "\" text-anchor=\"end\">" << format_number(std::round(yv * 10.0) / 10.0) << "</text>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">displacement [mm]</text>\n";
    out << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
        << ")\" text-anchor=\"middle\">SNR [dB]</text>\n";
    for (std::size_t s = 0; s < traces.size(); ++s) {
        const char* colour = palette[s % (sizeof palette / sizeof palette[0])];
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        const SnrTrace& t = traces[s];
        for (std::size_t k = 0; k < t.snr_db.size(); ++k) {
            const double y = std::isfinite(t.snr_db[k]) ? t.snr_db[k] : y_min;
            out << (k ? " " : "") << format_number(sx(t.displacements[k])) << ',' << format_number(sy(y));
        }
        out << "\"/>\n";
        const double ly = top + 14.0 + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << width - right + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << width - right + 30
            << "\" y2=\"" << ly - 4 << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << width - right + 36 << "\" y=\"" << ly << "\">" << t.strategy.name() << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace axisbeam
