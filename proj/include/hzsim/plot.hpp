#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hzsim/csv_io.hpp"
#include "hzsim/errors.hpp"

namespace hzsim {

// One protocol's metric series, as plotted: a legend label plus rows.
struct LabeledSeries {
    std::string label;
    std::vector<MetricsRow> rows;
    int initial_nodes = 0;
};

namespace detail {

inline constexpr int kPlotW = 960;
inline constexpr int kPlotH = 600;
inline constexpr int kMarginL = 80;
inline constexpr int kMarginR = 180;
inline constexpr int kMarginT = 50;
inline constexpr int kMarginB = 60;
inline constexpr std::size_t kMaxPointsPerTrace = 2000;

inline const char* trace_color(std::size_t i) {
    static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                               "#9467bd", "#ff7f0e", "#8c564b"};
    return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

inline std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// Renders one chart: every series' chosen metric vs round number.
inline std::string render_chart(std::span<const LabeledSeries> series, const std::string& title,
                                const std::string& y_label,
                                const std::function<double(const LabeledSeries&, std::size_t)>& y_of) {
    double x_max = 1.0;
    double y_max = 0.0;
    for (const LabeledSeries& s : series) {
        if (!s.rows.empty()) x_max = std::max(x_max, s.rows.back().round);
        for (std::size_t i = 0; i < s.rows.size(); ++i) y_max = std::max(y_max, y_of(s, i));
    }
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;

    const double plot_w = kPlotW - kMarginL - kMarginR;
    const double plot_h = kPlotH - kMarginT - kMarginB;
    auto sx = [&](double round) { return kMarginL + (round / x_max) * plot_w; };
    auto sy = [&](double v) { return kMarginT + plot_h - (v / y_max) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kPlotW) +
           "\" height=\"" + std::to_string(kPlotH) + "\" viewBox=\"0 0 " +
           std::to_string(kPlotW) + " " + std::to_string(kPlotH) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kMarginL) + "\" y=\"28\" font-family=\"sans-serif\" "
           "font-size=\"18\" fill=\"#222\">" + title + "</text>\n";

    // Axes, ticks, and grid lines.
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n";
    const int n_ticks = 5;
    for (int t = 0; t <= n_ticks; ++t) {
        const double fx = static_cast<double>(t) / n_ticks;
        const double xr = fx * x_max;
        const double px = sx(xr);
        svg += "<line x1=\"" + short_number(px) + "\" y1=\"" + std::to_string(kMarginT) +
               "\" x2=\"" + short_number(px) + "\" y2=\"" +
               std::to_string(kPlotH - kMarginB) + "\" stroke=\"#e5e5e5\"/>\n";
        svg += "<text x=\"" + short_number(px) + "\" y=\"" +
               std::to_string(kPlotH - kMarginB + 18) + "\" text-anchor=\"middle\">" +
               short_number(xr) + "</text>\n";

        const double yv = fx * y_max;
        const double py = sy(yv);
        svg += "<line x1=\"" + std::to_string(kMarginL) + "\" y1=\"" + short_number(py) +
               "\" x2=\"" + std::to_string(kPlotW - kMarginR) + "\" y2=\"" + short_number(py) +
               "\" stroke=\"#e5e5e5\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginL - 8) + "\" y=\"" + short_number(py + 4) +
               "\" text-anchor=\"end\">" + short_number(yv) + "</text>\n";
    }
    svg += "<line x1=\"" + std::to_string(kMarginL) + "\" y1=\"" + std::to_string(kMarginT) +
           "\" x2=\"" + std::to_string(kMarginL) + "\" y2=\"" + std::to_string(kPlotH - kMarginB) +
           "\" stroke=\"#222\"/>\n";
    svg += "<line x1=\"" + std::to_string(kMarginL) + "\" y1=\"" +
           std::to_string(kPlotH - kMarginB) + "\" x2=\"" + std::to_string(kPlotW - kMarginR) +
           "\" y2=\"" + std::to_string(kPlotH - kMarginB) + "\" stroke=\"#222\"/>\n";
    svg += "<text x=\"" + std::to_string(kMarginL + static_cast<int>(plot_w) / 2) + "\" y=\"" +
           std::to_string(kPlotH - 14) + "\" text-anchor=\"middle\">Round</text>\n";
    svg += "<text x=\"20\" y=\"" + std::to_string(kMarginT + static_cast<int>(plot_h) / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           std::to_string(kMarginT + static_cast<int>(plot_h) / 2) + ")\">" + y_label +
           "</text>\n";
    svg += "</g>\n";

    // Traces, downsampled to a bounded point count.
    for (std::size_t si = 0; si < series.size(); ++si) {
        const LabeledSeries& s = series[si];
        const std::size_t n = s.rows.size();
        const std::size_t stride = n > kMaxPointsPerTrace ? (n + kMaxPointsPerTrace - 1) / kMaxPointsPerTrace : 1;
        std::string pts;
        for (std::size_t i = 0; i < n; i += stride) {
            pts += short_number(sx(s.rows[i].round)) + "," + short_number(sy(y_of(s, i))) + " ";
        }
        if (n > 0 && (n - 1) % stride != 0)
            pts += short_number(sx(s.rows[n - 1].round)) + "," +
                   short_number(sy(y_of(s, n - 1))) + " ";
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(trace_color(si)) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    }

    // Legend.
    svg += "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const int ly = kMarginT + 10 + static_cast<int>(si) * 22;
        svg += "<line x1=\"" + std::to_string(kPlotW - kMarginR + 16) + "\" y1=\"" +
               std::to_string(ly) + "\" x2=\"" + std::to_string(kPlotW - kMarginR + 44) +
               "\" y2=\"" + std::to_string(ly) + "\" stroke=\"" +
               std::string(trace_color(si)) + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + std::to_string(kPlotW - kMarginR + 52) + "\" y=\"" +
               std::to_string(ly + 4) + "\">" + series[si].label + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace detail

// Writes seven SVG charts (per-round packet flows, alive/dead node counts,
// mean delay, cumulative energy) with every series overlaid. All series
// are validated before the first file is touched.
inline std::vector<std::filesystem::path> emit_plots(std::span<const LabeledSeries> series,
                                                     const std::filesystem::path& out_dir) {
    if (series.empty()) throw IoError("no series to plot");
    for (const LabeledSeries& s : series)
        if (s.rows.empty()) throw IoError("series '" + s.label + "' has no rounds to plot");

    // Cumulative energy per series, so the energy chart shows consumption to date.
    std::vector<std::vector<double>> cum_energy(series.size());
    for (std::size_t si = 0; si < series.size(); ++si) {
        double acc = 0.0;
        cum_energy[si].reserve(series[si].rows.size());
        for (const MetricsRow& r : series[si].rows) {
            acc += r.energy_consumed;
            cum_energy[si].push_back(acc);
        }
    }
    auto series_index = [&](const LabeledSeries& s) {
        return static_cast<std::size_t>(&s - series.data());
    };

    struct Chart {
        const char* file;
        const char* title;
        const char* y_label;
        std::function<double(const LabeledSeries&, std::size_t)> y_of;
    };
    const std::vector<Chart> charts = {
        {"packets_sent.svg", "Packets sent per round", "Packets (count)",
         [](const LabeledSeries& s, std::size_t i) { return s.rows[i].sent; }},
        {"packets_dropped.svg", "Packets dropped per round", "Packets (count)",
         [](const LabeledSeries& s, std::size_t i) { return s.rows[i].dropped; }},
        {"packets_received.svg", "Packets received at the base station per round",
         "Packets (count)",
         [](const LabeledSeries& s, std::size_t i) { return s.rows[i].received; }},
        {"alive_nodes.svg", "Alive nodes per round", "Nodes (count)",
         [](const LabeledSeries& s, std::size_t i) { return s.rows[i].alive; }},
        {"dead_nodes.svg", "Dead nodes per round", "Nodes (count)",
         [](const LabeledSeries& s, std::size_t i) {
             return static_cast<double>(s.initial_nodes) - s.rows[i].alive;
         }},
        {"delay.svg", "Mean propagation delay per round", "Delay (s)",
         [](const LabeledSeries& s, std::size_t i) { return s.rows[i].mean_delay; }},
        {"energy.svg", "Cumulative energy consumed", "Energy (J)",
         [&](const LabeledSeries& s, std::size_t i) { return cum_energy[series_index(s)][i]; }},
    };

    std::vector<std::filesystem::path> written;
    for (const Chart& c : charts) {
        const std::string svg = detail::render_chart(series, c.title, c.y_label, c.y_of);
        const std::filesystem::path path = out_dir / c.file;
        std::ofstream out(path);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << svg;
        if (!out) throw IoError("write failed for '" + path.string() + "'");
        written.push_back(path);
    }
    return written;
}

} // namespace hzsim
