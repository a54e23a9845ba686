#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hzsim/config_io.hpp"
#include "hzsim/csv_io.hpp"
#include "hzsim/plot.hpp"
#include "hzsim/simkit.hpp"

namespace hzsim {

namespace detail {

inline void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

inline SimConfig load_or_default(const std::filesystem::path& config_path) {
    if (config_path.empty()) {
        SimConfig cfg;
        cfg.validate();
        return cfg;
    }
    return load_config_file(config_path);
}

inline std::string format_round_stat(long long v) {
    return v == kNotReached ? std::string("not reached") : std::to_string(v);
}

inline std::string format_round_stat(double v) {
    return v == static_cast<double>(kNotReached) ? std::string("not reached") : format_double(v);
}

} // namespace detail

struct RunOptions {
    std::filesystem::path config_path; // empty = built-in defaults
    std::string protocol = "mbehzad";
    std::optional<std::uint64_t> seed;
    std::optional<long long> rounds;
    std::filesystem::path out_dir = ".";
    bool plots = false;
};

// Single-protocol, single-seed simulation: writes <out>/<protocol>.csv
// (plus charts when requested) and logs a summary.
inline int run_command(const RunOptions& opt, std::ostream& log) {
    SimConfig cfg = detail::load_or_default(opt.config_path);
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.rounds) cfg.max_rounds = *opt.rounds;
    cfg.validate();

    const RunResult result = run_simulation(cfg, opt.protocol);

    detail::ensure_dir(opt.out_dir);
    const std::filesystem::path csv_path = opt.out_dir / (opt.protocol + ".csv");
    write_csv(result.series, csv_path);

    if (opt.plots) {
        const std::vector<LabeledSeries> series = {
            {opt.protocol, to_rows(result.series), result.initial_nodes}};
        emit_plots(series, opt.out_dir);
    }

    const SummaryStats& s = result.summary;
    log << opt.protocol << ": " << result.series.size() << " rounds, seed " << cfg.seed << "\n"
        << "  first node death: round " << detail::format_round_stat(s.fdt_round) << "\n"
        << "  network death:    round " << detail::format_round_stat(s.adt_round) << "\n"
        << "  packets sent " << s.total_sent << ", received at BS " << s.total_received
        << ", dropped " << s.total_dropped << "\n"
        << "  energy consumed " << format_double(s.total_energy) << " J of "
        << format_double(result.initial_energy) << " J\n"
        << "  wrote " << csv_path.string() << "\n";
    return 0;
}

struct CompareOptions {
    std::filesystem::path config_path; // empty = built-in defaults
    std::vector<std::string> protocols = {"mbehzad", "leach", "direct"};
    std::optional<int> runs;
    std::filesystem::path out_dir = ".";
    bool plots = false;
};

// Multi-run comparison: per protocol, averages cfg.runs seeded runs and
// writes <out>/<protocol>_mean.csv; cross-protocol lifetime statistics go
// to <out>/summary.csv.
inline int compare_command(const CompareOptions& opt, std::ostream& log) {
    SimConfig cfg = detail::load_or_default(opt.config_path);
    if (opt.runs) cfg.runs = *opt.runs;
    cfg.validate();
    if (opt.protocols.empty()) throw ConfigError("compare needs at least one protocol");

    detail::ensure_dir(opt.out_dir);

    std::vector<LabeledSeries> plot_series;
    std::string summary_text = "protocol,run,seed,fdt,adt,total_sent,total_received,"
                               "total_dropped,total_energy\n";
    for (const std::string& protocol : opt.protocols) {
        const AggregateResult agg = aggregate_runs(cfg, protocol);

        const std::filesystem::path csv_path = opt.out_dir / (protocol + "_mean.csv");
        write_csv(std::span<const MetricsRow>(agg.mean_series), csv_path);
        plot_series.push_back({protocol, agg.mean_series, agg.initial_nodes});

        for (std::size_t i = 0; i < agg.per_run.size(); ++i) {
            const SummaryStats& s = agg.per_run[i];
            summary_text += protocol + "," + std::to_string(i + 1) + "," +
                            std::to_string(cfg.seed + i) + "," + std::to_string(s.fdt_round) +
                            "," + std::to_string(s.adt_round) + "," +
                            std::to_string(s.total_sent) + "," + std::to_string(s.total_received) +
                            "," + std::to_string(s.total_dropped) + "," +
                            format_double(s.total_energy) + "\n";
        }
        summary_text += protocol + ",mean,," + format_double(agg.mean_fdt) + "," +
                        format_double(agg.mean_adt) + ",,,," +
                        format_double(agg.mean_total_energy) + "\n";

        log << protocol << ": mean first-death round " << detail::format_round_stat(agg.mean_fdt)
            << ", mean network-death round " << detail::format_round_stat(agg.mean_adt) << " ("
            << cfg.runs << " runs)\n";
    }

    const std::filesystem::path summary_path = opt.out_dir / "summary.csv";
    std::ofstream out(summary_path);
    if (!out) throw IoError("cannot open '" + summary_path.string() + "' for writing");
    out << summary_text;
    if (!out) throw IoError("write failed for '" + summary_path.string() + "'");

    if (opt.plots) emit_plots(plot_series, opt.out_dir);
    log << "wrote " << summary_path.string() << "\n";
    return 0;
}

} // namespace hzsim
