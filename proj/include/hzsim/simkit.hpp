#pragma once

#include <cstdio>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hzsim/csv_io.hpp"
#include "hzsim/network.hpp"
#include "hzsim/protocol.hpp"
#include "hzsim/rng.hpp"
#include "hzsim/zoning.hpp"

namespace hzsim {

// Rounds are 1-based; fdt/adt use kNotReached when the event never
// happened within max_rounds.
inline constexpr long long kNotReached = -1;

struct RoundMetrics {
    long long round = 0;
    int alive = 0;
    long long packets_sent = 0;
    long long packets_received_bs = 0;
    long long packets_dropped = 0;
    double energy_consumed_this_round = 0.0;
    double total_residual_energy = 0.0;
    double mean_delay = 0.0; // mean over this round's BS deliveries, 0 when none
};

struct SummaryStats {
    long long fdt_round = kNotReached; // first round ending with a dead node
    long long adt_round = kNotReached; // first round ending with no alive node
    long long total_sent = 0;
    long long total_received = 0;
    long long total_dropped = 0;
    double total_energy = 0.0; // cumulative consumed over the run
};

struct RunResult {
    std::vector<RoundMetrics> series;
    SummaryStats summary;
    double initial_energy = 0.0;
    int initial_nodes = 0;
};

inline MetricsRow to_row(const RoundMetrics& m) {
    return {static_cast<double>(m.round),
            static_cast<double>(m.alive),
            static_cast<double>(m.packets_sent),
            static_cast<double>(m.packets_received_bs),
            static_cast<double>(m.packets_dropped),
            m.energy_consumed_this_round,
            m.total_residual_energy,
            m.mean_delay};
}

inline std::vector<MetricsRow> to_rows(const std::vector<RoundMetrics>& series) {
    std::vector<MetricsRow> rows;
    rows.reserve(series.size());
    for (const RoundMetrics& m : series) rows.push_back(to_row(m));
    return rows;
}

inline void write_csv(const std::vector<RoundMetrics>& series, const std::filesystem::path& path) {
    const auto rows = to_rows(series);
    write_csv(std::span<const MetricsRow>(rows), path);
}

// Deploys a network and drives one protocol until every node is dead or
// max_rounds is reached. Deterministic for a given (config, protocol).
inline RunResult run_simulation(const SimConfig& cfg, std::string_view protocol) {
    cfg.validate();
    const Zoning z = build_zoning(cfg.field_size, cfg.eta);
    RngStream deploy_stream = RngStream::derive(cfg.seed, StreamKind::Deploy);
    std::vector<Node> nodes = deploy(cfg, z, deploy_stream);
    auto engine = make_engine(protocol, cfg, z, std::move(nodes), cfg.seed);

    RunResult result;
    result.initial_nodes = engine->alive_count();
    result.initial_energy = engine->total_residual();

    for (long long round = 1; round <= cfg.max_rounds; ++round) {
        if (engine->alive_count() == 0) break;
        engine->setup_round(round);
        const RoundOutcome out = engine->run_round(round);

        RoundMetrics m;
        m.round = round;
        m.alive = engine->alive_count();
        m.packets_sent = out.packets_sent;
        m.packets_received_bs = out.packets_received_bs;
        m.packets_dropped = out.packets_dropped;
        m.energy_consumed_this_round = out.energy_consumed;
        m.total_residual_energy = engine->total_residual();
        if (!out.delays.empty())
            m.mean_delay = std::accumulate(out.delays.begin(), out.delays.end(), 0.0) /
                           static_cast<double>(out.delays.size());
        result.series.push_back(m);

        SummaryStats& s = result.summary;
        if (s.fdt_round == kNotReached && m.alive < result.initial_nodes) s.fdt_round = round;
        if (s.adt_round == kNotReached && m.alive == 0) s.adt_round = round;
        s.total_sent += m.packets_sent;
        s.total_received += m.packets_received_bs;
        s.total_dropped += m.packets_dropped;
        s.total_energy += m.energy_consumed_this_round;
        if (m.alive == 0) break;
    }
    return result;
}

struct AggregateResult {
    std::vector<MetricsRow> mean_series;
    std::vector<SummaryStats> per_run;
    double mean_fdt = static_cast<double>(kNotReached);
    double mean_adt = static_cast<double>(kNotReached);
    double mean_total_energy = 0.0;
    int initial_nodes = 0;
};

// Averages `cfg.runs` independent runs seeded seed, seed+1, ... A run
// whose network died early keeps contributing rows to the mean: zero
// flow, zero alive, and its final residual.
inline AggregateResult aggregate_runs(const SimConfig& cfg, std::string_view protocol) {
    cfg.validate();
    AggregateResult agg;
    std::vector<RunResult> runs;
    runs.reserve(static_cast<std::size_t>(cfg.runs));
    for (int i = 0; i < cfg.runs; ++i) {
        SimConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
        runs.push_back(run_simulation(run_cfg, protocol));
        agg.per_run.push_back(runs.back().summary);
    }
    agg.initial_nodes = runs.empty() ? 0 : runs.front().initial_nodes;

    std::size_t longest = 0;
    for (const RunResult& r : runs) longest = std::max(longest, r.series.size());

    agg.mean_series.assign(longest, MetricsRow{});
    const double inv_runs = 1.0 / static_cast<double>(cfg.runs);
    for (std::size_t i = 0; i < longest; ++i) {
        MetricsRow& row = agg.mean_series[i];
        row.round = static_cast<double>(i + 1);
        for (const RunResult& r : runs) {
            if (i < r.series.size()) {
                const MetricsRow m = to_row(r.series[i]);
                row.alive += m.alive;
                row.sent += m.sent;
                row.received += m.received;
                row.dropped += m.dropped;
                row.energy_consumed += m.energy_consumed;
                row.residual += m.residual;
                row.mean_delay += m.mean_delay;
            } else if (!r.series.empty()) {
                row.residual += r.series.back().total_residual_energy;
            }
        }
        row.alive *= inv_runs;
        row.sent *= inv_runs;
        row.received *= inv_runs;
        row.dropped *= inv_runs;
        row.energy_consumed *= inv_runs;
        row.residual *= inv_runs;
        row.mean_delay *= inv_runs;
    }

    auto mean_of = [&](auto field_of, const char* name) -> double {
        double sum = 0.0;
        int counted = 0;
        for (const SummaryStats& s : agg.per_run) {
            const long long v = field_of(s);
            if (v == kNotReached) {
                std::fprintf(stderr,
                             "warning: %s not reached within max_rounds for one run of %.*s; "
                             "excluded from the mean\n",
                             name, static_cast<int>(protocol.size()), protocol.data());
                continue;
            }
            sum += static_cast<double>(v);
            counted += 1;
        }
        return counted == 0 ? static_cast<double>(kNotReached)
                            : sum / static_cast<double>(counted);
    };
    agg.mean_fdt = mean_of([](const SummaryStats& s) { return s.fdt_round; }, "FDT");
    agg.mean_adt = mean_of([](const SummaryStats& s) { return s.adt_round; }, "ADT");
    for (const SummaryStats& s : agg.per_run) agg.mean_total_energy += s.total_energy;
    agg.mean_total_energy *= inv_runs;
    return agg;
}

} // namespace hzsim
