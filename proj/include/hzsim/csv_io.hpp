#pragma once

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hzsim/errors.hpp"

namespace hzsim {

// One CSV row of per-round metrics. Fields are doubles so the same shape
// serves both single runs (integral counts) and multi-run means.
struct MetricsRow {
    double round = 0;
    double alive = 0;
    double sent = 0;
    double received = 0;
    double dropped = 0;
    double energy_consumed = 0;
    double residual = 0;
    double mean_delay = 0;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "round,alive,sent,received,dropped,energy_consumed,residual,mean_delay";

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view text) {
    double v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw IoError("malformed numeric field '" + std::string(text) + "'");
    return v;
}

inline void write_csv(std::span<const MetricsRow> rows, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << kCsvHeader << '\n';
    for (const MetricsRow& r : rows) {
        out << format_double(r.round) << ',' << format_double(r.alive) << ','
            << format_double(r.sent) << ',' << format_double(r.received) << ','
            << format_double(r.dropped) << ',' << format_double(r.energy_consumed) << ','
            << format_double(r.residual) << ',' << format_double(r.mean_delay) << '\n';
    }
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

inline std::vector<MetricsRow> parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");

    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV file '" + path.string() + "'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw IoError("unexpected CSV header in '" + path.string() + "': " + line);

    std::vector<MetricsRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<double, 8> fields{};
        std::string_view rest = line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const std::size_t comma = rest.find(',');
            const bool last = i + 1 == fields.size();
            if (last != (comma == std::string_view::npos))
                throw IoError("expected 8 fields per row in '" + path.string() + "': " + line);
            fields[i] = parse_double(last ? rest : rest.substr(0, comma));
            if (!last) rest = rest.substr(comma + 1);
        }
        rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5],
                        fields[6], fields[7]});
    }
    return rows;
}

} // namespace hzsim
