#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "hzsim/errors.hpp"
#include "hzsim/network.hpp"

namespace hzsim {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline double to_double(std::string_view key, std::string_view value) {
    double v = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError("config key '" + std::string(key) + "': expected a number, got '" +
                          std::string(value) + "'");
    return v;
}

inline long long to_int(std::string_view key, std::string_view value) {
    long long v = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError("config key '" + std::string(key) + "': expected an integer, got '" +
                          std::string(value) + "'");
    return v;
}

inline bool to_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config key '" + std::string(key) + "': expected true/false, got '" +
                      std::string(value) + "'");
}

} // namespace detail

// Loads a flat `key = value` file ('#' starts a comment). Every key
// mirrors a SimConfig field; unknown keys are a hard error so typos
// cannot silently fall back to defaults. The result is validated.
inline SimConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");

    SimConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = line;
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = detail::trim(sv);
        if (sv.empty()) continue;

        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + std::string(sv) + "'");
        const std::string_view key = detail::trim(sv.substr(0, eq));
        const std::string_view value = detail::trim(sv.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");

        using namespace detail;
        if (key == "field_size") cfg.field_size = to_double(key, value);
        else if (key == "eta") cfg.eta = static_cast<int>(to_int(key, value));
        else if (key == "base_energy") cfg.base_energy = to_double(key, value);
        else if (key == "alpha") cfg.alpha = to_double(key, value);
        else if (key == "e_elec") cfg.radio.e_elec = to_double(key, value);
        else if (key == "eps_fs") cfg.radio.eps_fs = to_double(key, value);
        else if (key == "eps_mp") cfg.radio.eps_mp = to_double(key, value);
        else if (key == "e_da") cfg.radio.e_da = to_double(key, value);
        else if (key == "packet_bits") cfg.packet_bits = static_cast<int>(to_int(key, value));
        else if (key == "hard_threshold") cfg.hard_threshold = to_double(key, value);
        else if (key == "soft_threshold") cfg.soft_threshold = to_double(key, value);
        else if (key == "attr_min") cfg.attr_min = to_double(key, value);
        else if (key == "attr_max") cfg.attr_max = to_double(key, value);
        else if (key == "p_drop") cfg.channel.p_drop = to_double(key, value);
        else if (key == "light_speed") cfg.channel.light_speed = to_double(key, value);
        else if (key == "p_ch") cfg.p_ch = to_double(key, value);
        else if (key == "max_rounds") cfg.max_rounds = to_int(key, value);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
        else if (key == "runs") cfg.runs = static_cast<int>(to_int(key, value));
        else if (key == "tier1_drops") cfg.tier1_drops = to_bool(key, value);
        else if (key == "leach_gated") cfg.leach_gated = to_bool(key, value);
        else if (key == "soft_mode") {
            if (value == "delta") cfg.soft_mode = SoftMode::Delta;
            else if (value == "literal") cfg.soft_mode = SoftMode::Literal;
            else
                throw ConfigError("config key 'soft_mode': expected delta|literal, got '" +
                                  std::string(value) + "'");
        } else if (key == "next_hop_mode") {
            if (value == "adjacent_min") cfg.next_hop_mode = NextHopMode::AdjacentMin;
            else if (value == "fixed") cfg.next_hop_mode = NextHopMode::Fixed;
            else
                throw ConfigError("config key 'next_hop_mode': expected adjacent_min|fixed, got '" +
                                  std::string(value) + "'");
        } else if (key.size() == 8 && key.starts_with("count_m") && key[7] >= '1' &&
                   key[7] <= '9') {
            cfg.counts_per_region[key[7] - '1'] = static_cast<int>(to_int(key, value));
        } else {
            throw ConfigError("unknown config key '" + std::string(key) + "' on line " +
                              std::to_string(line_no));
        }
    }
    cfg.validate();
    return cfg;
}

} // namespace hzsim
