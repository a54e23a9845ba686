#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hzsim/channel.hpp"
#include "hzsim/errors.hpp"
#include "hzsim/radio.hpp"
#include "hzsim/rng.hpp"
#include "hzsim/zoning.hpp"

namespace hzsim {

enum class Role { Member, ClusterHead };

struct Node {
    int id = 0;
    Point pos;
    RegionId region = RegionId::M1;
    double initial_energy = 0.0;
    double residual_energy = 0.0;
    bool alive = false;
    Role role = Role::Member;
    bool has_sent_before = false;
    double last_sent_value = 0.0;
};

enum class SoftMode { Delta, Literal };
enum class NextHopMode { AdjacentMin, Fixed };

struct SimConfig {
    double field_size = 100.0;
    int eta = 3;
    // Node counts per region, index = region_index(RegionId).
    std::array<int, kRegionCount> counts_per_region = {20, 10, 10, 10, 10, 10, 10, 10, 10};

    double base_energy = 0.7; // J; corona-1 nodes get base_energy * (1 + alpha)
    double alpha = 0.5;

    RadioParams radio;
    ChannelParams channel;

    int packet_bits = 4000;

    // Sensed-attribute process and reactive thresholds. The attribute is
    // drawn uniformly in [attr_min, attr_max] each round.
    double hard_threshold = 193.0;
    double soft_threshold = 0.0;
    double attr_min = 0.0;
    double attr_max = 200.0;
    SoftMode soft_mode = SoftMode::Delta;

    bool tier1_drops = true; // member->CH hops also pass through the lossy channel
    NextHopMode next_hop_mode = NextHopMode::AdjacentMin;

    double p_ch = 0.05;        // LEACH self-election probability
    bool leach_gated = false;  // apply threshold gating to LEACH members

    long long max_rounds = 160000;
    std::uint64_t seed = 1;
    int runs = 5;

    int total_nodes() const {
        int n = 0;
        for (int c : counts_per_region) n += c;
        return n;
    }

    void validate() const;
};

inline void SimConfig::validate() const {
    if (!(field_size > 0.0)) throw ConfigError("field_size must be > 0");
    if (eta < 1 || eta > 3) throw ConfigError("eta must be in [1, 3]");
    for (int i = 0; i < kRegionCount; ++i) {
        if (counts_per_region[i] < 0)
            throw ConfigError("count for " + to_string(region_from_index(i)) + " must be >= 0");
        if (counts_per_region[i] > 0 && corona_of(region_from_index(i)) > eta)
            throw ConfigError("count for " + to_string(region_from_index(i)) +
                              " must be 0 when eta=" + std::to_string(eta));
    }
    if (base_energy < 0.0) throw ConfigError("base_energy must be >= 0");
    if (alpha < 0.0) throw ConfigError("alpha must be >= 0");
    if (radio.e_elec <= 0.0 || radio.eps_fs <= 0.0 || radio.eps_mp <= 0.0 || radio.e_da <= 0.0)
        throw ConfigError("radio parameters must be > 0");
    if (channel.p_drop < 0.0 || channel.p_drop > 1.0) throw ConfigError("p_drop must be in [0, 1]");
    if (channel.light_speed <= 0.0) throw ConfigError("light_speed must be > 0");
    if (packet_bits < 0) throw ConfigError("packet_bits must be >= 0");
    if (!(attr_min < attr_max)) throw ConfigError("attr_min must be < attr_max");
    if (soft_threshold < 0.0) throw ConfigError("soft_threshold must be >= 0");
    if (!(p_ch > 0.0 && p_ch <= 1.0)) throw ConfigError("p_ch must be in (0, 1]");
    if (max_rounds < 0) throw ConfigError("max_rounds must be >= 0");
    if (runs < 1) throw ConfigError("runs must be >= 1");
}

// Initial energy per the corona-1 heterogeneity rule.
inline double initial_energy(const SimConfig& cfg, RegionId region) {
    return region == RegionId::M1 ? cfg.base_energy * (1.0 + cfg.alpha) : cfg.base_energy;
}

// Exact uniform draw inside an annular sector via polar inverse CDF.
// M1 samples the whole inner disc.
inline Point sample_point_in_region(const Zoning& z, RegionId region, RngStream& rng) {
    const int corona = corona_of(region);
    const double r_in = (corona - 1) * z.beta;
    const double r_out = corona * z.beta;
    const double r = std::sqrt(rng.uniform(r_in * r_in, r_out * r_out));
    double theta;
    if (region == RegionId::M1) {
        theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    } else {
        const double q = quadrant_of(region);
        theta = rng.uniform(q * std::numbers::pi / 2.0, (q + 1) * std::numbers::pi / 2.0);
    }
    return {z.center.x + r * std::cos(theta), z.center.y + r * std::sin(theta)};
}

// Deploys the configured node count into each region. Ids are dense,
// assigned in region order M1..M9, so deployment is a pure function of
// (cfg, z, rng state).
inline std::vector<Node> deploy(const SimConfig& cfg, const Zoning& z, RngStream& rng) {
    std::vector<Node> nodes;
    int id = 0;
    for (int i = 0; i < kRegionCount; ++i) {
        const RegionId region = region_from_index(i);
        const int count = cfg.counts_per_region[i];
        if (count < 0) throw ConfigError("negative node count for region " + to_string(region));
        if (count > 0 && !z.has_region(region))
            throw ConfigError("cannot deploy into " + to_string(region) + " with eta=" +
                              std::to_string(z.eta));
        for (int n = 0; n < count; ++n) {
            Node node;
            node.id = id++;
            node.pos = sample_point_in_region(z, region, rng);
            node.region = region;
            node.initial_energy = initial_energy(cfg, region);
            node.residual_energy = node.initial_energy;
            node.alive = node.residual_energy > 0.0;
            nodes.push_back(node);
        }
    }
    return nodes;
}

} // namespace hzsim
