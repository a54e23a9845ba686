#pragma once

#include <span>
#include <string>

#include "hzsim/errors.hpp"
#include "hzsim/rng.hpp"

namespace hzsim {

// Lossy link: independent Bernoulli drop per transmission attempt, plus
// speed-of-light propagation delay over the path.
struct ChannelParams {
    double p_drop = 0.3;
    double light_speed = 2.998e8; // m/s
};

enum class Delivery { Delivered, Dropped };

inline Delivery attempt_delivery(const ChannelParams& cp, RngStream& rng) {
    return rng.bernoulli(cp.p_drop) ? Delivery::Dropped : Delivery::Delivered;
}

// Total propagation delay of a multi-hop path, in seconds.
inline double propagation_delay(const ChannelParams& cp, std::span<const double> hop_distances) {
    double total = 0.0;
    for (double d : hop_distances) {
        if (d < 0.0) throw NegativeInput("propagation_delay: negative hop distance " + std::to_string(d));
        total += d;
    }
    return total / cp.light_speed;
}

inline double propagation_delay(const ChannelParams& cp, std::initializer_list<double> hops) {
    return propagation_delay(cp, std::span<const double>(hops.begin(), hops.size()));
}

} // namespace hzsim
