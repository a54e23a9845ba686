#pragma once

#include <cmath>
#include <string>

#include "hzsim/errors.hpp"

namespace hzsim {

// First-order radio model parameters. Energies are per-bit; eps_fs and
// eps_mp are the free-space (d^2) and multipath (d^4) amplifier
// coefficients, e_da the per-bit per-signal aggregation cost.
struct RadioParams {
    double e_elec = 50e-9;      // J/bit
    double eps_fs = 10e-12;     // J/bit/m^2
    double eps_mp = 0.0013e-12; // J/bit/m^4
    double e_da   = 5e-9;       // J/bit/signal
};

// Crossover distance between the d^2 and d^4 amplifier laws.
inline double threshold_distance(const RadioParams& rp) {
    return std::sqrt(rp.eps_fs / rp.eps_mp);
}

// Energy to transmit k bits over distance d. The multipath branch is
// taken at d == threshold_distance.
inline double tx_energy(const RadioParams& rp, double k, double d) {
    if (k < 0.0) throw NegativeInput("tx_energy: negative bit count " + std::to_string(k));
    if (d < 0.0) throw NegativeInput("tx_energy: negative distance " + std::to_string(d));
    if (d < threshold_distance(rp))
        return rp.e_elec * k + rp.eps_fs * k * d * d;
    return rp.e_elec * k + rp.eps_mp * k * d * d * d * d;
}

inline double rx_energy(const RadioParams& rp, double k) {
    if (k < 0.0) throw NegativeInput("rx_energy: negative bit count " + std::to_string(k));
    return rp.e_elec * k;
}

// Cost for a cluster head to fuse n_signals received packets of k bits.
inline double aggregation_energy(const RadioParams& rp, double k, long long n_signals) {
    if (k < 0.0) throw NegativeInput("aggregation_energy: negative bit count " + std::to_string(k));
    if (n_signals < 0) throw NegativeInput("aggregation_energy: negative signal count");
    return rp.e_da * k * static_cast<double>(n_signals);
}

} // namespace hzsim
