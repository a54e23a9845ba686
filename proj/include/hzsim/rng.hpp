#pragma once

#include <cstdint>
#include <random>

namespace hzsim {

// splitmix64 finalizer, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum class StreamKind : std::uint64_t {
    Deploy  = 0x01,
    Channel = 0x02,
    Node    = 0x03,
};

// Deterministic random stream. mt19937_64 is fully specified by the
// standard, and uniform doubles are derived by hand so two builds of the
// same seed produce bit-identical draws.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Independent sub-stream of a run seed. Streams with distinct
    // (kind, index) pairs never collide.
    static RngStream derive(std::uint64_t seed, StreamKind kind, std::uint64_t index = 0) {
        std::uint64_t s = splitmix64(seed ^ (static_cast<std::uint64_t>(kind) * 0xd1b54a32d192ed03ULL));
        s = splitmix64(s ^ (index * 0x2545f4914f6cdd1dULL));
        return RngStream(s);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    // True with probability p; p <= 0 never, p >= 1 always.
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace hzsim
