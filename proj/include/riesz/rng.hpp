#pragma once

#include <cmath>
#include <cstdint>

namespace riesz {

/// Counter-based splittable generator. The state is a pure function of
/// (seed, stream, counter), so independent streams can be handed to parallel
/// workers and replayed: draw k of stream s is the same no matter who asks.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed ^ 0x9e3779b97f4a7c15ULL) ^ stream)) {}

    std::uint64_t next_u64() { return mix(key_ ^ mix(counter_++ + 0x632be59bd9b4e019ULL)); }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (pairs cached).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Stream ids keep distinct consumers of the same user seed decorrelated.
namespace rng_stream {
inline constexpr std::uint64_t kSampleUniform = 1;
inline constexpr std::uint64_t kMinimizeRestartBase = 0x100;
inline constexpr std::uint64_t kCapCenters = 2;
inline constexpr std::uint64_t kVerify = 3;
}  // namespace rng_stream

}  // namespace riesz
