#pragma once

#include <cstdint>

namespace nomacov {

/// Counter-based generator: every variate is a pure function of
/// (seed, trial, stream), so any (trial, device, tier, draw) tuple maps to
/// its own substream and results do not depend on thread scheduling.
/// Mixing is the SplitMix64 finalizer applied over the keyed counter.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t bits(std::uint64_t trial, std::uint64_t stream) const {
        std::uint64_t h = seed_ + 0x9E3779B97F4A7C15ULL * (trial + 1);
        h = mix(h);
        h = mix(h ^ (0xBF58476D1CE4E5B9ULL * (stream + 1)));
        return mix(h);
    }

    /// Uniform double in (0, 1].
    double uniform(std::uint64_t trial, std::uint64_t stream) const {
        return ((bits(trial, stream) >> 11) + 1) * 0x1.0p-53;
    }

    /// Stream ids: tier in {0 terrestrial, 1 aerial}, device in [1, M],
    /// draw 0 is the distance, draws 1.. are fading components.
    static std::uint64_t stream_id(int tier, int device, int draw) {
        return (static_cast<std::uint64_t>(tier) << 40) |
               (static_cast<std::uint64_t>(device) << 20) |
               static_cast<std::uint64_t>(draw);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace nomacov
