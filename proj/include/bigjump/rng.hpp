#pragma once

#include <cstdint>

namespace bigjump {

/// SplitMix64: tiny 64-bit generator used only to seed other generators.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Counter-derived random stream: xoshiro256** seeded through SplitMix64.
///
/// Stream derivation contract (relied on for reproducible parallel runs):
/// stream k of master seed s is xoshiro256** whose four state words are the
/// first four outputs of SplitMix64(s XOR 0x9E3779B97F4A7C15 * (k + 1)).
/// A (seed, stream) pair therefore identifies the whole sample path, no
/// matter which worker thread consumes it.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
        for (auto& w : state_) w = sm.next();
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double next_unit_open() { return 1.0 - next_unit(); }

    /// Uniform on the open interval (0, 1); endpoints unreachable.
    double next_unit_oo() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace bigjump
